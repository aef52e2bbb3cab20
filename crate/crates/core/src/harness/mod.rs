//! Experiment drivers behind the `memrace` command line tool.
//!
//! Every driver is a pure function of its [`RunConfig`]: random workloads
//! come from a ChaCha generator seeded with `rng_seed`, and records are
//! sorted before they are written, so identical configs produce
//! byte-identical output.

mod align;
mod bench;
mod config;
mod fasta;
mod records;
mod sweep;
mod verify;

use std::path::Path;

use rand::Rng;

use crate::alignment::{Nucleotide, Sequence};
use crate::{Error, Result};

pub use align::run_align;
pub use bench::{run_bench, BENCH_FILES};
pub use config::{Mode, RunConfig, DEFAULT_READ_LENS, MIN_SEED_LEN};
pub use fasta::{parse_fasta, parse_fasta_str, FastaRecord};
pub use records::{BenchRecord, BENCH_HEADER};
pub use sweep::{run_sweep, SweepRow, SweepSummary, SWEEP_HEADER};
pub use verify::{run_verify, VerifyReport};

pub(crate) fn random_sequence(rng: &mut impl Rng, len: usize) -> Sequence {
    let bases = (0..len).map(|_| Nucleotide::ALL[rng.gen_range(0..4)]).collect();
    Sequence::from_bases(bases).expect("len >= 1")
}

/// Float formatting shared by every CSV: six significant digits.
pub(crate) fn fmt_float(v: f64) -> String {
    format!("{v:.5e}")
}

pub(crate) fn write_output(dir: &Path, name: &str, contents: &str) -> Result<std::path::PathBuf> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

/// Query/reference pair of length `len` used by `bench` and `sweep`: the
/// first records of `--reads`/`--ref` when given, otherwise seeded random.
pub(crate) fn workload(cfg: &RunConfig, len: usize) -> Result<(Sequence, Sequence)> {
    match (&cfg.reads, &cfg.reference) {
        (Some(reads), Some(reference)) => {
            let take = |path: &Path| -> Result<Sequence> {
                let rec = parse_fasta(path)?.remove(0);
                rec.seq.prefix(len).map_err(|_| {
                    Error::Config(format!(
                        "{}: first record `{}` is shorter than {len} bases",
                        path.display(),
                        rec.name
                    ))
                })
            };
            Ok((take(reads)?, take(reference)?))
        }
        (None, None) => {
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(cfg.rng_seed);
            Ok((random_sequence(&mut rng, len), random_sequence(&mut rng, len)))
        }
        _ => Err(Error::Config("--reads and --ref must be given together".into())),
    }
}
