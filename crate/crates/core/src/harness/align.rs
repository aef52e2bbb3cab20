use crate::alignment::{dp_fill, Sequence};
use crate::fpni::select_output;
use crate::harness::{parse_fasta, FastaRecord, RunConfig};
use crate::lattice::{build_lattice, simulate_read};
use crate::{Error, Result};

/// Longest alignment whose full matrix is printed on request.
const MATRIX_PRINT_LIMIT: usize = 16;

/// Aligns each read against its reference window and returns one report
/// line per pair, in input order (plus the matrix when requested).
///
/// Equal lengths are required so the pair fits the square lattice; with
/// `rectangular` the DP alone aligns sequences of any lengths.
pub fn run_align(cfg: &RunConfig) -> Result<Vec<String>> {
    let pairs = input_pairs(cfg)?;
    let mut lattice = build_lattice(cfg.fixed_dim, cfg.scheme)?;
    if let Some(taps) = &cfg.taps {
        lattice = lattice.with_taps(taps.iter().copied())?;
    }

    let mut lines = Vec::with_capacity(pairs.len());
    for (name, read, window) in pairs {
        let dp = dp_fill(&read, &window, cfg.scheme, cfg.seed);
        let out = dp.outputs.expect("filled");
        let score = if cfg.rectangular {
            out.local_best.score
        } else {
            let map = simulate_read(&lattice, &read, &window, cfg.seed)?;
            if let Some((i, j)) = map.first_mismatch(&dp.matrix) {
                return Err(Error::Verification(format!(
                    "{name}: lattice and DP disagree at cell ({i}, {j})"
                )));
            }
            select_output(map.row_taps(), read.len())?.value
        };
        lines.push(format!(
            "{name}\tlen={}\tscore={score}\trow={}\tcol={}\tmax_offset={}\tglobal={}",
            read.len(),
            out.local_best.row,
            out.local_best.col,
            out.max_offset,
            out.global_score
        ));
        if cfg.print_matrix && read.len().max(window.len()) <= MATRIX_PRINT_LIMIT {
            lines.extend(dp.matrix.to_string().lines().map(str::to_string));
        }
    }
    Ok(lines)
}

fn input_pairs(cfg: &RunConfig) -> Result<Vec<(String, Sequence, Sequence)>> {
    let raw: Vec<(String, Sequence, Sequence)> = match (&cfg.pair, &cfg.reads, &cfg.reference) {
        (Some((q, r)), None, None) => vec![("pair1".into(), q.parse()?, r.parse()?)],
        (None, Some(reads), Some(reference)) => {
            let reads = parse_fasta(reads)?;
            let refs = parse_fasta(reference)?;
            let pick = |i: usize| -> &FastaRecord { if refs.len() == reads.len() { &refs[i] } else { &refs[0] } };
            reads
                .iter()
                .enumerate()
                .map(|(i, rec)| (rec.name.clone(), rec.seq.clone(), pick(i).seq.clone()))
                .collect()
        }
        _ => {
            return Err(Error::Config(
                "align needs either two sequences or both --reads and --ref".into(),
            ))
        }
    };

    raw.into_iter()
        .map(|(name, read, reference)| {
            if cfg.rectangular {
                return Ok((name, read, reference));
            }
            if read.len() > cfg.fixed_dim {
                return Err(Error::Config(format!(
                    "{name}: read length {} exceeds the lattice ({}); use --rect for DP-only alignment",
                    read.len(),
                    cfg.fixed_dim
                )));
            }
            // Reference window of the read's length.
            let window = reference.prefix(read.len()).map_err(|_| {
                Error::Config(format!(
                    "{name}: unequal lengths ({} vs {}); the lattice needs a square matrix, use --rect for DP-only alignment",
                    read.len(),
                    reference.len()
                ))
            })?;
            Ok((name, read, window))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Mode;

    fn cfg(q: &str, r: &str) -> RunConfig {
        let mut c = RunConfig::new(Mode::Align);
        c.pair = Some((q.into(), r.into()));
        c
    }

    #[test]
    fn single_match() {
        let lines = run_align(&cfg("A", "A")).unwrap();
        assert_eq!(lines, ["pair1\tlen=1\tscore=0\trow=1\tcol=1\tmax_offset=0\tglobal=0"]);
    }

    #[test]
    fn golden_pair() {
        let lines = run_align(&cfg("GATTACA", "GCATGCT")).unwrap();
        assert_eq!(lines, ["pair1\tlen=7\tscore=3\trow=4\tcol=7\tmax_offset=3\tglobal=6"]);
    }

    #[test]
    fn unequal_lengths_need_rect() {
        let err = run_align(&cfg("ACGT", "AC")).unwrap_err();
        assert!(err.to_string().contains("--rect"));
        let mut c = cfg("ACGT", "AC");
        c.rectangular = true;
        assert_eq!(run_align(&c).unwrap().len(), 1);
    }

    #[test]
    fn longer_reference_is_windowed() {
        let lines = run_align(&cfg("ACG", "ACGTTT")).unwrap();
        assert!(lines[0].contains("len=3\tscore=0"));
    }

    #[test]
    fn matrix_printed_on_request() {
        let mut c = cfg("AC", "AC");
        c.print_matrix = true;
        assert_eq!(run_align(&c).unwrap().len(), 4);
    }
}
