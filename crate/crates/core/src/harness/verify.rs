use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alignment::{dp_fill, DpMatrix, ScoringScheme, SeedContext, Sequence};
use crate::config::KeyValues;
use crate::harness::{random_sequence, RunConfig};
use crate::lattice::{build_lattice, simulate};
use crate::{Error, Result, Score};

const GOLDEN: &str = include_str!("../../data/golden_gattaca.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub passed: usize,
    pub total: usize,
    pub golden_ok: bool,
    pub transcript: Vec<String>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.golden_ok && self.passed == self.total
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

struct Case {
    query: Sequence,
    reference: Sequence,
    scheme: ScoringScheme,
    seed: SeedContext,
}

impl Case {
    fn reproducer(&self) -> String {
        format!(
            "memrace align --match {} --mismatch {} --gap {} --w0 {} --allow-any-dim --fixed-dim {} {} {}",
            self.scheme.t_match,
            self.scheme.t_mismatch,
            self.scheme.t_gap,
            self.seed.w0,
            self.query.len(),
            self.query,
            self.reference
        )
    }

    /// Lattice vs DP; returns a description of the first disagreement.
    fn check(&self, inject_fault: bool) -> Result<Option<String>> {
        let dp = dp_fill(&self.query, &self.reference, self.scheme, self.seed);
        let mut lattice = build_lattice(self.query.len(), self.scheme)?;
        if inject_fault {
            let mut faulty = self.scheme;
            faulty.t_match += 1;
            lattice.reprogram(faulty);
        }
        let map = simulate(&lattice, &self.query, &self.reference, self.seed)?;
        if let Some((i, j)) = map.first_mismatch(&dp.matrix) {
            return Ok(Some(format!(
                "cell ({i}, {j}): lattice {:?} vs dp {:?}",
                map.arrival(i, j),
                dp.matrix.get(i, j)
            )));
        }
        let best = dp.outputs.expect("filled").local_best.score;
        if map.global_out() != best {
            return Ok(Some(format!("output: lattice {} vs dp {best}", map.global_out())));
        }
        Ok(None)
    }
}

fn random_case(rng: &mut ChaCha8Rng) -> Case {
    let len = rng.gen_range(1..=64);
    let scheme = ScoringScheme::new(rng.gen_range(0..=1), rng.gen_range(1..=4), rng.gen_range(1..=3));
    let seed = SeedContext::new(rng.gen_range(0..=16));
    Case { query: random_sequence(rng, len), reference: random_sequence(rng, len), scheme, seed }
}

fn golden_case() -> Result<(Case, DpMatrix, [Score; 5])> {
    let kv = KeyValues::parse(GOLDEN, "golden_gattaca.txt")?;
    let query: Sequence = kv.require::<String>("query")?.parse()?;
    let reference: Sequence = kv.require::<String>("reference")?.parse()?;
    let scheme = ScoringScheme::new(kv.require("match")?, kv.require("mismatch")?, kv.require("gap")?);
    let seed = SeedContext::new(kv.require("w0")?);
    let rows = (0..=query.len())
        .map(|i| {
            kv.require::<String>(&format!("row.{i}"))?
                .split_whitespace()
                .map(|v| v.parse().map_err(|_| Error::Config(format!("golden row {i}: bad value `{v}`"))))
                .collect()
        })
        .collect::<Result<Vec<Vec<Score>>>>()?;
    let expected = [
        kv.require("local_best.score")?,
        kv.require("local_best.row")?,
        kv.require("local_best.col")?,
        kv.require("global_score")?,
        kv.require("max_offset")?,
    ];
    Ok((Case { query, reference, scheme, seed }, DpMatrix::from_rows(rows)?, expected))
}

fn check_golden(inject_fault: bool) -> Result<Option<String>> {
    let (case, matrix, expected) = golden_case()?;
    let dp = dp_fill(&case.query, &case.reference, case.scheme, case.seed);
    if dp.matrix != matrix {
        return Ok(Some("dp matrix differs from golden file".into()));
    }
    let out = dp.outputs.expect("filled");
    let got = [
        out.local_best.score,
        out.local_best.row as Score,
        out.local_best.col as Score,
        out.global_score,
        out.max_offset as Score,
    ];
    if got != expected {
        return Ok(Some(format!("outputs {got:?} differ from golden {expected:?}")));
    }
    case.check(inject_fault)
}

/// Golden-file check plus `cfg.cases` seeded random lattice-vs-DP checks.
pub fn run_verify(cfg: &RunConfig) -> Result<VerifyReport> {
    let mut transcript = Vec::new();
    let golden_ok = match check_golden(cfg.inject_fault)? {
        None => {
            transcript.push("golden GATTACA/GCATGCT: ok".to_string());
            true
        }
        Some(why) => {
            transcript.push(format!("golden GATTACA/GCATGCT: FAILED ({why})"));
            false
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let mut passed = 0;
    for idx in 0..cfg.cases {
        let case = random_case(&mut rng);
        match case.check(cfg.inject_fault)? {
            None => passed += 1,
            Some(why) => {
                transcript.push(format!("case {idx} FAILED: {why}"));
                transcript.push(format!("  reproduce: {}", case.reproducer()));
            }
        }
    }
    transcript.push(format!("{passed}/{} equivalence checks passed", cfg.cases));
    Ok(VerifyReport { passed, total: cfg.cases, golden_ok, transcript })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Mode;

    fn config(cases: usize, seed: u64) -> RunConfig {
        let mut c = RunConfig::new(Mode::Verify);
        c.cases = cases;
        c.rng_seed = seed;
        c
    }

    #[test]
    fn golden_file_parses_and_passes() {
        assert_eq!(check_golden(false).unwrap(), None);
    }

    #[test]
    fn small_run_passes() {
        let r = run_verify(&config(50, 7)).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.transcript.last().unwrap(), "50/50 equivalence checks passed");
    }

    #[test]
    fn injected_fault_is_caught() {
        let mut c = config(20, 7);
        c.inject_fault = true;
        let r = run_verify(&c).unwrap();
        assert!(!r.golden_ok);
        assert!(r.passed < 20);
        assert_eq!(r.exit_code(), 1);
        assert!(r.transcript.iter().any(|l| l.contains("reproduce: memrace align")));
    }
}
