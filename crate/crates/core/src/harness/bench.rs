use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::alignment::dp_fill;
use crate::cost::{speedup_report, CostReport, DesignKind};
use crate::fpni::select_output;
use crate::harness::records::render;
use crate::harness::{workload, write_output, BenchRecord, RunConfig};
use crate::lattice::{build_lattice, simulate};
use crate::{Error, Result, Score};

/// Files written by [`run_bench`], in order.
pub const BENCH_FILES: [&str; 4] = ["latency.csv", "speedup_fixed131.csv", "power.csv", "area.csv"];

/// Writes the four comparison CSVs into `cfg.out_dir`.
///
/// `latency.csv`, `power.csv` and `area.csv` size every design to the read;
/// `speedup_fixed131.csv` fixes the hardware at `cfg.fixed_dim`. Latencies
/// use the worst-case (data-independent) arrival; the score column is the
/// seed-extension score of the workload's read-length prefix.
pub fn run_bench(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    let mut lens = cfg.read_lens.clone();
    lens.sort_unstable();
    lens.dedup();
    let scores = workload_scores(cfg, &lens)?;

    let model = cfg.cost_model();
    let dedicated = CostReport::dedicated(&model, &lens, &cfg.profiles)?;
    let fixed = speedup_report(&model, &lens, &cfg.profiles, cfg.fixed_dim)?;
    let records = |report: &CostReport| -> Vec<BenchRecord> {
        report
            .rows
            .iter()
            .map(|row| BenchRecord::from_row(row, scores[&(row.kind, row.read_len)]))
            .collect()
    };
    let dedicated_csv = render(&records(&dedicated));
    let fixed_csv = render(&records(&fixed));

    let contents = [&dedicated_csv, &fixed_csv, &dedicated_csv, &dedicated_csv];
    BENCH_FILES
        .iter()
        .zip(contents)
        .map(|(name, text)| write_output(&cfg.out_dir, name, text))
        .collect()
}

/// Scores per (design, read length). The proposed design reads its taps off
/// one full-size lattice run; the baselines run the DP on the prefixes.
fn workload_scores(cfg: &RunConfig, lens: &[usize]) -> Result<BTreeMap<(DesignKind, usize), Score>> {
    let (query, reference) = workload(cfg, cfg.fixed_dim)?;
    let mut lattice = build_lattice(cfg.fixed_dim, cfg.scheme)?;
    if let Some(taps) = &cfg.taps {
        lattice = lattice.with_taps(taps.iter().copied())?;
    }
    let map = simulate(&lattice, &query, &reference, cfg.seed)?;

    let mut scores = BTreeMap::new();
    for &len in lens {
        let dp = dp_fill(&query.prefix(len)?, &reference.prefix(len)?, cfg.scheme, cfg.seed);
        let expected = dp.outputs.expect("filled").local_best.score;
        let tap = select_output(map.row_taps(), len)?;
        if tap.fallback.is_none() && tap.value != expected {
            return Err(Error::Verification(format!(
                "read length {len}: tap reads {} but the DP gives {expected}",
                tap.value
            )));
        }
        scores.insert((DesignKind::Proposed, len), tap.value);
        scores.insert((DesignKind::Systolic, len), expected);
        scores.insert((DesignKind::RaceCmos, len), expected);
    }
    Ok(scores)
}
