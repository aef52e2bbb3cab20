use crate::cost::DesignKind;
use crate::fpni::read_out;
use crate::harness::{fmt_float, workload, write_output, RunConfig};
use crate::lattice::{build_lattice, simulate};
use crate::{Error, Result, Score};

pub const SWEEP_HEADER: &str = "read_len,tap_row,fallback,flexible_score,rebuilt_score,wire_delay_s,latency_s";

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub read_len: usize,
    pub tap_row: usize,
    pub fallback: bool,
    /// Read off the shared lattice through the tap network.
    pub flexible_score: Score,
    /// Output of a lattice built for exactly this read length.
    pub rebuilt_score: Score,
    pub wire_delay_s: f64,
    pub latency_s: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub rows: Vec<SweepRow>,
    pub path: std::path::PathBuf,
}

impl SweepSummary {
    pub fn matched(&self) -> usize {
        self.rows.iter().filter(|r| r.flexible_score == r.rebuilt_score).count()
    }

    pub fn fallbacks(&self) -> usize {
        self.rows.iter().filter(|r| r.fallback).count()
    }
}

/// Reads every length `1..=fixed_dim` off one lattice and compares each with
/// a lattice rebuilt for that length. Writes `sweep.csv`.
pub fn run_sweep(cfg: &RunConfig) -> Result<SweepSummary> {
    let d = cfg.fixed_dim;
    let (query, reference) = workload(cfg, d)?;
    let mut lattice = build_lattice(d, cfg.scheme)?;
    if let Some(taps) = &cfg.taps {
        lattice = lattice.with_taps(taps.iter().copied())?;
    }
    let map = simulate(&lattice, &query, &reference, cfg.seed)?;
    let model = cfg.cost_model();

    let mut rows = Vec::with_capacity(d);
    let mut csv = format!("{SWEEP_HEADER}\n");
    for len in 1..=d {
        let out = read_out(&map, d, len, &cfg.fpni)?;
        let dedicated = build_lattice(len, cfg.scheme)?;
        let rebuilt = simulate(&dedicated, &query.prefix(len)?, &reference.prefix(len)?, cfg.seed)?;
        let row = SweepRow {
            read_len: len,
            tap_row: out.selection.tap_row,
            fallback: out.selection.fallback.is_some(),
            flexible_score: out.selection.value,
            rebuilt_score: rebuilt.global_out(),
            wire_delay_s: out.wire_delay_s,
            latency_s: model.latency_estimate(cfg.profiles.get(DesignKind::Proposed), len, d, Some(&map))?,
        };
        if !row.fallback && row.flexible_score != row.rebuilt_score {
            return Err(Error::Verification(format!(
                "read length {len}: flexible tap {} but rebuilt lattice {}",
                row.flexible_score, row.rebuilt_score
            )));
        }
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.read_len,
            row.tap_row,
            row.fallback,
            row.flexible_score,
            row.rebuilt_score,
            fmt_float(row.wire_delay_s),
            fmt_float(row.latency_s)
        ));
        rows.push(row);
    }
    let path = write_output(&cfg.out_dir, "sweep.csv", &csv)?;
    Ok(SweepSummary { rows, path })
}
