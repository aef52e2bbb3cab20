use crate::cost::{area_estimate, AreaSource, CostModel, DesignKind, ProfileSet};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CostRow {
    pub kind: DesignKind,
    pub read_len: usize,
    /// Dimension the hardware is built for.
    pub fixed_dim: usize,
    pub area: f64,
    pub area_source: AreaSource,
    pub latency_s: f64,
    pub power_w: f64,
    /// `latency(kind) / latency(proposed)`: how much faster the proposed
    /// design is than this row's design.
    pub speedup: f64,
    /// `power(kind) / power(proposed)`.
    pub power_ratio: f64,
}

/// Rows sorted by design kind, then read length.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CostReport {
    pub rows: Vec<CostRow>,
}

impl CostReport {
    pub fn row(&self, kind: DesignKind, read_len: usize) -> Option<&CostRow> {
        self.rows.iter().find(|r| r.kind == kind && r.read_len == read_len)
    }

    /// Speedup column for one design, in read-length order.
    pub fn speedups(&self, kind: DesignKind) -> Vec<(usize, f64)> {
        self.rows.iter().filter(|r| r.kind == kind).map(|r| (r.read_len, r.speedup)).collect()
    }
}

/// Compares the three designs on hardware fixed at `fixed_dim`.
pub fn speedup_report(
    model: &CostModel,
    read_lens: &[usize],
    profiles: &ProfileSet,
    fixed_dim: usize,
) -> Result<CostReport> {
    build(model, read_lens, profiles, |_| fixed_dim)
}

impl CostReport {
    /// Compares the designs with each one sized exactly to the read.
    pub fn dedicated(model: &CostModel, read_lens: &[usize], profiles: &ProfileSet) -> Result<CostReport> {
        build(model, read_lens, profiles, |l| l)
    }
}

fn build(
    model: &CostModel,
    read_lens: &[usize],
    profiles: &ProfileSet,
    dim_for: impl Fn(usize) -> usize,
) -> Result<CostReport> {
    if read_lens.is_empty() {
        return Err(Error::invalid("read length list must not be empty"));
    }
    let mut lens = read_lens.to_vec();
    lens.sort_unstable();
    lens.dedup();

    let mut rows = Vec::with_capacity(3 * lens.len());
    for kind in DesignKind::ALL {
        let profile = profiles.get(kind);
        for &read_len in &lens {
            let fixed_dim = dim_for(read_len);
            let latency_s = model.latency_estimate(profile, read_len, fixed_dim, None)?;
            let base_latency = model.latency_estimate(&profiles.proposed, read_len, fixed_dim, None)?;
            let power_w = model.power(profile, read_len, fixed_dim)?;
            let base_power = model.power(&profiles.proposed, read_len, fixed_dim)?;
            let area = area_estimate(kind, fixed_dim, profile)?;
            rows.push(CostRow {
                kind,
                read_len,
                fixed_dim,
                area: area.value,
                area_source: area.source,
                latency_s,
                power_w,
                speedup: latency_s / base_latency,
                power_ratio: power_w / base_power,
            });
        }
    }
    Ok(CostReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_sorted_and_baseline_is_one() {
        let m = CostModel::default();
        let r = speedup_report(&m, &[64, 1, 8, 8], &ProfileSet::default(), 131).unwrap();
        assert_eq!(r.rows.len(), 9);
        let keys: Vec<_> = r.rows.iter().map(|x| (x.kind, x.read_len)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        for row in r.rows.iter().filter(|x| x.kind == DesignKind::Proposed) {
            assert_eq!(row.speedup, 1.0);
            assert_eq!(row.power_ratio, 1.0);
        }
        assert!(r.rows.iter().all(|x| x.speedup > 0.0));
    }

    #[test]
    fn race_speedup_non_increasing_in_read_length() {
        let m = CostModel::default();
        let lens: Vec<usize> = (1..=131).collect();
        let r = speedup_report(&m, &lens, &ProfileSet::default(), 131).unwrap();
        let col = r.speedups(DesignKind::RaceCmos);
        assert!(col.windows(2).all(|w| w[1].1 <= w[0].1));
        assert!(col[0].1 > col[130].1);
    }

    #[test]
    fn dedicated_report_uses_table_areas() {
        let m = CostModel::default();
        let r = CostReport::dedicated(&m, &[1, 2, 4], &ProfileSet::default()).unwrap();
        assert_eq!(r.row(DesignKind::Systolic, 2).unwrap().area, 1.18e5);
        assert_eq!(r.row(DesignKind::RaceCmos, 4).unwrap().area_source, AreaSource::Table);
        assert_eq!(r.row(DesignKind::Proposed, 4).unwrap().fixed_dim, 4);
    }

    #[test]
    fn empty_input_rejected() {
        assert!(speedup_report(&CostModel::default(), &[], &ProfileSet::default(), 131).is_err());
    }
}
