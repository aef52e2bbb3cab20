use std::fmt;

use crate::cost::{DesignKind, DeviceProfile};
use crate::{Error, Result};

/// Embedded reference area table.
pub const AREA_TABLE: &str = include_str!("../../data/area_table.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AreaSource {
    /// `per_cell_area * L^2`.
    Model,
    /// Exact tabulated value.
    Table,
    /// Log-log interpolation (or extrapolation) between tabulated points.
    Interpolated,
}

impl fmt::Display for AreaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AreaSource::Model => "model",
            AreaSource::Table => "table",
            AreaSource::Interpolated => "interpolated",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaEstimate {
    pub value: f64,
    pub source: AreaSource,
}

/// Rows of `(read_len, proposed, systolic, race_cmos)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AreaTable {
    rows: Vec<(usize, [f64; 3])>,
}

impl AreaTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Config(format!("area table line {}: malformed row", idx + 1));
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() != 4 {
                return Err(bad());
            }
            let len: usize = cols[0].parse().map_err(|_| bad())?;
            let mut values = [0.0; 3];
            for (slot, col) in values.iter_mut().zip(&cols[1..]) {
                *slot = col.parse().map_err(|_| bad())?;
                if *slot <= 0.0 {
                    return Err(bad());
                }
            }
            rows.push((len, values));
        }
        if rows.len() < 2 || rows.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Config("area table needs two or more rows in increasing order".into()));
        }
        Ok(AreaTable { rows })
    }

    pub fn reference() -> Self {
        Self::parse(AREA_TABLE).expect("embedded area table is well formed")
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, [f64; 3])> + '_ {
        self.rows.iter().copied()
    }

    fn column(kind: DesignKind) -> usize {
        match kind {
            DesignKind::Proposed => 0,
            DesignKind::Systolic => 1,
            DesignKind::RaceCmos => 2,
        }
    }

    /// Tabulated value, or a piecewise power law through neighbouring points.
    pub fn lookup(&self, kind: DesignKind, read_len: usize) -> AreaEstimate {
        let col = Self::column(kind);
        if let Some((_, v)) = self.rows.iter().find(|(l, _)| *l == read_len) {
            return AreaEstimate { value: v[col], source: AreaSource::Table };
        }
        // Segment containing read_len; the end segments extend outwards.
        let seg = self
            .rows
            .windows(2)
            .position(|w| read_len < w[1].0)
            .unwrap_or(self.rows.len() - 2);
        let ((l0, v0), (l1, v1)) = (self.rows[seg], self.rows[seg + 1]);
        let (x0, x1, x) = ((l0 as f64).ln(), (l1 as f64).ln(), (read_len as f64).ln());
        let (y0, y1) = (v0[col].ln(), v1[col].ln());
        let value = (y0 + (y1 - y0) * (x - x0) / (x1 - x0)).exp();
        AreaEstimate { value, source: AreaSource::Interpolated }
    }
}

/// Area of a `read_len x read_len` design.
///
/// The proposed lattice is modelled as `per_cell_area` per basic cell; the
/// baselines come from the reference table.
pub fn area_estimate(kind: DesignKind, read_len: usize, profile: &DeviceProfile) -> Result<AreaEstimate> {
    if read_len == 0 {
        return Err(Error::invalid("read length must be positive"));
    }
    Ok(match kind {
        DesignKind::Proposed => AreaEstimate {
            value: profile.per_cell_area * (read_len * read_len) as f64,
            source: AreaSource::Model,
        },
        _ => AreaTable::reference().lookup(kind, read_len),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(kind: DesignKind) -> DeviceProfile {
        DeviceProfile::default_for(kind)
    }

    #[test]
    fn proposed_is_quadratic_in_read_length() {
        let p = profile(DesignKind::Proposed);
        assert_eq!(area_estimate(DesignKind::Proposed, 1, &p).unwrap().value, 851.0);
        assert_eq!(area_estimate(DesignKind::Proposed, 2, &p).unwrap().value, 3404.0);
        assert_eq!(area_estimate(DesignKind::Proposed, 131, &p).unwrap().value, 851.0 * 131.0 * 131.0);
    }

    #[test]
    fn baselines_exact_at_table_points() {
        let s = profile(DesignKind::Systolic);
        let est = area_estimate(DesignKind::Systolic, 4, &s).unwrap();
        assert_eq!(est, AreaEstimate { value: 2.34e5, source: AreaSource::Table });
        let r = profile(DesignKind::RaceCmos);
        assert_eq!(area_estimate(DesignKind::RaceCmos, 2, &r).unwrap().value, 2.09e4);
    }

    #[test]
    fn interpolation_is_log_log_linear() {
        let t = AreaTable::reference();
        let mid = t.lookup(DesignKind::Systolic, 3);
        assert_eq!(mid.source, AreaSource::Interpolated);
        assert!(mid.value > 1.18e5 && mid.value < 2.34e5);
        // Slope between 2 and 4, extended to 8.
        let slope = (2.34e5f64 / 1.18e5).ln() / 2f64.ln();
        let want = 2.34e5 * 2f64.powf(slope);
        let got = t.lookup(DesignKind::Systolic, 8).value;
        assert!((got - want).abs() / want < 1e-12);
    }

    #[test]
    fn rejects_zero_length_and_bad_tables() {
        assert!(area_estimate(DesignKind::Proposed, 0, &profile(DesignKind::Proposed)).is_err());
        assert!(AreaTable::parse("1 2 3\n").is_err());
        assert!(AreaTable::parse("1 1 1 1\n").is_err());
        assert!(AreaTable::parse("2 1 1 1\n1 1 1 1\n").is_err());
    }
}
