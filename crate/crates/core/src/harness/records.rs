use crate::cost::{AreaSource, CostRow, DesignKind};
use crate::harness::fmt_float;
use crate::Score;

/// Column order of every bench CSV.
pub const BENCH_HEADER: &str = "kind,read_len,score,latency_s,area,power_w,speedup,power_ratio,area_source";

/// One bench CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub kind: DesignKind,
    pub read_len: usize,
    pub score: Score,
    pub latency_s: f64,
    pub area: f64,
    pub power_w: f64,
    pub speedup: f64,
    pub power_ratio: f64,
    pub area_source: AreaSource,
}

impl BenchRecord {
    pub fn from_row(row: &CostRow, score: Score) -> Self {
        BenchRecord {
            kind: row.kind,
            read_len: row.read_len,
            score,
            latency_s: row.latency_s,
            area: row.area,
            power_w: row.power_w,
            speedup: row.speedup,
            power_ratio: row.power_ratio,
            area_source: row.area_source,
        }
    }

    pub fn to_csv(&self) -> String {
        [
            self.kind.to_string(),
            self.read_len.to_string(),
            self.score.to_string(),
            fmt_float(self.latency_s),
            fmt_float(self.area),
            fmt_float(self.power_w),
            fmt_float(self.speedup),
            fmt_float(self.power_ratio),
            self.area_source.to_string(),
        ]
        .join(",")
    }
}

pub(crate) fn render(records: &[BenchRecord]) -> String {
    let mut sorted: Vec<&BenchRecord> = records.iter().collect();
    sorted.sort_by_key(|r| (r.kind, r.read_len));
    let mut out = String::from(BENCH_HEADER);
    out.push('\n');
    for r in sorted {
        out.push_str(&r.to_csv());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        let r = BenchRecord {
            kind: DesignKind::RaceCmos,
            read_len: 4,
            score: 3,
            latency_s: 1.0 / 3.0,
            area: 851.0,
            power_w: 1.2345678e-7,
            speedup: 1.0,
            power_ratio: 2.5,
            area_source: AreaSource::Table,
        };
        assert_eq!(r.to_csv(), "race_cmos,4,3,3.33333e-1,8.51000e2,1.23457e-7,1.00000e0,2.50000e0,table");
    }
}
