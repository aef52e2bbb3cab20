use crate::cost::{CostModel, DesignKind, ProfileSet};
use crate::Result;

/// Shipped calibration profile. Unit delays here are fitted, not measured.
pub const CALIBRATION_PROFILE: &str = include_str!("../../data/calibration.profile");

/// Headline latency ratios the calibration is fitted to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalibrationTargets {
    pub fixed_dim: usize,
    /// Shortest read, where the fixed race-logic output hurts most.
    pub short_read_len: usize,
    /// race_cmos / proposed latency at `short_read_len`.
    pub race_cmos_short: f64,
    /// systolic / proposed latency at `read_len == fixed_dim`.
    pub systolic_full: f64,
}

impl Default for CalibrationTargets {
    fn default() -> Self {
        CalibrationTargets { fixed_dim: 131, short_read_len: 1, race_cmos_short: 600.0, systolic_full: 22.0 }
    }
}

/// Fits the race_cmos unit delay and the systolic clock period so the latency
/// ratios hit `targets`. The proposed profile is taken as given.
pub fn fit_calibration(model: &CostModel, base: &ProfileSet, targets: &CalibrationTargets) -> Result<ProfileSet> {
    let d = targets.fixed_dim;
    let proposed = &base.proposed;
    let short = model.latency_estimate(proposed, targets.short_read_len, d, None)?;
    let full = model.latency_estimate(proposed, d, d, None)?;

    let mut fitted = base.clone();
    let race_units = model.worst_case_arrival(d)? as f64;
    fitted.get_mut(DesignKind::RaceCmos).unit_delay_s = targets.race_cmos_short * short / race_units;
    fitted.get_mut(DesignKind::Systolic).cycle_time_s = targets.systolic_full * full / (2 * d - 1) as f64;
    Ok(fitted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::KeyValues;

    #[test]
    fn fit_hits_targets_exactly() {
        let m = CostModel::default();
        let t = CalibrationTargets::default();
        let fitted = fit_calibration(&m, &ProfileSet::default(), &t).unwrap();
        let lat = |kind, l| m.latency_estimate(fitted.get(kind), l, 131, None).unwrap();
        let race = lat(DesignKind::RaceCmos, 1) / lat(DesignKind::Proposed, 1);
        let sys = lat(DesignKind::Systolic, 131) / lat(DesignKind::Proposed, 131);
        assert!((race - 600.0).abs() < 1e-9);
        assert!((sys - 22.0).abs() < 1e-9);
    }

    #[test]
    fn shipped_profile_matches_fit() {
        let kv = KeyValues::parse(CALIBRATION_PROFILE, "calibration.profile").unwrap();
        let shipped = ProfileSet::from_key_values(&kv).unwrap();
        let fitted = fit_calibration(&CostModel::default(), &ProfileSet::default(), &CalibrationTargets::default()).unwrap();
        for (a, b) in shipped.iter().zip(fitted.iter()) {
            for (x, y) in [(a.unit_delay_s, b.unit_delay_s), (a.cycle_time_s, b.cycle_time_s)] {
                assert!((x - y).abs() / y < 1e-5, "{:?}: {x} vs {y}", a.kind);
            }
        }
    }
}
