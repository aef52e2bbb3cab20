use crate::alignment::{Nucleotide, ScoringScheme, SeedContext, Sequence};
use crate::cost::{DesignKind, DeviceProfile};
use crate::fpni::{read_out, route, wire_delay, FpniParams};
use crate::lattice::{build_lattice, simulate, ArrivalMap};
use crate::{Error, Result, Score};

/// Shared context for the latency and power models.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CostModel {
    pub scheme: ScoringScheme,
    pub seed: SeedContext,
    pub fpni: FpniParams,
}

/// Latency split into the logical part and the tap wire.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatencyEstimate {
    pub logical_s: f64,
    pub wire_s: f64,
}

impl LatencyEstimate {
    pub fn total(&self) -> f64 {
        self.logical_s + self.wire_s
    }
}

impl CostModel {
    pub fn new(scheme: ScoringScheme, seed: SeedContext, fpni: FpniParams) -> Self {
        CostModel { scheme, seed, fpni }
    }

    /// Latest possible first arrival on the output shell of a `k x k`
    /// lattice, over all inputs.
    ///
    /// Every diagonal delay at its larger value maximizes every cell, and that
    /// input is realizable (all-mismatch, or all-match if matching costs more),
    /// so it is found by simulating that input.
    pub fn worst_case_arrival(&self, k: usize) -> Result<Score> {
        let lattice = build_lattice(k, self.scheme)?;
        let query = Sequence::from_bases(vec![Nucleotide::A; k])?;
        let other = if self.scheme.t_mismatch >= self.scheme.t_match { Nucleotide::C } else { Nucleotide::A };
        let reference = Sequence::from_bases(vec![other; k])?;
        Ok(simulate(&lattice, &query, &reference, self.seed)?.global_out())
    }

    /// Latency of `profile.kind` for a read of `read_len` on hardware sized
    /// for `fixed_dim`.
    ///
    /// * systolic: the full `fixed_dim` array is streamed, `2D - 1` cycles.
    /// * race_cmos: output is fixed at the `fixed_dim` shell, so the signal
    ///   crosses the whole lattice; worst-case arrival there.
    /// * proposed: read at the `read_len` tap, plus the tap's wire delay. With
    ///   an [`ArrivalMap`] the actual tap arrival is used, otherwise the
    ///   worst case.
    pub fn latency_breakdown(
        &self,
        profile: &DeviceProfile,
        read_len: usize,
        fixed_dim: usize,
        arrival: Option<&ArrivalMap>,
    ) -> Result<LatencyEstimate> {
        if read_len == 0 || read_len > fixed_dim {
            return Err(Error::invalid(format!(
                "read length {read_len} outside 1..={fixed_dim}"
            )));
        }
        Ok(match profile.kind {
            DesignKind::Systolic => LatencyEstimate {
                logical_s: (2 * fixed_dim - 1) as f64 * profile.cycle_time_s,
                wire_s: 0.0,
            },
            DesignKind::RaceCmos => LatencyEstimate {
                logical_s: self.worst_case_arrival(fixed_dim)? as f64 * profile.unit_delay_s,
                wire_s: 0.0,
            },
            DesignKind::Proposed => {
                let (units, wire_s) = match arrival {
                    Some(map) => {
                        let out = read_out(map, fixed_dim, read_len, &self.fpni)?;
                        (out.selection.value, out.wire_delay_s)
                    }
                    None => {
                        let path = route(read_len, fixed_dim, &self.fpni)?;
                        (self.worst_case_arrival(read_len)?, wire_delay(&path, &self.fpni))
                    }
                };
                LatencyEstimate { logical_s: units as f64 * profile.unit_delay_s, wire_s }
            }
        })
    }

    pub fn latency_estimate(
        &self,
        profile: &DeviceProfile,
        read_len: usize,
        fixed_dim: usize,
        arrival: Option<&ArrivalMap>,
    ) -> Result<f64> {
        Ok(self.latency_breakdown(profile, read_len, fixed_dim, arrival)?.total())
    }

    /// Dynamic power of one design.
    ///
    /// The proposed lattice switches only the `read_len` sub-lattice plus one
    /// selected nanowire; race_cmos switches the whole `fixed_dim` lattice;
    /// the systolic array has `fixed_dim` processing elements.
    pub fn power(&self, profile: &DeviceProfile, read_len: usize, fixed_dim: usize) -> Result<f64> {
        let p = profile;
        let cells = |n: usize| (n * n) as u64;
        match p.kind {
            DesignKind::Proposed => {
                let lattice = super::dynamic_power(p.activity, cells(read_len), p.per_cell_cap, p.vdd, p.freq)?;
                let wire = super::dynamic_power(p.activity, 1, self.fpni.nanowire_capacitance(), p.vdd, p.freq)?;
                Ok(lattice + wire)
            }
            DesignKind::RaceCmos => {
                super::dynamic_power(p.activity, cells(fixed_dim), p.per_cell_cap, p.vdd, p.freq)
            }
            DesignKind::Systolic => {
                super::dynamic_power(p.activity, fixed_dim as u64, p.per_cell_cap, p.vdd, p.freq)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::simulate_read;

    fn profile(kind: DesignKind) -> DeviceProfile {
        DeviceProfile::default_for(kind)
    }

    #[test]
    fn worst_case_grows_linearly_with_default_scheme() {
        let m = CostModel::default();
        // All-mismatch with mismatch = 2 * gap: DP(i, j) = i + j, so the
        // shell minimum sits at (k, 1) with value k + 1.
        for k in 1..=20 {
            assert_eq!(m.worst_case_arrival(k).unwrap(), k as Score + 1);
        }
    }

    #[test]
    fn worst_case_uses_match_cost_when_it_is_larger() {
        let m = CostModel { scheme: ScoringScheme::new(3, 1, 5), ..CostModel::default() };
        // Every diagonal costs 3: DP(k, j) = 3*min(k,j) + 5*|k-j|.
        assert_eq!(m.worst_case_arrival(4).unwrap(), 12);
    }

    #[test]
    fn systolic_independent_of_read_length() {
        let m = CostModel::default();
        let p = profile(DesignKind::Systolic);
        let a = m.latency_estimate(&p, 1, 131, None).unwrap();
        let b = m.latency_estimate(&p, 131, 131, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, 261.0 * p.cycle_time_s);
    }

    #[test]
    fn full_read_tap_equals_fixed_output_up_to_wire() {
        let m = CostModel::default();
        let prop = m.latency_breakdown(&profile(DesignKind::Proposed), 131, 131, None).unwrap();
        let race = m.latency_breakdown(&profile(DesignKind::RaceCmos), 131, 131, None).unwrap();
        assert_eq!(prop.logical_s, race.logical_s);
        assert!(prop.wire_s > 0.0 && prop.wire_s < 0.01 * 1e-9);
    }

    #[test]
    fn proposed_logically_never_slower() {
        let m = CostModel::default();
        let (p, r) = (profile(DesignKind::Proposed), profile(DesignKind::RaceCmos));
        for d in [19, 64, 131] {
            let race = m.latency_breakdown(&r, 1, d, None).unwrap().logical_s;
            for l in 1..=d {
                let prop = m.latency_breakdown(&p, l, d, None).unwrap();
                assert!(prop.logical_s <= race);
                assert!(prop.wire_s < 0.05 * p.unit_delay_s);
            }
        }
    }

    #[test]
    fn supplied_arrival_map_is_used() {
        let m = CostModel::default();
        let lattice = build_lattice(16, m.scheme).unwrap();
        let q: Sequence = "ACGTACGT".parse().unwrap();
        let map = simulate_read(&lattice, &q, &q, m.seed).unwrap();
        let p = profile(DesignKind::Proposed);
        let est = m.latency_breakdown(&p, 8, 16, Some(&map)).unwrap();
        assert_eq!(est.logical_s, 0.0);
        assert!(est.wire_s > 0.0);
    }

    #[test]
    fn rejects_read_longer_than_hardware() {
        let m = CostModel::default();
        assert!(m.latency_estimate(&profile(DesignKind::Proposed), 20, 19, None).is_err());
        assert!(m.latency_estimate(&profile(DesignKind::Systolic), 0, 19, None).is_err());
    }
}
