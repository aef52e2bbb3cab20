use std::collections::BTreeMap;

use crate::fpni::FpniParams;
use crate::lattice::ArrivalMap;
use crate::{Error, Result, Score};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WireSegment {
    pub length_nm: f64,
    /// Closed junctions (vias) at the upstream end of the segment.
    pub junctions: u32,
}

/// Route from a tap's via to the selection unit.
#[derive(Debug, Clone, PartialEq)]
pub struct NanowirePath {
    pub tap_row: usize,
    pub segments: Vec<WireSegment>,
}

impl NanowirePath {
    pub fn length_nm(&self) -> f64 {
        self.segments.iter().map(|s| s.length_nm).sum()
    }

    pub fn junctions(&self) -> u32 {
        self.segments.iter().map(|s| s.junctions).sum()
    }
}

/// Dedicated nanowire for tap `tap_row`, running from the output edge.
///
/// The wire spans `lattice_size - tap_row + 1` pitches. A route longer than one
/// nanowire continues on the next wire through another closed junction.
pub fn route(tap_row: usize, lattice_size: usize, params: &FpniParams) -> Result<NanowirePath> {
    if tap_row == 0 || tap_row > lattice_size {
        return Err(Error::invalid(format!(
            "tap row {tap_row} outside 1..={lattice_size}"
        )));
    }
    let mut remaining = (lattice_size - tap_row + 1) as f64 * params.p_nano * params.geometry_factor;
    let mut segments = Vec::new();
    while remaining > 0.0 {
        let length_nm = remaining.min(params.l_nano);
        segments.push(WireSegment { length_nm, junctions: 1 });
        remaining -= length_nm;
    }
    Ok(NanowirePath { tap_row, segments })
}

/// Elmore delay of an RC ladder given as `(series R, shunt C)` stages from
/// the driver outwards: `sum_k C_k * sum_{m<=k} R_m`.
pub fn elmore_delay(ladder: &[(f64, f64)]) -> f64 {
    ladder
        .iter()
        .scan(0.0, |upstream, &(r, c)| {
            *upstream += r;
            Some(*upstream * c)
        })
        .sum()
}

/// Elmore delay of `path`, in seconds.
///
/// Each segment is a junction resistance followed by a pi-model of the wire
/// (half the wire capacitance on either side of its resistance). The
/// selection-unit load `c_load` sits at the far end.
pub fn wire_delay(path: &NanowirePath, params: &FpniParams) -> f64 {
    let mut ladder = Vec::with_capacity(2 * path.segments.len());
    for seg in &path.segments {
        let half_c = params.wire_capacitance(seg.length_nm) / 2.0;
        ladder.push((f64::from(seg.junctions) * params.r_closed, half_c));
        ladder.push((params.wire_resistance(seg.length_nm), half_c));
    }
    match ladder.last_mut() {
        Some(last) => last.1 += params.c_load,
        None => ladder.push((params.r_closed, params.c_load)),
    }
    elmore_delay(&ladder)
}

/// A read length with no tap of its own, served by a larger one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TapFallback {
    pub requested: usize,
    pub used: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TapSelection {
    pub value: Score,
    pub tap_row: usize,
    pub fallback: Option<TapFallback>,
}

/// Selection unit: picks the tap reading for `read_len`.
///
/// If `read_len` has no tap, the nearest larger tap is used and the fallback
/// is recorded. That tap covers a larger sub-lattice, so its value and latency
/// belong to the larger dimension.
pub fn select_output(taps: &BTreeMap<usize, Score>, read_len: usize) -> Result<TapSelection> {
    if read_len == 0 {
        return Err(Error::invalid("read length must be positive"));
    }
    let (&tap_row, &value) = taps.range(read_len..).next().ok_or_else(|| {
        Error::invalid(format!("no tap at or above read length {read_len}"))
    })?;
    let fallback = (tap_row != read_len).then_some(TapFallback { requested: read_len, used: tap_row });
    if let Some(fb) = fallback {
        log::warn!("no tap at row {}, reading tap {} instead", fb.requested, fb.used);
    }
    Ok(TapSelection { value, tap_row, fallback })
}

/// Tap selection plus the physical route it reads through.
#[derive(Debug, Clone, PartialEq)]
pub struct Readout {
    pub selection: TapSelection,
    pub path: NanowirePath,
    pub wire_delay_s: f64,
}

pub fn read_out(
    map: &ArrivalMap,
    lattice_size: usize,
    read_len: usize,
    params: &FpniParams,
) -> Result<Readout> {
    let selection = select_output(map.row_taps(), read_len)?;
    let path = route(selection.tap_row, lattice_size, params)?;
    let wire_delay_s = wire_delay(&path, params);
    Ok(Readout { selection, path, wire_delay_s })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1e-300)
    }

    #[test]
    fn shortest_and_longest_routes() {
        let p = FpniParams::default();
        let short = route(131, 131, &p).unwrap();
        assert_eq!(short.length_nm(), 30.0);
        let long = route(1, 131, &p).unwrap();
        assert_eq!(long.length_nm(), 3930.0);
        for row in 1..=131 {
            assert_eq!(route(row, 131, &p).unwrap().junctions(), 1);
        }
        assert!(route(0, 131, &p).is_err());
        assert!(route(132, 131, &p).is_err());
    }

    #[test]
    fn long_routes_split_per_nanowire() {
        let p = FpniParams { geometry_factor: 3.0, ..FpniParams::default() };
        let path = route(1, 131, &p).unwrap();
        assert!(path.segments.iter().all(|s| s.length_nm <= p.l_nano));
        assert_eq!(path.segments.len(), 2);
        assert!(close(path.length_nm(), 131.0 * 90.0));
    }

    #[test]
    fn degenerate_path_is_single_rc() {
        let p = FpniParams::default();
        let path = NanowirePath { tap_row: 1, segments: vec![WireSegment { length_nm: 0.0, junctions: 1 }] };
        assert!(close(wire_delay(&path, &p), p.r_closed * p.c_load));
    }

    #[test]
    fn full_nanowire_matches_two_stage_hand_calculation() {
        // R1 = 24 kohm, C1 = Cw/2; R2 = 2.53 kohm, C2 = Cw/2 + 0.1 fF,
        // Cw = 2e-10 F/m * 7115 nm = 1.423 fF.
        // tau = R1*C1 + (R1 + R2)*C2 = 3.8605095e-11 s.
        let p = FpniParams::default();
        let path = NanowirePath { tap_row: 1, segments: vec![WireSegment { length_nm: 7115.0, junctions: 1 }] };
        let d = wire_delay(&path, &p);
        assert!((d - 3.8605095e-11).abs() < 1e-18, "{d}");
    }

    #[test]
    fn elmore_ladder_formula() {
        assert!(close(elmore_delay(&[(1.0, 2.0), (3.0, 4.0)]), 1.0 * 2.0 + 4.0 * 4.0));
        assert_eq!(elmore_delay(&[]), 0.0);
    }

    #[test]
    fn doubling_length_increases_delay() {
        let p = FpniParams::default();
        let seg = |l| NanowirePath { tap_row: 1, segments: vec![WireSegment { length_nm: l, junctions: 1 }] };
        let mut l = 10.0;
        while l < 7000.0 {
            assert!(wire_delay(&seg(2.0 * l), &p) > wire_delay(&seg(l), &p));
            l *= 2.0;
        }
    }

    #[test]
    fn selection_identity_and_fallback() {
        let taps: BTreeMap<usize, Score> = [(2, 5), (4, 7), (8, 9)].into_iter().collect();
        let s = select_output(&taps, 8).unwrap();
        assert_eq!((s.value, s.tap_row, s.fallback), (9, 8, None));
        let s = select_output(&taps, 3).unwrap();
        assert_eq!(s.value, 7);
        assert_eq!(s.fallback, Some(TapFallback { requested: 3, used: 4 }));
        assert!(select_output(&taps, 9).is_err());
        assert!(select_output(&taps, 0).is_err());
    }
}
