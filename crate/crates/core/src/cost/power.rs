use crate::{Error, Result};

/// Dynamic power `1/2 * A * N * C * Vdd^2 * f`, in watts.
///
/// `activity` is the average switching activity, `n_wires` the number of
/// allocated wires, `c_wire` the capacitance of one wire.
pub fn dynamic_power(activity: f64, n_wires: u64, c_wire: f64, vdd: f64, freq: f64) -> Result<f64> {
    if !(activity > 0.0 && activity <= 1.0) {
        return Err(Error::invalid(format!("activity {activity} outside (0, 1]")));
    }
    if n_wires == 0 {
        return Err(Error::invalid("wire count must be positive"));
    }
    for (name, v) in [("capacitance", c_wire), ("vdd", vdd), ("frequency", freq)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::invalid(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(0.5 * activity * n_wires as f64 * c_wire * vdd * vdd * freq)
}
