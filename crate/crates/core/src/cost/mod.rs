//! Area, latency and power models for the proposed lattice and the two
//! baselines (a systolic array and a CMOS race-logic lattice).

mod area;
mod calibration;
mod latency;
mod power;
mod profile;
mod report;

pub use area::{area_estimate, AreaEstimate, AreaSource, AreaTable, AREA_TABLE};
pub use calibration::{fit_calibration, CalibrationTargets, CALIBRATION_PROFILE};
pub use latency::{CostModel, LatencyEstimate};
pub use power::dynamic_power;
pub use profile::{DesignKind, DeviceProfile, ProfileSet};
pub use report::{speedup_report, CostReport, CostRow};
