//! Nanowire tap network that reads a sub-lattice output without reconfiguring
//! the lattice.
//!
//! One nanowire per tap row connects through a via to the local OR output on
//! that row; a selection unit driven by the read length picks the wire. Wire
//! delay comes from an Elmore estimate over the junction and nanowire RC.

mod params;
mod route;

pub use params::{FpniParams, FPNI_TABLE};
pub use route::{
    elmore_delay, read_out, route, select_output, wire_delay, NanowirePath, Readout, TapFallback,
    TapSelection, WireSegment,
};
