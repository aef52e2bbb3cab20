//! Event-driven simulation of the memristor race-logic lattice.
//!
//! Values are encoded as signal arrival times. A series delay element adds,
//! and an OR gate passes the first rising edge, so it takes the minimum. Each
//! basic cell ORs its three delayed predecessors (diagonal, vertical and
//! horizontal), which is exactly the min-plus DP recurrence: the arrival time
//! at cell `(i, j)` equals `DP(i, j)`.
//!
//! Each cell also drives a local OR gate. The local ORs on the L-shaped shell
//! `max(i, j) == k` form the output of the `k x k` sub-lattice, so a read of
//! length `k` can be read out at tap `k` without waiting for the full lattice.

mod cell;
mod engine;
mod gates;

pub use cell::{build_lattice, BasicCell, Lattice, NodeId, MAX_LATTICE_SIZE};
pub use engine::{simulate, simulate_read, tap_output, ArrivalMap, SimStats};
pub use gates::{compare_select, delay_element, encode_nucleotide, or_merge, CellConfig, NucleotideCode};
