//! Simulator and analysis toolkit for a memristor race-logic lattice that
//! computes the seed-extension similarity matrix of a BWA-MEM style aligner.
//!
//! The crate is split by subsystem:
//!
//! * [`alignment`] is the reference min-plus dynamic program and its
//!   brute-force oracle.
//! * [`lattice`] simulates the delay lattice event by event; arrival times
//!   reproduce the DP matrix exactly.
//! * [`fpni`] models the nanowire tap network used to read out shorter reads
//!   without rebuilding the lattice.
//! * [`cost`] holds the area, latency and power models for the three designs.
//! * [`harness`] drives experiments for the `memrace` command line tool.

pub mod alignment;
pub mod config;
pub mod cost;
mod error;
pub mod fpni;
pub mod harness;
pub mod lattice;

pub use error::{Error, Result};

/// Logical score / arrival time, in delay units.
pub type Score = u64;
