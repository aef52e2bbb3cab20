//! Reference min-plus dynamic program for the seed-extension kernel.
//!
//! Scores are edit-distance style: lower is better, and every move costs a
//! non-negative delay so the same recurrence can be realized by a race-logic
//! lattice. Row 0 and column 0 carry the seed score `w0` plus one gap per step.

mod dp;
mod oracle;
mod scoring;
mod sequence;

pub use dp::{dp_fill, extract_outputs, init_matrix, DpMatrix, DpResult, LocalBest, SeedExtension};
pub use oracle::{levenshtein_oracle, ORACLE_MAX_LEN};
pub use scoring::{ScoringScheme, SeedContext};
pub use sequence::{Nucleotide, Sequence};
