use crate::alignment::Nucleotide;
use crate::Score;

/// Match / mismatch / gap penalties, in delay units.
///
/// Penalties are unsigned: a race-logic lattice cannot realize a negative
/// delay. The lattice can be reprogrammed with a new scheme at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScoringScheme {
    pub t_match: u32,
    pub t_mismatch: u32,
    pub t_gap: u32,
}

impl ScoringScheme {
    pub const fn new(t_match: u32, t_mismatch: u32, t_gap: u32) -> Self {
        ScoringScheme { t_match, t_mismatch, t_gap }
    }

    /// Cost of the diagonal move pairing `a` with `b`.
    pub fn substitution(&self, a: Nucleotide, b: Nucleotide) -> Score {
        Score::from(if a == b { self.t_match } else { self.t_mismatch })
    }

    pub fn gap(&self) -> Score {
        Score::from(self.t_gap)
    }
}

impl Default for ScoringScheme {
    fn default() -> Self {
        ScoringScheme::new(0, 2, 1)
    }
}

/// Score carried in from the exact-match seed.
///
/// `w0` shifts the whole boundary uniformly; `w0 = 0` is the plain
/// edit-distance initialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SeedContext {
    pub w0: Score,
}

impl SeedContext {
    pub const fn new(w0: Score) -> Self {
        SeedContext { w0 }
    }

    /// Boundary value at distance `k` from the origin.
    pub fn boundary(&self, k: usize, scheme: &ScoringScheme) -> Score {
        self.w0 + k as Score * scheme.gap()
    }
}
