use std::path::{Path, PathBuf};

use crate::alignment::{ScoringScheme, SeedContext};
use crate::config::KeyValues;
use crate::cost::{CostModel, ProfileSet};
use crate::fpni::FpniParams;
use crate::lattice::MAX_LATTICE_SIZE;
use crate::{Error, Result};

/// Shortest seed produced by exact-match seeding.
pub const MIN_SEED_LEN: usize = 19;

/// Read lengths swept by `bench` unless overridden.
pub const DEFAULT_READ_LENS: [usize; 9] = [1, 2, 4, 8, 16, 19, 32, 64, 131];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Align,
    Verify,
    Bench,
    Sweep,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub scheme: ScoringScheme,
    pub seed: SeedContext,
    pub fixed_dim: usize,
    /// Predefined tap rows; `None` means a tap on every row.
    pub taps: Option<Vec<usize>>,
    pub profiles: ProfileSet,
    pub fpni: FpniParams,
    pub out_dir: PathBuf,
    pub rng_seed: u64,
    pub cases: usize,
    pub read_lens: Vec<usize>,
    pub reads: Option<PathBuf>,
    pub reference: Option<PathBuf>,
    /// Sequences given directly on the command line (align).
    pub pair: Option<(String, String)>,
    /// Allow unequal lengths, aligned by the DP only.
    pub rectangular: bool,
    pub print_matrix: bool,
    /// Test hook: corrupts the lattice match delay during `verify`.
    pub inject_fault: bool,
}

impl RunConfig {
    pub fn new(mode: Mode) -> Self {
        RunConfig {
            mode,
            scheme: ScoringScheme::default(),
            seed: SeedContext::default(),
            fixed_dim: MAX_LATTICE_SIZE,
            taps: None,
            profiles: ProfileSet::default(),
            fpni: FpniParams::default(),
            out_dir: PathBuf::from("out"),
            rng_seed: 0,
            cases: 1000,
            read_lens: DEFAULT_READ_LENS.to_vec(),
            reads: None,
            reference: None,
            pair: None,
            rectangular: false,
            print_matrix: false,
            inject_fault: false,
        }
    }

    /// Applies a key-value profile/config file.
    ///
    /// Recognized keys: `<design>.<field>` device profiles, `fpni.<param>`,
    /// `scheme.match|mismatch|gap`, `seed.w0`, `run.fixed_dim`, `run.seed`.
    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let kv = KeyValues::load(path)?;
        self.apply_key_values(&kv)
    }

    pub fn apply_key_values(&mut self, kv: &KeyValues) -> Result<()> {
        const PREFIXES: [&str; 7] = ["proposed", "systolic", "race_cmos", "fpni", "scheme", "seed", "run"];
        if let Some(key) = kv.keys().find(|k| !PREFIXES.iter().any(|p| k.starts_with(&format!("{p}.")))) {
            return Err(Error::Config(format!("unknown key `{key}`")));
        }
        self.profiles.apply(kv)?;
        self.fpni.apply(kv)?;
        kv.check_known("scheme", &["match", "mismatch", "gap"])?;
        kv.check_known("seed", &["w0"])?;
        kv.check_known("run", &["fixed_dim", "seed"])?;
        if let Some(v) = kv.get("scheme.match")? {
            self.scheme.t_match = v;
        }
        if let Some(v) = kv.get("scheme.mismatch")? {
            self.scheme.t_mismatch = v;
        }
        if let Some(v) = kv.get("scheme.gap")? {
            self.scheme.t_gap = v;
        }
        if let Some(v) = kv.get("seed.w0")? {
            self.seed.w0 = v;
        }
        if let Some(v) = kv.get("run.fixed_dim")? {
            self.fixed_dim = v;
        }
        if let Some(v) = kv.get("run.seed")? {
            self.rng_seed = v;
        }
        Ok(())
    }

    /// Checks cross-field constraints. `allow_any_dim` lifts the seed-length
    /// bounds on `fixed_dim` (the lattice limit still applies).
    pub fn validate(&self, allow_any_dim: bool) -> Result<Vec<String>> {
        let lo = if allow_any_dim { 1 } else { MIN_SEED_LEN };
        if !(lo..=MAX_LATTICE_SIZE).contains(&self.fixed_dim) {
            return Err(Error::Config(format!(
                "fixed dimension {} outside {lo}..={MAX_LATTICE_SIZE}{}",
                self.fixed_dim,
                if allow_any_dim { "" } else { " (pass --allow-any-dim to lift the seed bounds)" }
            )));
        }
        if let Some(taps) = &self.taps {
            if taps.is_empty() || taps.iter().any(|&t| t == 0 || t > self.fixed_dim) {
                return Err(Error::Config(format!("tap rows must lie in 1..={}", self.fixed_dim)));
            }
        }
        if self.read_lens.is_empty() {
            return Err(Error::Config("read length sweep is empty".into()));
        }
        if let Some(bad) = self.read_lens.iter().find(|&&l| l == 0 || l > self.fixed_dim) {
            return Err(Error::Config(format!(
                "read length {bad} outside 1..={} (the fixed dimension)",
                self.fixed_dim
            )));
        }
        self.profiles.iter().try_for_each(|p| p.validate())?;
        self.fpni.validate()
    }

    pub fn cost_model(&self) -> CostModel {
        CostModel::new(self.scheme, self.seed, self.fpni.clone())
    }
}
