use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use memrace::harness::{self, Mode, RunConfig};
use memrace::Error;

#[derive(Parser)]
#[command(name = "memrace", version, about = "Race-logic seed-extension lattice simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Align sequence pairs through the lattice and report seed-extension outputs.
    Align {
        #[command(flatten)]
        common: Common,
        /// Query sequence (use with REFERENCE instead of --reads/--ref).
        #[arg(value_name = "QUERY")]
        query_seq: Option<String>,
        #[arg(value_name = "REFERENCE")]
        reference_seq: Option<String>,
        /// Allow unequal lengths; aligns with the DP only.
        #[arg(long)]
        rect: bool,
        /// Print the full matrix for pairs up to 16 bases.
        #[arg(long)]
        matrix: bool,
    },
    /// Check lattice arrival times against the DP on random cases and golden files.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Number of random equivalence checks.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Write latency, speedup, power and area comparison CSVs.
    Bench {
        #[command(flatten)]
        common: Common,
        /// Read lengths to sweep, comma separated.
        #[arg(long, value_delimiter = ',')]
        read_lens: Option<Vec<usize>>,
    },
    /// Read every length off one lattice and compare with rebuilt lattices.
    Sweep {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long = "match")]
    t_match: Option<u32>,
    #[arg(long = "mismatch")]
    t_mismatch: Option<u32>,
    #[arg(long = "gap")]
    t_gap: Option<u32>,
    /// Seed score carried into row and column 0.
    #[arg(long)]
    w0: Option<u64>,
    /// Lattice dimension the hardware is built for.
    #[arg(long)]
    fixed_dim: Option<usize>,
    /// Permit a fixed dimension outside the 19..=131 seed range.
    #[arg(long)]
    allow_any_dim: bool,
    /// Predefined tap rows, comma separated (default: every row).
    #[arg(long, value_delimiter = ',')]
    taps: Option<Vec<usize>>,
    /// Key-value profile/config file; may be repeated, later files win.
    #[arg(long)]
    profile: Vec<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    reads: Option<PathBuf>,
    #[arg(long = "ref")]
    reference: Option<PathBuf>,
}

impl Common {
    fn into_config(self, mode: Mode) -> Result<(RunConfig, bool), Error> {
        let mut cfg = RunConfig::new(mode);
        for path in &self.profile {
            cfg.apply_file(path)?;
        }
        if let Some(v) = self.t_match {
            cfg.scheme.t_match = v;
        }
        if let Some(v) = self.t_mismatch {
            cfg.scheme.t_mismatch = v;
        }
        if let Some(v) = self.t_gap {
            cfg.scheme.t_gap = v;
        }
        if let Some(v) = self.w0 {
            cfg.seed.w0 = v;
        }
        if let Some(v) = self.fixed_dim {
            cfg.fixed_dim = v;
        }
        if let Some(v) = self.seed {
            cfg.rng_seed = v;
        }
        if let Some(v) = self.out {
            cfg.out_dir = v;
        }
        cfg.taps = self.taps;
        cfg.reads = self.reads;
        cfg.reference = self.reference;
        Ok((cfg, self.allow_any_dim))
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let (mut cfg, allow_any_dim) = match cli.command {
        Command::Align { common, query_seq, reference_seq, rect, matrix } => {
            let (mut cfg, any) = common.into_config(Mode::Align)?;
            cfg.pair = query_seq.zip(reference_seq);
            cfg.rectangular = rect;
            cfg.print_matrix = matrix;
            (cfg, any)
        }
        Command::Verify { common, cases, inject_fault } => {
            let (mut cfg, any) = common.into_config(Mode::Verify)?;
            cfg.cases = cases;
            cfg.inject_fault = inject_fault;
            (cfg, any)
        }
        Command::Bench { common, read_lens } => {
            let (mut cfg, any) = common.into_config(Mode::Bench)?;
            match read_lens {
                Some(lens) => cfg.read_lens = lens,
                None => {
                    let dim = cfg.fixed_dim;
                    cfg.read_lens.retain(|&l| l <= dim);
                }
            }
            (cfg, any)
        }
        Command::Sweep { common } => common.into_config(Mode::Sweep)?,
    };
    if cfg.mode != Mode::Bench {
        cfg.read_lens.retain(|&l| l <= cfg.fixed_dim);
    }
    for warning in cfg.validate(allow_any_dim)? {
        log::warn!("{warning}");
    }

    match cfg.mode {
        Mode::Align => {
            for line in harness::run_align(&cfg)? {
                println!("{line}");
            }
            Ok(0)
        }
        Mode::Verify => {
            let report = harness::run_verify(&cfg)?;
            for line in &report.transcript {
                println!("{line}");
            }
            Ok(report.exit_code())
        }
        Mode::Bench => {
            for path in harness::run_bench(&cfg)? {
                println!("wrote {}", path.display());
            }
            Ok(0)
        }
        Mode::Sweep => {
            let summary = harness::run_sweep(&cfg)?;
            println!(
                "{}/{} read lengths match a rebuilt lattice ({} tap fallbacks)",
                summary.matched(),
                summary.rows.len(),
                summary.fallbacks()
            );
            println!("wrote {}", summary.path.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
