//! Command-line front end: argument parsing, run configuration, and report
//! emission for the degree-bound toolkit.

mod commands;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use render::{Format, Rendered, SCHEMA};

/// Exit status when a command ran and everything checked out.
pub const EXIT_VERIFIED: u8 = 0;
/// Exit status for usage, input and arithmetic errors.
pub const EXIT_ERROR: u8 = 1;
/// Exit status when a command ran but found a discrepancy or failure.
pub const EXIT_DISCREPANCY: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] transgen_engine::EngineError),
    #[error(transparent)]
    Sweep(#[from] transgen_sweeps::SweepError),
    #[error(transparent)]
    Bounds(#[from] transgen_bounds::BoundsError),
    #[error(transparent)]
    Numth(#[from] transgen_numth::NumthError),
    #[error(transparent)]
    Poset(#[from] transgen_poset::PosetError),
    #[error(transparent)]
    Mersenne(#[from] transgen_mersenne::MersenneError),
    #[error(transparent)]
    Xreal(#[from] transgen_xreal::XrealError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "transgen", version, about = "Certified generator bounds for transitive permutation groups")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest working precision, in bits, before a comparison is reported undecided.
    #[arg(long, env = "TRANSGEN_PRECISION_CAP", global = true, value_parser = clap::value_parser!(u32).range(64..))]
    pub precision_cap: Option<u32>,
    /// CSV file with header `m,as` giving as(m) for block sizes 10..=480.
    #[arg(long, global = true)]
    pub as_data: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The antichain bound ws(n).
    Ws { n: u64 },
    /// E(n,p), or E_sol(n,p) with --sol, with its derivation.
    Ebound {
        n: u64,
        p: u64,
        #[arg(long)]
        sol: bool,
    },
    /// Width of a product of chains.
    Width(WidthArgs),
    /// The Mersenne triples (e,r,t) with e r + t = M.
    MersenneTriples { m: u32 },
    /// Every induction case at degree D.
    Certify { d: u64 },
    /// Regenerate a table and compare it with the printed one.
    Table {
        #[arg(value_enum)]
        which: TableId,
    },
    /// Inequality sweeps.
    #[command(subcommand)]
    Sweep(SweepCommand),
    /// The 2-group family of degree 4^k.
    Example62 {
        #[arg(long, default_value_t = 64)]
        kmax: u64,
    },
}

#[derive(Debug, Args)]
pub struct WidthArgs {
    /// Chain sizes, e.g. 3,2.
    #[arg(long, value_delimiter = ',', conflicts_with = "divisors", required_unless_present = "divisors")]
    pub chains: Option<Vec<u64>>,
    /// Use the divisor lattice of N.
    #[arg(long)]
    pub divisors: Option<u64>,
    /// Also compute the width by bipartite matching.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableId {
    #[value(name = "61")]
    T61,
    #[value(name = "a3")]
    A3,
    #[value(name = "62")]
    T62,
}

#[derive(Debug, Subcommand)]
pub enum SweepCommand {
    /// Threshold inequalities for block sizes 2..=9.
    AppendixB {
        /// Block sizes to sweep; all of 2..=9 when omitted.
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=9))]
        m: Vec<u64>,
        /// Integers checked exhaustively above each threshold.
        #[arg(long, default_value_t = 100_000)]
        window: u64,
        /// End of the geometric scan.
        #[arg(long, default_value_t = 1_000_000_000)]
        geometric_max: u64,
        /// Integers probed just below each threshold.
        #[arg(long, default_value_t = 0)]
        probe: u64,
    },
    /// Standalone lemma checks.
    Lemmas {
        #[arg(long, default_value_t = 1_000_000)]
        lemma28_max: u64,
        #[arg(long, default_value_t = 100_000)]
        eq31_max: u64,
        #[arg(long, default_value_t = 1_000_000)]
        wallis_max: u64,
        #[arg(long, default_value_t = 2000)]
        debruijn_max: u64,
        #[arg(long, default_value_t = 100_000)]
        width_max: u64,
    },
    /// Block sizes m >= 10.
    Section6,
    /// The finite part of block size 2.
    M2Finite {
        /// Every exponent k instead of the sampled grid.
        #[arg(long)]
        exhaustive: bool,
    },
}

/// Parses `args`, runs the command, writes to `out`, and returns the exit status.
pub fn main_with(args: impl IntoIterator<Item = impl Into<OsString> + Clone>, out: &mut impl Write) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_VERIFIED };
        }
    };
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    let verdict = if rendered.verified { EXIT_VERIFIED } else { EXIT_DISCREPANCY };
    match rendered.emit(cli.config.format, out) {
        // A reader such as `head` closing the pipe early is not an error.
        Err(e) if !is_broken_pipe(&e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
        _ => verdict,
    }
}

fn is_broken_pipe(e: &CliError) -> bool {
    matches!(e, CliError::Io(e) if e.kind() == std::io::ErrorKind::BrokenPipe)
}

pub fn run(cli: &Cli) -> Result<Rendered, CliError> {
    if let Some(cap) = cli.config.precision_cap {
        transgen_xreal::set_precision_cap(cap);
    }
    commands::dispatch(&cli.command, &cli.config)
}
