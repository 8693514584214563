//! `rainsat`: rainbow saturation queries from the command line.
//!
//! Exit codes: 0 success (COLORABLE, SATURATED, all claims pass), 1 negative
//! answer (UNCOLORABLE, NOT_SATURATED, a failed claim), 2 INDETERMINATE or a
//! timed-out search, 64 unusable input, 70 internal failure.

mod commands;
mod input;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INDETERMINATE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_INTERNAL: u8 = 70;

/// Version tag carried by every JSON document.
pub const JSON_SCHEMA: &str = "rainsat/1";

#[derive(Debug, Parser)]
#[command(name = "rainsat", version, about = "Rainbow saturation of graphs")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Seconds allowed per colorability search.
    #[arg(long, global = true, default_value_t = 60.0, value_parser = positive_seconds)]
    pub timeout: f64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized edge orders and sampled instances.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn timeout(&self) -> Duration {
        Duration::from_secs_f64(self.timeout)
    }
}

fn positive_seconds(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("timeout must be a positive number of seconds".into())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is there a proper coloring with no rainbow copy of any pattern?
    Colorable {
        /// Host graph: graph6, a name such as W8, adjacency JSON, or @file.
        graph: String,
        /// Patterns by name (K4, P4, C4, K1_4, ...) or graph6.
        #[arg(required = true)]
        patterns: Vec<String>,
    },
    /// Decide whether a graph is rainbow saturated for a family.
    Check {
        graph: String,
        #[arg(required = true)]
        patterns: Vec<String>,
    },
    /// Exact sat*(n, F) by exhaustive search.
    Satstar {
        n: usize,
        #[arg(required = true)]
        patterns: Vec<String>,
    },
    /// Exact classical sat(n, H) by exhaustive search.
    Sat { n: usize, pattern: String },
    /// Grow a graph by adding edges while it stays colorable.
    Greedy {
        graph: String,
        #[arg(required = true)]
        patterns: Vec<String>,
        /// Shuffle the edge order with --seed (default 0) instead of
        /// scanning lexicographically.
        #[arg(long)]
        shuffle: bool,
    },
    /// Emit one of the explicit constructions.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Print a case-analysis gadget and its verdict.
    Gadget {
        /// GA, GB, star_chord, star_pendant, triangle, claw_chord, square
        kind: String,
    },
    /// Run the verification claims and report pass/fail per claim.
    VerifyPaper {
        /// Comma-separated claim ids; all claims when omitted.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Random instances for the oracle claim.
        #[arg(long, default_value_t = 500)]
        oracle_instances: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construction {
    /// K_{r-2} + E_{n-r+2}; --verify checks ordinary K_r saturation.
    Ehm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Disjoint K4s and K_{1,4}s with their colorings.
    P4 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// The colored wheel W_n.
    Wheel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Recursive construction from the family ladder of a pattern.
    Ladder {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        /// Size of each joined independent set.
        #[arg(long, value_enum, default_value_t = Policy::Cubic)]
        policy: Policy,
        /// Fixed set size, used with --policy fixed.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    /// h^3 + h
    Cubic,
    /// h
    Order,
    /// --size
    Fixed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.run.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
        {
            eprintln!("rainsat: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(commands::CliError::Usage(msg)) => {
            eprintln!("rainsat: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(commands::CliError::Indeterminate(msg)) => {
            eprintln!("rainsat: {msg}");
            ExitCode::from(EXIT_INDETERMINATE)
        }
        Err(commands::CliError::Internal(msg)) => {
            eprintln!("rainsat: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
