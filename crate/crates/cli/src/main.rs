//! `hdepth`: Hilbert depth of Hilbert functions from the command line.
//!
//! Exit codes: 0 on success, 1 when a computed property is violated,
//! 2 for bad input or configuration.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hdepth_core::squarefree::DEFAULT_MAX_VARS;
use hdepth_core::verify::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(
    name = "hdepth",
    version,
    about = "Exact Hilbert depth of Hilbert functions"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for case-parallel work (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    parallel: Option<usize>,

    /// Negates every β entry past the first; used to check that the
    /// verification batteries notice a broken β computation.
    #[arg(long, global = true, hide = true)]
    inject_beta_sign_flip: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert depth of a function, with its β certificate.
    Qdepth {
        /// Function spec such as "ci(3; 3)", or @file (DSL text or JSON).
        spec: String,
        /// Print the β table at this depth instead of searching.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
    },
    /// β coefficients of a function at a given depth.
    Beta {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// Print only β_k instead of the whole table.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Depth of a squarefree quotient J/I computed two ways.
    Sqf {
        /// Generators of J, e.g. "x1*x2, x3", or "1" for the whole ring.
        j: String,
        /// Generators of I, or "0" for the zero ideal.
        i: String,
        /// Number of variables (default: highest index used).
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        max_vars: u32,
    },
    /// Hypergeometric values, E(n, k) and the coefficient triangle for n.
    Hyp {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Run verification batteries.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Batteries to run; all of them when none are named.
    batteries: Vec<String>,
    /// Run every battery.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, allow_hyphen_values = true)]
    trials: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    max_n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    max_degree: Option<i64>,
    #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
    max_vars: u32,
}

/// Failure carrying its exit code.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.inject_beta_sign_flip {
        hdepth_core::fault::set_beta_sign_flip(true);
    }
    if let Some(threads) = cli.parallel {
        if threads == 0 {
            eprintln!("error: --parallel must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot set up {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let json = cli.json;
    let result = match cli.command {
        Command::Qdepth { spec, d } => commands::qdepth(&spec, d, json),
        Command::Beta { spec, d, k } => commands::beta(&spec, d, k, json),
        Command::Sqf { j, i, n, max_vars } => commands::sqf(&j, &i, n, max_vars, json),
        Command::Hyp { n } => commands::hyp(n, json),
        Command::Verify(args) => commands::verify(args, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
