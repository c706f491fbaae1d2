//! `randword`: exact, simulated and asymptotic distribution of the longest
//! weakly increasing subsequence of random words.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser)]
#[command(name = "randword", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ModelArgs {
    /// Letter probabilities as exact rationals, e.g. "5/7,2/7"; must sum to 1.
    #[arg(long)]
    probs: String,
}

#[derive(Args, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; 0 uses all available cores. Results do not depend on it.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LimitMethodArg {
    Reduced,
    Mc,
}

#[derive(Subcommand)]
enum Command {
    /// Exact CDF by summing the Schur measure over partitions.
    Exact {
        #[command(flatten)]
        model: ModelArgs,
        /// Word length N.
        #[arg(long = "N")]
        n_len: u32,
        /// Report only F_N(n).
        #[arg(long = "n")]
        n: Option<u32>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact CDF from leading minors of the Toeplitz matrix.
    Toeplitz {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long = "N")]
        n_len: u32,
        #[arg(long = "n")]
        n: Option<u32>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Monte Carlo estimate of the mean and variance of the subsequence length.
    Simulate {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long = "N")]
        n_len: u32,
        #[arg(long, default_value_t = 20_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Limiting CDF of the centred and scaled length at level s.
    Limit {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long, value_enum, default_value_t = LimitMethodArg::Reduced)]
        method: LimitMethodArg,
        /// Sample count for the Monte Carlo method.
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Re-simulate the published table and compare with its two mean columns.
    Table1 {
        /// Override the per-row sample count.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Only rows with N at most this value.
        #[arg(long = "max-N")]
        max_n_len: Option<u32>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare word enumeration, partition summation and Toeplitz exactly.
    Crosscheck {
        /// Single model to check; defaults to a built-in set with k = 1, 2, 3.
        #[arg(long)]
        probs: Option<String>,
        #[arg(long = "max-N", default_value_t = 10)]
        max_n_len: u32,
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(cli.command) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<randword::Error>().is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
