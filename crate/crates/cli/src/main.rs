//! Command-line front end for the orbgenus engine.
//!
//! Exit codes: 0 on success (or when a checked identity holds), 1 when an
//! identity fails, 2 on usage or configuration errors.

mod commands;
mod model;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Largest chromatic level accepted.
pub const MAX_H: usize = 4;
/// Largest degree `l` and precision `N` accepted.
pub const MAX_DEGREE: u64 = 16;
/// Largest orbit size accepted by `orbits`.
pub const MAX_SIZE: u64 = 64;

#[derive(Parser, Debug)]
#[command(name = "orbgenus", version, about = "Exact orbit, class-function and genus computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the canonical transitive orbits of a given size.
    Orbits {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        size: u64,
        #[command(flatten)]
        out: Output,
    },
    /// List the classes of commuting h-tuples in the symmetric group on l points.
    Classes {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        l: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Check an identity; exits 1 if it fails.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Symmetric powers, Hecke operators, lambda operations and Todd series.
    Genus {
        #[command(subcommand)]
        what: Genus,
    },
    /// Inner product b(chi, xi) of two class functions (default: the constant 1).
    InnerProduct {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        l: u64,
        /// Class-function JSON file for the left argument.
        #[arg(long)]
        lhs: Option<PathBuf>,
        /// Class-function JSON file for the right argument.
        #[arg(long)]
        rhs: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// S_t(x) = exp(sum T_n t^n) through t^N.
    Dmvv {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "symbolic")]
        model: String,
        #[command(flatten)]
        out: Output,
    },
    /// Frobenius reciprocity, augmentation multiplicativity and the literal
    /// induction sum for every split j + k = l, on seeded random class functions.
    Frobenius {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        l: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest l for which the literal induction sum is also evaluated.
        #[arg(long)]
        guard: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Orbit-type classification against brute-force tuple enumeration.
    Oracle {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        guard: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
enum Genus {
    /// sigma_0 .. sigma_N.
    Sigma(GenusArgs),
    /// T_1 .. T_N (zero at inadmissible n).
    Hecke(GenusArgs),
    /// lambda_0 .. lambda_N.
    Lambda(GenusArgs),
    /// Coefficients of sum_n Td_orb(M^n // S_n) t^n for Td(M) = d.
    Todd {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct GenusArgs {
    #[command(flatten)]
    level: Level,
    #[arg(long)]
    n: u64,
    /// symbolic[:family] | integer:<d> | table:<path>
    #[arg(long, default_value = "symbolic")]
    model: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug, Clone, Copy)]
struct Level {
    /// Chromatic level (number of commuting generators).
    #[arg(long, default_value_t = 1)]
    h: usize,
    /// Restrict to p-power orders; omit for all orders.
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Args, Debug, Clone, Copy)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// How a command ended.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or input files.
    Usage(String),
    /// The checked identity does not hold; the report was already printed.
    Mismatch,
}

impl From<orbgenus::Error> for Failure {
    fn from(e: orbgenus::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
