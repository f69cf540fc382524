//! Library side of the `hurwitz` binary: compute orbifold Hurwitz numbers,
//! dump tables and series, and run the cross-check suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite finds a mismatch,
//! 2 on invalid input.

pub mod commands;
pub mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hurwitz", version, about = "Exact orbifold Hurwitz numbers and their spectral curve")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one Hurwitz number.
    Compute(ComputeArgs),
    /// Tabulate all profiles up to a degree.
    Table(TableArgs),
    /// Dump series coefficients.
    Series(SeriesArgs),
    /// Run a cross-check suite.
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
pub struct ComputeArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub r: u64,
    #[arg(long)]
    pub genus: u64,
    /// Comma-separated profile, e.g. `3,1`.
    #[arg(long, value_parser = parse_profile)]
    pub mu: Profile,
    /// Print the arrowed (graph) count instead of the Hurwitz number.
    #[arg(long)]
    pub arrowed: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub r: u64,
    /// A genus or an inclusive range such as `0-2`.
    #[arg(long, value_parser = parse_genus_range)]
    pub genus: GenusRange,
    #[arg(long)]
    pub degree_max: u64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Curve,
    F01,
    F02,
    W01,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesFormat {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub r: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub order: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: SeriesFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Jpt,
    Cayley,
    Oracle,
    F01,
    F02,
    Ode,
    Pde,
    Scaling,
    All,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Orbifold orders to check, comma-separated.
    #[arg(long, value_parser = parse_profile, default_value = "1,2,3")]
    pub r: Profile,
    /// Largest degree for the tree number checks.
    #[arg(long, default_value_t = 12)]
    pub max: u64,
    /// Largest degree for the closed-formula checks.
    #[arg(long, default_value_t = 12)]
    pub max_degree: u64,
    /// Largest degree for the monodromy oracle.
    #[arg(long, default_value_t = 4)]
    pub d_max: u64,
    /// Largest edge count for the monodromy oracle.
    #[arg(long, default_value_t = 5)]
    pub s_max: u64,
    /// Largest m for the scaling check.
    #[arg(long, default_value_t = 6)]
    pub m_max: u64,
    /// Series order for the curve and free energy checks (default depends on the suite).
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=40))]
    pub order: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile(pub Vec<u64>);

fn parse_profile(text: &str) -> Result<Profile, String> {
    let parts: Result<Vec<u64>, _> = text.split(',').map(|p| p.trim().parse::<u64>()).collect();
    let parts = parts.map_err(|e| format!("expected comma-separated positive integers: {e}"))?;
    if parts.is_empty() || parts.contains(&0) {
        return Err("every entry must be at least 1".into());
    }
    Ok(Profile(parts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusRange {
    pub min: u64,
    pub max: u64,
}

fn parse_genus_range(text: &str) -> Result<GenusRange, String> {
    let (lo, hi) = match text.split_once('-') {
        Some((lo, hi)) => (lo, hi),
        None => (text, text),
    };
    let min: u64 = lo.trim().parse().map_err(|e| format!("bad genus: {e}"))?;
    let max: u64 = hi.trim().parse().map_err(|e| format!("bad genus: {e}"))?;
    if min > max {
        return Err(format!("empty genus range {min}-{max}"));
    }
    Ok(GenusRange { min, max })
}

/// Runs a parsed command line and maps errors to exit code 2.
pub fn run(cli: Cli) -> ExitCode {
    let result = match cli.command {
        Command::Compute(args) => commands::compute(args),
        Command::Table(args) => commands::table(args),
        Command::Series(args) => commands::series(args),
        Command::Verify(args) => commands::verify(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
