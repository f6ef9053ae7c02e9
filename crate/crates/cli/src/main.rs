//! `gstar`: verification driver for the graded involution algebras.

mod cache;
mod commands;
mod config;
mod error;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::config::{RunConfig, RunFlags};
use crate::error::{CliError, CliResult, EXIT_OK, EXIT_VERIFICATION};

#[derive(Debug, Parser)]
#[command(name = "gstar", version, about = "Exact identity and cocharacter verification for graded involution algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every generating identity.
    Verify(RunFlags),
    /// Tabulate dim P and dim Γ for all multidegrees up to --max.
    Dims(RunFlags),
    /// Reconcile predicted multiplicities with computed dimensions.
    Cochar(RunFlags),
    /// Check the highest weight vector families.
    Hwv(RunFlags),
}

fn run(cli: Cli) -> CliResult<bool> {
    let (flags, handler): (&RunFlags, fn(&RunConfig) -> CliResult<report::Report>) = match &cli.command {
        Command::Verify(f) => (f, commands::verify),
        Command::Dims(f) => (f, commands::dims),
        Command::Cochar(f) => (f, commands::cochar),
        Command::Hwv(f) => (f, commands::hwv),
    };
    let cfg = RunConfig::resolve(flags)?;
    let report = handler(&cfg)?;
    let text = report.render(cfg.format)?;
    std::io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Output(e.to_string()))?;
    Ok(report.passed)
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFICATION,
        Err(e) => {
            eprintln!("gstar: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
