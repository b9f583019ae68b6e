//! `tensalg`: load algebra definitions from JSON, run validations and
//! constructions, and execute the check suites.
//!
//! Every command prints aligned tables followed by one JSON result block on
//! stdout. The exit code is 0 iff no check failed, 1 if a check failed and
//! 2 on load or construction errors.

mod commands;
mod table;
mod workspace;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use tensalg::adjunctions::{Suite, SuiteConfig};
use tensalg::Limits;

use crate::commands::Output;
use crate::workspace::Workspace;

#[derive(Parser, Debug)]
#[command(name = "tensalg", version, about = "Finite quantale-valued tense algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Workspace file with the named objects.
    #[arg(long, short, global = true)]
    workspace: Option<PathBuf>,
    /// Seed for the check suites.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Number of instances per suite.
    #[arg(long, global = true, default_value_t = 100)]
    count: usize,
    /// Largest accepted base carrier (overrides TENSALG_MAX_CARRIER).
    #[arg(long, global = true)]
    max_carrier: Option<usize>,
    /// Also write the JSON result block to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print only the JSON result block.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Load and validate every object in the workspace.
    Validate,
    /// List the module homomorphisms FROM -> TO.
    Homs { from: String, to: String },
    /// Build the hom frame J[FSL, MODULE].
    HomFrame { fsl: String, module: String },
    /// Build FRAME ⊗ FSL from its generating pairs.
    Tensor { frame: String, fsl: String },
    /// Build the power MODULE^FRAME with its operator F^J.
    Fj { module: String, frame: String },
    /// Run a check suite.
    Check {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Reproduce the worked example and compare it with the golden tables.
    PaperExample,
}

fn load(cli: &Cli, limits: &Limits) -> Result<Workspace> {
    let path = cli.workspace.as_ref().context("this command needs --workspace FILE")?;
    Ok(Workspace::load(path, limits)?)
}

fn run(cli: &Cli) -> Result<Output> {
    let mut limits = Limits::from_env();
    if let Some(n) = cli.max_carrier {
        limits.max_carrier = n;
    }
    Ok(match &cli.command {
        Command::Validate => commands::validate(&load(cli, &limits)?),
        Command::Homs { from, to } => commands::homs(&load(cli, &limits)?, from, to)?,
        Command::HomFrame { fsl, module } => commands::hom_frame_cmd(&load(cli, &limits)?, fsl, module, &limits)?,
        Command::Tensor { frame, fsl } => commands::tensor_cmd(&load(cli, &limits)?, frame, fsl, &limits)?,
        Command::Fj { module, frame } => commands::fj(&load(cli, &limits)?, module, frame, &limits)?,
        Command::Check { suite } => {
            let suite_limits = Limits { max_carrier: limits.max_carrier, ..SuiteConfig::default().limits };
            commands::check(*suite, cli.seed, cli.count, suite_limits)
        }
        Command::PaperExample => commands::paper_example(&limits)?,
    })
}

/// Writes the tables and the result block, tolerating a closed stdout.
fn emit(out: &Output, quiet: bool, block: &str) -> std::io::Result<()> {
    let mut w = std::io::stdout().lock();
    if !quiet {
        for t in &out.tables {
            writeln!(w, "{t}")?;
        }
    }
    writeln!(w, "{block}")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let block = serde_json::to_string_pretty(&out.result).expect("result is valid JSON");
            let _ = emit(&out, cli.quiet, &block);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, format!("{block}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let block = serde_json::json!({ "ok": false, "error": format!("{e:#}") });
            let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&block).expect("valid JSON"));
            ExitCode::from(2)
        }
    }
}
