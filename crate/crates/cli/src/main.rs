//! ramsey-lab: build witness constructions, analyze graphs, check lemmas on
//! concrete graph families, and compute exact small Ramsey numbers.
//!
//! Output contract: machine-readable JSON on stdout, human-readable tables
//! on stderr. Exit codes: 0 verified/computed, 1 counterexample or failed
//! `--expect`, 2 usage or parse error, 3 capacity hit or bounded result.

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::report::{Failure, RunContext, EXIT_OK, EXIT_USAGE};

mod analyze;
mod construct;
mod lemma;
mod ramsey;
mod report;

#[derive(Parser)]
#[command(
    name = "ramsey-lab",
    version,
    about = "Constructions, lemma checks, and exact small Ramsey numbers for K_{2,n} versus wheels"
)]
struct Cli {
    /// Worker threads for search commands: 1 serial (default), 0 lets the
    /// runtime pick, n explicit. Falls back to the RAMSEY_LAB_JOBS env var.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Master seed for randomized commands. Defaults to a hash of the
    /// command line (minus --jobs) and is echoed in every report.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit witness constructions as graph6 on stdout.
    Construct {
        #[command(subcommand)]
        what: construct::ConstructCmd,
    },
    /// Parse graph6 input and report structural measurements.
    Analyze(analyze::AnalyzeArgs),
    /// Compute or bound a small Ramsey number by exhaustive search.
    Ramsey(ramsey::RamseyArgs),
    /// Check one lemma over a corpus, an exhaustive family, or random
    /// samples.
    Lemma(lemma::LemmaArgs),
}

// ===== seed and worker resolution =====

/// FNV-1a over the command line, skipping --jobs (worker count must never
/// change results, so it must not change the derived seed either).
fn derive_seed(args: &[String]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut hash = OFFSET;
    let mut skip_value = false;
    for arg in args {
        if skip_value {
            skip_value = false;
            continue;
        }
        if arg == "--jobs" {
            skip_value = true;
            continue;
        }
        if arg.starts_with("--jobs=") {
            continue;
        }
        for &byte in arg.as_bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(PRIME);
        }
        hash ^= 0x1f;
        hash = hash.wrapping_mul(PRIME);
    }
    hash
}

fn resolve_jobs(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(jobs) = flag {
        return Ok(jobs);
    }
    match std::env::var("RAMSEY_LAB_JOBS") {
        Err(_) => Ok(1),
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::usage(format!(
                "RAMSEY_LAB_JOBS must be an unsigned integer, got {text:?}"
            ))
        }),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let seed = cli.seed.unwrap_or_else(|| derive_seed(&argv));
    let jobs = match resolve_jobs(cli.jobs) {
        Ok(jobs) => jobs,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            return ExitCode::from(failure.code);
        }
    };
    let ctx = RunContext {
        command: format!("ramsey-lab {}", argv.join(" ")),
        seed,
        jobs,
        started: Instant::now(),
    };

    let result = match &cli.command {
        Command::Construct { what } => construct::run(&ctx, what),
        Command::Analyze(args) => analyze::run(&ctx, args),
        Command::Ramsey(args) => ramsey::run(&ctx, args),
        Command::Lemma(args) => lemma::run(&ctx, args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
