//! Report envelope, exit-code plumbing, and output helpers shared by every
//! subcommand: JSON reports go to stdout, human-readable tables to stderr.

use std::time::Instant;

use ramsey_core::CheckError;
use serde::Serialize;

// ===== exit codes =====

/// Everything verified or computed as requested.
pub const EXIT_OK: u8 = 0;
/// A counterexample was found, or an `--expect` assertion failed.
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
/// Usage or parse error: bad flags, bad pattern grammar, bad graph6 input.
pub const EXIT_USAGE: u8 = 2;
/// The request exceeds a configured capacity, or the answer is only a bound.
pub const EXIT_CAPACITY: u8 = 3;

/// A command that could not run to a report: carries the process exit code
/// and a message for stderr.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn capacity(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_CAPACITY,
            message: message.into(),
        }
    }

    pub fn counterexample(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_COUNTEREXAMPLE,
            message: message.into(),
        }
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Failure {
        let code = match e {
            CheckError::Capacity(_) => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<u8, Failure>;

// ===== run context and envelope =====

/// Per-invocation facts every report echoes: the command line, the resolved
/// seed, the worker count, and the start instant for wall-clock accounting.
pub struct RunContext {
    pub command: String,
    pub seed: u64,
    pub jobs: usize,
    pub started: Instant,
}

/// The one JSON shape this tool prints: a self-contained record of what ran,
/// with what inputs, and the subcommand's payload.
#[derive(Serialize)]
struct ReportEnvelope<'a, T: Serialize> {
    schema_version: u32,
    tool: &'static str,
    tool_version: &'static str,
    command: &'a str,
    seed: u64,
    wall_ms: u64,
    payload_kind: &'static str,
    payload: T,
}

/// Prints the report envelope as one JSON line on stdout.
pub fn emit_report<T: Serialize>(ctx: &RunContext, payload_kind: &'static str, payload: T) {
    let envelope = ReportEnvelope {
        schema_version: 1,
        tool: "ramsey-lab",
        tool_version: env!("CARGO_PKG_VERSION"),
        command: &ctx.command,
        seed: ctx.seed,
        wall_ms: ctx.started.elapsed().as_millis() as u64,
        payload_kind,
        payload,
    };
    println!(
        "{}",
        serde_json::to_string(&envelope).expect("report envelopes serialize")
    );
}

// ===== human-readable side channel =====

/// Prints an aligned two-column table to stderr.
pub fn human_table(title: &str, rows: &[(&str, String)]) {
    eprintln!("{title}");
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (key, value) in rows {
        eprintln!("  {key:<width$}  {value}");
    }
}

pub fn human_note(text: &str) {
    eprintln!("{text}");
}
