//! Error kinds shared by the checking and search operations.

use std::error::Error;
use std::fmt;

/// Why an operation could not produce a verdict.
///
/// The variants deliberately mirror the process exit codes of the CLI:
/// `Argument` and `Degenerate` are caller mistakes, `Capacity` means the
/// request is beyond the configured desk-scale limits, and
/// `HypothesisNotMet` means the input fails a precondition of the check
/// itself rather than of the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    /// Input is structurally too small for the question to make sense.
    Degenerate(String),
    /// A parameter is outside its documented range.
    Argument(String),
    /// The request exceeds a representation or search-size cap.
    Capacity(String),
    /// The graph does not satisfy the hypotheses of the check.
    HypothesisNotMet(String),
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::Degenerate(msg) => write!(f, "degenerate input: {msg}"),
            CheckError::Argument(msg) => write!(f, "invalid argument: {msg}"),
            CheckError::Capacity(msg) => write!(f, "capacity exceeded: {msg}"),
            CheckError::HypothesisNotMet(msg) => write!(f, "hypothesis not met: {msg}"),
        }
    }
}

impl Error for CheckError {}
