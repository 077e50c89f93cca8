//! Spec-file ingestion, pipeline orchestration and reports for `hopfcyc`.

pub mod commands;
pub mod report;
pub mod spec;

use std::fmt;

/// Process-level failures. Check failures are report entries, not errors.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable, malformed or inconsistent input.
    Input(String),
    /// A computation would exceed `--cap`.
    Cap { forecast: usize, cap: usize },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) => f.write_str(s),
            CliError::Cap { forecast, cap } => {
                write!(f, "aborted: forecast dimension {forecast} exceeds --cap {cap}")
            }
        }
    }
}

impl std::error::Error for CliError {}
