// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Failures of a subcommand, each tied to a process exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// No parameters satisfy the request, or the built gate is not exact.
    #[error("{0}")]
    NoSolution(String),
    /// Malformed input file or inconsistent arguments.
    #[error("{0}")]
    Input(String),
    /// Population reached the guard band of the truncated space.
    #[error("{0}")]
    GuardViolation(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 success, 1 no solution, 2 bad input, 3 guard violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::NoSolution(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::GuardViolation(_) => 3,
        }
    }
}

impl From<iontrap_core::Error> for CliError {
    fn from(e: iontrap_core::Error) -> Self {
        use iontrap_core::Error as E;
        match e {
            E::GuardBandLeak { .. } => CliError::GuardViolation(e.to_string()),
            E::NoValidEta { .. }
            | E::NoPhysicalSolution { .. }
            | E::VanishingRabiFrequency(_)
            | E::ControlIndexNotFrozen { .. } => CliError::NoSolution(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Input(format!("csv output failed: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("json: {e}"))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
