//! Machinery behind the `qfikit` command line: family sweeps with scaling
//! fits, bound verifiers, and the flat key=value config format.

pub mod config;
pub mod sweep;
pub mod verify;

use std::fmt;

/// Exit-code contract: 0 success, 2 input error, 3 oracle mismatch,
/// 4 assertion miss.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    OracleMismatch(String),
    AssertionMiss(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::OracleMismatch(_) => 3,
            CliError::AssertionMiss(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::OracleMismatch(m) => write!(f, "oracle mismatch: {m}"),
            CliError::AssertionMiss(m) => write!(f, "assertion miss: {m}"),
        }
    }
}

impl From<qfikit::Error> for CliError {
    fn from(e: qfikit::Error) -> Self {
        match e {
            qfikit::Error::BoundViolation { .. } => CliError::AssertionMiss(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
