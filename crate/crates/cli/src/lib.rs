//! Library side of the `ssg` command-line tool: file formats, algorithm
//! dispatch and the subcommands, kept separate from argument parsing so they
//! can be tested directly.

pub mod bench;
pub mod commands;
pub mod format;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const STRUCTURE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const INFEASIBLE: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input, or an invalid parameter.
    #[error("{0}")]
    Parse(String),
    /// The requested algorithm does not apply to the input or refused it.
    #[error("{0}")]
    Structure(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => exit::PARSE,
            CliError::Structure(_) => exit::STRUCTURE,
            CliError::Internal(_) => exit::INTERNAL,
        }
    }
}

impl From<ssg_core::Error> for CliError {
    fn from(e: ssg_core::Error) -> Self {
        use ssg_core::Error as E;
        match e {
            E::Structure(_) | E::Refused(_) => CliError::Structure(e.to_string()),
            E::Input(_) | E::NodeOutOfRange { .. } | E::SelfLoop(_) | E::DuplicateArc(..) => {
                CliError::Parse(e.to_string())
            }
        }
    }
}

pub fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}
