use std::path::PathBuf;

use thiserror::Error;

/// Usage or input problems.
pub const EXIT_USAGE: u8 = 64;
/// A size cap refused to build or analyze a graph.
pub const EXIT_SIZE_CAP: u8 = 65;
/// A library postcondition failed.
pub const EXIT_INTERNAL: u8 = 70;
pub const EXIT_IO: u8 = 74;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Graph(#[from] shiftlab::Error),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Graph(shiftlab::Error::SizeCap { .. }) => EXIT_SIZE_CAP,
            CliError::Graph(shiftlab::Error::Invariant(_)) => EXIT_INTERNAL,
            CliError::Graph(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
