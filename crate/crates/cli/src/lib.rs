//! Records, cache, tables and verification suites behind the `wittenmzv`
//! command.

pub mod cache;
pub mod record;
pub mod table;
pub mod verify;

use wittenmzv_core::Error;

/// Failure classes with their process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Divergent(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Internal(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Divergent(_) => 2,
            Failure::Verification(_) => 3,
            Failure::Internal(_) | Failure::Io(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Divergent { what, violated } => {
                Failure::Divergent(format!("{what} diverges; violated: {}", violated.join(", ")))
            }
            Error::Precondition(m) => Failure::Usage(m),
            other => Failure::Internal(other.to_string()),
        }
    }
}
