use thiserror::Error;

use crate::io::dsl::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("ideal is not admissible: {0}")]
    NotAdmissible(String),

    #[error("admissibility is inconclusive: no nilpotency witness up to {nmax}")]
    Inconclusive { nmax: usize },

    #[error("presentations live over different quivers")]
    QuiverMismatch,

    #[error("validation failed: {}", .0.join("; "))]
    Validation(Vec<String>),

    #[error("not coherent with the arrows: {0}")]
    Incoherent(String),

    #[error("relations are not compatible: {0}")]
    Incompatible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{}", .0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("\n"))]
    Parse(Vec<ParseError>),

    /// An oracle cross-check disagreed with a construction. Reaching this is a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit status for the command-line tool: 2 for parse errors,
    /// 4 when a resource cap stopped the computation, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::CapExceeded { .. } | Error::Inconclusive { .. } => 4,
            _ => 3,
        }
    }
}
