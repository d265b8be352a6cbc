use thiserror::Error;

/// An element access outside `[0, vector_length)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{operation}: index {attempted_index} is out of bounds for a vector of length {vector_length}")]
pub struct OobDiagnostic {
    pub attempted_index: i64,
    pub vector_length: usize,
    pub operation: &'static str,
}

/// Which bound of a vector interval broke its constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Low,
    High,
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Bound::Low => "low",
            Bound::High => "high",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid vector interval [{low}..{high}] for length {vec_len}: {bound} must satisfy {constraint}")]
pub struct IntervalError {
    pub low: i64,
    pub high: i64,
    pub vec_len: usize,
    pub bound: Bound,
    pub constraint: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    OutOfBounds(#[from] OobDiagnostic),

    #[error(transparent)]
    InvalidInterval(#[from] IntervalError),

    /// A vector interval validated for one length was used on a vector of another.
    #[error(
        "vector interval was validated for length {interval_len} but the vector has length {vector_len}"
    )]
    IntervalVectorMismatch { interval_len: usize, vector_len: usize },

    #[error("{operation}: the vector must not be empty")]
    EmptyVector { operation: &'static str },

    #[error("{operation}: vectors must have the same length (got {left} and {right})")]
    LengthMismatch {
        operation: &'static str,
        left: usize,
        right: usize,
    },

    #[error("{algorithm}: expected {expected}")]
    MissingInput {
        algorithm: &'static str,
        expected: &'static str,
    },
}

/// Coarse error classes; the CLI maps each one to an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Domain,
    OutOfBounds,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::OutOfBounds(_) => ErrorKind::OutOfBounds,
            Error::InvalidInterval(_)
            | Error::IntervalVectorMismatch { .. }
            | Error::EmptyVector { .. }
            | Error::LengthMismatch { .. } => ErrorKind::Domain,
            Error::MissingInput { .. } => ErrorKind::Usage,
        }
    }

    pub fn oob(&self) -> Option<&OobDiagnostic> {
        match self {
            Error::OutOfBounds(d) => Some(d),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
