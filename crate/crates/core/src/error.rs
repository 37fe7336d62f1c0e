use thiserror::Error;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid denominator: zero")]
    InvalidDenominator,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid primes: {0}")]
    InvalidPrimes(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("clause {clause} has {len} literals, expected exactly 3")]
    Arity { clause: usize, len: usize },

    #[error("variable {variable} occurs {count} times (at most 4 allowed)")]
    OccurrenceBound { variable: usize, count: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
