use thiserror::Error;

/// Errors raised by the exact sequence machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The pair `(p, q)` is not coprime, so it never occurs as consecutive Stern values.
    #[error("({0}, {1}) is not coprime")]
    NotCoprime(String, String),

    /// `4ab + N` has no integer square root; exact mode refuses to go irrational.
    #[error("radicand {0} is not a perfect square")]
    NonSquareRadicand(String),

    /// A value that a proven identity says must hold did not. Never expected in practice.
    #[error("integrity violation: {0}")]
    Integrity(String),

    #[error("range too large: {0}")]
    RangeTooLarge(String),

    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("cache format error: {0}")]
    Cache(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
