use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the solvers and oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("malformed strategy tree: {0}")]
    MalformedTree(String),
    #[error("no meeting: {0}")]
    NoMeeting(String),
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInstance(msg.into())
    }
}
