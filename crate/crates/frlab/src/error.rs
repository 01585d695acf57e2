use thiserror::Error;

/// Crate-wide error type.
///
/// `InvalidInput` marks contract violations on arguments or data files;
/// `Infeasible` marks requests that exceed a declared capability boundary
/// (enumeration caps, unsupported parameter ranges, impossible repairs).
/// The CLI maps them to exit codes 2 and 3 respectively.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("insufficient symbols: have {have}, need {need} (deficit {})", need - have)]
    InsufficientSymbols { have: usize, need: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn infeasible(msg: impl Into<String>) -> Error {
    Error::Infeasible(msg.into())
}
