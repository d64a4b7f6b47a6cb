use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series did not converge within {cap} terms at x = {x}")]
    NonConvergence { cap: usize, x: String },

    #[error("gamma function overflow: {0}")]
    GammaOverflow(String),

    #[error("argument too close to a zero of the kernel: {0}")]
    PoleProximity(String),

    #[error("found only {found} of {requested} zeros below the scan ceiling {ceiling}")]
    InsufficientZeros {
        requested: usize,
        found: usize,
        ceiling: f64,
    },

    #[error("bracketing failure: {0}")]
    Bracketing(String),

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("zero table: {0}")]
    Table(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
