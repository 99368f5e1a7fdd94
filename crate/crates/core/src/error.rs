use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("graph is not {k}-regular")]
    NotRegular { k: usize },

    /// An exact computation produced a value that contradicts an identity it
    /// must satisfy (e.g. a non-exact division in Faddeev–LeVerrier).
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("eigensolver did not converge (best residual {residual:e})")]
    Convergence { residual: f64 },

    #[error("matrix of order {n} exceeds the permanent size limit {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("catalog mismatch: {0}")]
    CatalogMismatch(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
