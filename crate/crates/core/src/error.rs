use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero family")]
    ZeroFamily,
    #[error("zero vector has no leading term")]
    ZeroVector,
    #[error("cannot reduce by the zero vector")]
    ZeroDivisor,
    #[error("zero module")]
    ZeroModule,
    #[error("zero column at index {0}")]
    ZeroColumn(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("input is not a Gröbner basis")]
    NotGroebner,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
