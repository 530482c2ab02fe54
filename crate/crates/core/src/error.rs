use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("unknown calculus {0} (expected 1..=7)")]
    UnknownCalculus(u8),
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("no braiding table for calculus {0}")]
    NoBraiding(u8),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
