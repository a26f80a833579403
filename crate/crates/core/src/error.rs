use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at origin: denominator vanishes at t = 0")]
    PoleAtOrigin,
    #[error("mismatched residue fields: q = {0} and q = {1}")]
    FieldMismatch(u32, u32),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("missing data: {0}")]
    Missing(String),
    #[error("counts did not stabilize: {0}")]
    Precision(String),
    #[error("pole of the Gamma function at {0}")]
    GammaPole(String),
    #[error("unsupported domain: {0}")]
    Domain(String),
    #[error("quadrature did not converge: {0}")]
    NoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}
