use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31 - 1]")]
    NotPrime(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),
    #[error("malformed structure table: {0}")]
    MalformedTable(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("algebra {0} is not commutative")]
    NotCommutative(String),
    #[error("embedding is not central: {0}")]
    NonCentral(String),
    #[error("complex endpoints do not match: {0}")]
    EndpointMismatch(String),
    #[error("{0}")]
    Invalid(String),
}
