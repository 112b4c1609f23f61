use thiserror::Error;

/// Crate-wide error type. Variant names follow the failure surfaces of the
/// library operations; the payload is a human-readable detail string.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("empty order: {0}")]
    EmptyOrder(String),
    #[error("no witness: {0}")]
    NoWitness(String),
    #[error("base mismatch: {0}")]
    BaseMismatch(String),
    #[error("out of interval: {0}")]
    OutOfInterval(String),
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("bad cover: {0}")]
    BadCover(String),
    #[error("no endpoints: {0}")]
    NoEndpoints(String),
    #[error("piece not located: {0}")]
    NotLocated(String),
    #[error("unverified automorphism: {0}")]
    UnverifiedAutomorphism(String),
    #[error("color mismatch: {0}")]
    ColorMismatch(String),
    #[error("witness failure: {0}")]
    WitnessFailure(String),
    #[error("fuel exhausted: {0}")]
    FuelExhausted(String),
    #[error("missing endpoints: {0}")]
    MissingEndpoints(String),
}

pub type Result<T> = std::result::Result<T, Error>;
