use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition string `{0}`")]
    BadPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("no usable certification prime found (need p = 1 mod {0})")]
    NoPrime(u64),
    #[error("non-integral character value for ({0}, {1})")]
    NonIntegralValue(String, String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("bad symbol: {0}")]
    BadSymbol(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("usage: {0}")]
    Usage(String),
}
