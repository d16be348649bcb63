use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    #[error("index tuple does not conform to shape {shape}: {reason}")]
    NonConforming { shape: String, reason: String },

    #[error("shape {shape} has {parts} parts but sl_{{n+1}} with n = {n} allows at most {max}", max = n + 1)]
    ShapeTooTall { shape: String, parts: usize, n: usize },

    #[error("tensor element has a nontrivial polynomial part")]
    NontrivialPolynomialPart,

    #[error("cannot parse polynomial: {0}")]
    ParsePolynomial(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
