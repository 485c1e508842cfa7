use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),

    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("polynomial is not divisible by the linear form {0}")]
    NotDivisible(String),

    #[error("polynomial is not in the subring generated by the given invariants")]
    NotInSubring,

    #[error("incompatible coefficient fields: {0}")]
    FieldMismatch(String),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not a positive root of the root system")]
    NotARoot(String),

    #[error("input is not invariant: {0}")]
    NotInvariant(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema violation at {path}: {msg}")]
    Schema { path: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
