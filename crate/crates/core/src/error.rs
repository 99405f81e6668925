use thiserror::Error;

/// Errors produced by the engine.
#[derive(Error, Debug)]
pub enum Error {
    #[error("subsets are not disjoint: {0}")]
    NotDisjoint(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown species `{0}`")]
    UnknownSpecies(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("maps do not form a complex: d_out ∘ d_in ≠ 0 at entry ({row}, {col})")]
    NotAComplex { row: usize, col: usize },
    #[error("truncation bound too small: need N ≥ {needed}, got {got}")]
    TruncationTooSmall { needed: usize, got: usize },
    #[error("species document invalid at `{path}`: {message}")]
    SpeciesDocument { path: String, message: String },
    #[error("bicomodule law violated ({law}), witness: {witness}")]
    LawViolation { law: String, witness: String },
    #[error("not a cocycle, witness: {witness}")]
    NotACocycle { witness: String },
    #[error("not normalized, witness: {witness}")]
    NotNormalized { witness: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
