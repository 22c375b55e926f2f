use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot contract a scalar")]
    ContractScalar,

    #[error("expected a form of degree {expected}, got degree {found}")]
    Degree { expected: usize, found: usize },

    #[error("invalid multi-index: {0}")]
    InvalidIndex(String),

    #[error("invalid scalar `{0}`")]
    ParseScalar(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("map is singular")]
    Singular,

    #[error("unknown algebra kind `{0}`")]
    UnknownAlgebra(String),

    #[error("basis element {0} is not orthogonal to the unit")]
    NotImaginary(usize),

    #[error("form induced by the algebra is not alternating")]
    NotAlternating,

    #[error("invalid orbit id {0} (expected 1..=8)")]
    InvalidOrbit(u8),

    #[error("orbit {orbit} has no `{variant}` variant")]
    UnknownVariant { orbit: u8, variant: String },

    #[error("parameter constraint violated: {0}")]
    Constraint(String),

    #[error("invariant table does not separate the orbits: {0}")]
    AmbiguousTable(String),

    #[error("no invertible map found after {0} attempts")]
    SamplingExhausted(u32),

    #[error("theorem hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("invalid cohomology model: {0}")]
    Model(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
