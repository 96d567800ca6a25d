use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration sizes differ: {0} vs {1}")]
    MismatchedN(usize, usize),

    #[error("n must lie in 1..={max}, got {n}")]
    InvalidN { n: usize, max: usize },

    #[error("ambient powers differ: {0} vs {1}")]
    MismatchedAmbient(usize, usize),

    #[error("tuple has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("coordinate {index} outside 1..={m}")]
    CoordinateOutOfRange { index: usize, m: usize },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("centralizer generator requires a nonzero shift")]
    ZeroShift,

    #[error("subgroup has no component isomorphic to the base")]
    NoBaseNotFg,

    #[error("candidate {0} is not a member of the subgroup")]
    NotAMember(usize),

    #[error("permutation is not a bijection of 1..={0}")]
    NotBijection(usize),

    #[error("root value for orbit {0} is not fixed by its holonomy")]
    RootNotFixed(usize),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
