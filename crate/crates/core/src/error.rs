use thiserror::Error;

use crate::rootsys::{Family, Weight};

#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible root system {family}_{rank}")]
    InadmissibleType { family: Family, rank: usize },

    #[error("unknown root system type `{0}`")]
    UnknownType(String),

    #[error("Weyl group enumeration exceeded cap {cap} after reaching {reached} elements")]
    CapExceeded { cap: usize, reached: usize },

    #[error("weight {0} is not dominant")]
    NonDominant(Weight),

    #[error("weight {weight} has {got} coordinates, expected {expected}")]
    RankMismatch {
        weight: Weight,
        got: usize,
        expected: usize,
    },

    #[error("operation requires type {expected}, got {got}")]
    WrongType { expected: String, got: String },

    /// A value the theory guarantees to be nonnegative came out negative.
    #[error("positivity violated: {quantity} at lambda={lambda}, n={degree} is {value}")]
    Violation {
        quantity: &'static str,
        lambda: Weight,
        degree: i64,
        value: String,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
