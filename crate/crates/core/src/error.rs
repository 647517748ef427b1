use thiserror::Error;

use crate::weights::Weight;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight coordinates must sum to zero, got sum {0}")]
    NotSumZero(i64),

    #[error("a weight needs at least two coordinates (rank >= 1), got {0}")]
    RankTooSmall(usize),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("weight {0} is not in the first layer")]
    NotFirstLayer(Weight),

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {0} is not quasi-dominant")]
    NotQuasiDominant(Weight),

    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: expected {expected}, got {actual}")]
    RankMismatch { expected: usize, actual: usize },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("size mismatch: shape has {shape} boxes but content sums to {content}")]
    SizeMismatch { shape: usize, content: usize },

    #[error("set element {element} outside 1..={bound}")]
    SetElementOutOfRange { element: usize, bound: usize },

    #[error("rank {rank} exceeds the configured cap {cap}")]
    RankAboveCap { rank: usize, cap: usize },

    #[error("linear system inconsistent at {weight}: {detail}")]
    Inconsistent { weight: Weight, detail: String },

    #[error("identity failed for {subject}: expected {expected}, got {actual}")]
    IdentityFailed {
        subject: String,
        expected: String,
        actual: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
