use thiserror::Error;

use crate::cartan::Weight;

#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible root system {spec}: {reason}")]
    InadmissibleRootSystem { spec: String, reason: String },

    #[error("cannot parse root system '{0}' (expected e.g. A2, B3, G2)")]
    ParseRootSystem(String),

    #[error("cannot parse weight '{0}' (expected comma-separated integers)")]
    ParseWeight(String),

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {weight} has length {found}, root system has rank {expected}")]
    RankMismatch { weight: Weight, expected: usize, found: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("module of dimension {dim} exceeds the dimension guard {guard}")]
    DimensionGuard { dim: String, guard: usize },

    #[error("{0} is not a weight of the module")]
    NotAWeight(Weight),

    #[error("matrix is not primitive of weight {weight}: {reason}")]
    NotPrimitive { weight: Weight, reason: String },

    #[error("Weyl group has more than {cap} elements")]
    WeylGroupTooLarge { cap: usize },

    #[error("degenerate matrix space: every matrix is zero")]
    DegenerateSpace,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("module has no F-word basis labels")]
    MissingWords,

    /// A computed object violated an identity that must hold exactly.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
