use thiserror::Error;

use crate::rootsystem::LieType;

/// Errors raised by the algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Lie type {family}{rank}")]
    UnsupportedType { family: char, rank: usize },

    #[error("cannot parse Lie type `{0}`")]
    BadLieType(String),

    #[error("cannot parse weight `{0}`: expected comma-separated integers")]
    BadWeight(String),

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a root of {1}")]
    NotARoot(String, LieType),

    #[error("{0} is not a positive root of {1}")]
    NotPositiveRoot(String, LieType),

    #[error("{0} does not lie in the weight lattice")]
    NotIntegral(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {weight} is not admissible at level {level}")]
    NotAdmissible { weight: String, level: u32 },

    #[error("charge {0} has level {1}, the truncated rule needs level 1")]
    ChargeNotUnitLevel(String, String),

    #[error("module dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: u64, cap: u64 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0} is only implemented for F4")]
    RequiresF4(&'static str),

    #[error("not in scope of the fundamental-type reduction: {0}")]
    OutOfReductionScope(String),

    #[error("reduction failed: {0}")]
    ReductionFailed(String),

    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
