use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),

    #[error("descent {descent} out of range for a composition of {weight}")]
    DescentOutOfRange { descent: usize, weight: usize },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },

    #[error("products are not supported in the {0} basis")]
    UnsupportedProduct(String),

    #[error("degree {degree} exceeds the transition table bound {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("series constant term is not the unit")]
    NonUnitConstant,

    #[error("word {0:?} is not nondecreasing")]
    NotNondecreasing(Vec<usize>),

    #[error("word {0:?} is not a nondecreasing parking function")]
    NotParking(Vec<usize>),

    #[error("profile ends at {needed}, cannot encode it with n = {n}")]
    ProfileTooLong { needed: usize, n: usize },

    #[error("compositions {left} and {right} are not compatible")]
    Incompatible { left: String, right: String },

    #[error("tree rebuild failed at step {step}: {reason}")]
    RebuildFailed { step: usize, reason: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{0}")]
    OutOfDomain(String),

    #[error("size {size} exceeds the brute-force bound {max}")]
    SizeBound { size: usize, max: usize },

    #[error("rank vector sums to {got}, expected {expected}")]
    RankMismatch { got: usize, expected: usize },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
