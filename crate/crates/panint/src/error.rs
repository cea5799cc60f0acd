use crate::space::SubsetIndex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("space must have between 1 and 16 points, got {0}")]
    BadSpaceSize(usize),
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("missing value for set {0}")]
    MissingSet(SubsetIndex),
    #[error("capacity not monotone: mu({smaller}) > mu({larger})")]
    NonMonotone {
        smaller: SubsetIndex,
        larger: SubsetIndex,
    },
    #[error("negative value for set {0}")]
    NegativeValue(SubsetIndex),
    #[error("mu(X) must be positive")]
    ZeroTotal,
    #[error("non-finite value for set {0}")]
    NonFinite(SubsetIndex),
    #[error("objects belong to different spaces")]
    SpaceMismatch,
    #[error("function must be nonnegative, point {0} is negative")]
    NegativeInput(usize),
    #[error("ground set too large for enumeration: n={n}, limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("exponent p must be >= 1, got {0}")]
    BadExponent(f64),
    #[error("capacity is not subadditive (hypothesis required here)")]
    NotSubadditive,
    #[error("parse error: {0}")]
    Parse(String),
}
