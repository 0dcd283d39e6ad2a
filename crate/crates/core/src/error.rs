use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unsupported field GF({p}^{e}): {reason}")]
    UnsupportedField { p: u64, e: u32, reason: &'static str },

    #[error("operands live over different fields")]
    FieldMismatch,

    #[error("the zero element has no degree")]
    UndefinedDegree,

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },

    /// A coefficient was requested beyond the stored truncation.
    #[error("insufficient precision: need coefficient index {needed}, only {available} known")]
    InsufficientPrecision { needed: usize, available: usize },

    #[error("coefficient {index} must vanish (its y-exponent would be {y_exponent} < 1)")]
    ForcedZero { index: usize, y_exponent: i64 },

    #[error("structure twist must have degree 0, found {0}")]
    InvalidTwist(i64),

    #[error("values are not compatible with a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("tensor is not in normal form: first-factor exponent ({a}, {b}) not below p")]
    NotNormalForm { a: u32, b: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("walkthrough mismatch at stage `{stage}`")]
    WalkthroughMismatch { stage: String },
}
