use thiserror::Error;

/// Domain and refinement errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid rational `{text}`: {reason}")]
    InvalidRational { text: String, reason: String },

    #[error("stirling index out of range: j={j} exceeds n={n}")]
    IndexOutOfRange { n: usize, j: usize },

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("the zero polynomial has no root structure")]
    ZeroPolynomial,

    #[error("cannot remove term {l}: it lies in the affine tail (prefix length {prefix_len})")]
    RemoveInAffineTail { l: usize, prefix_len: usize },

    #[error("tolerance must be positive, got {0}")]
    NonpositiveTolerance(f64),

    #[error("series evaluation requires x > 0, got {0}")]
    NonpositivePoint(String),

    #[error("ratio form undefined: phi_{index} = {value} is zero or a negative integer")]
    PochhammerPole { index: usize, value: String },

    #[error("alpha vector length {alphas} does not match multi-index length {parts}")]
    LengthMismatch { alphas: usize, parts: usize },

    #[error("a multi-index must have at least one part")]
    EmptyMultiIndex,

    #[error("orthogonality weight diverges: alpha_{index} = {value} <= -1")]
    DivergentWeight { index: usize, value: String },

    #[error("operation requires a sequence with zero tail, found tail `{found}`")]
    NonZeroTail { found: String },

    #[error("phi_{index} = {value} is a negative integer, which the hypothesis excludes")]
    NegativeIntegerEntry { index: usize, value: String },

    #[error("phi_{index} = {value} must be nonnegative")]
    NegativeEntry { index: usize, value: String },

    #[error("expected exactly one negative entry among phi_1..phi_{upto}, found {found}")]
    NegativeEntryCount { upto: usize, found: usize },

    #[error("sequences must satisfy phi <= psi entrywise with a strict inequality among the first {n} entries")]
    NotStrictlyBelow { n: usize },

    #[error("the pair value m must be an integer >= 2, got {0}")]
    PairTooSmall(usize),

    #[error("P({m}) = 0 violates the hypothesis P(m) != 0 for positive integers m")]
    RootAtPositiveInteger { m: usize },

    #[error("gamma_0 must be 1, got {0}")]
    BadLeadingGamma(String),

    #[error("shift must be positive, got {0}")]
    NonpositiveShift(String),

    #[error("n = {n} must exceed the prefix length K = {k}")]
    NBelowPrefix { n: usize, k: usize },

    #[error("refinement budget exhausted: {0}")]
    RefinementExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
