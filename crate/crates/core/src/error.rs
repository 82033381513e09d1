use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic pair ({m}, {n}) is not coprime")]
    NonCoprimePair { m: u32, n: u32 },
    #[error("characteristic pair ({m}, {n}) has m < 2")]
    DegeneratePair { m: u32, n: u32 },
    #[error("characteristic exponents do not increase at pair {index}: {detail}")]
    NonIncreasingExponents { index: usize, detail: String },
    #[error("smooth branch has no characteristic pairs")]
    SmoothBranch,
    #[error("branches are not aligned: {0}")]
    IncompatibleContact(String),
    #[error("malformed pair sequence {0:?}")]
    ParsePairs(String),
    #[error("malformed profile {0:?}")]
    ParseProfile(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("intersection form is singular")]
    SingularForm,
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,
    #[error("graph has no arrows")]
    NoArrows,

    #[error("profile ({p},{q},{r},{s}) requires p > 0 and s > 0")]
    NonPositiveEnds { p: i64, q: i64, r: i64, s: i64 },
    #[error("profile ({p},{q},{r},{s}) fits no type: {reason}")]
    Unclassifiable {
        p: i64,
        q: i64,
        r: i64,
        s: i64,
        reason: &'static str,
    },
    #[error("ps = rq, det' is undefined")]
    ProportionalExponents,
    #[error("normalization did not terminate within {0} moves")]
    NormalizationDiverged(usize),
    #[error("budget violates {rule}: {detail}")]
    InvalidBudget { rule: &'static str, detail: String },
    #[error("expected {expected} singular points, got {got}")]
    PointCount { expected: usize, got: usize },
    #[error("no admissible budget for the profile")]
    Infeasible,

    #[error("sample is degenerate: {0}")]
    Degenerate(String),
    #[error("all {0} trials were degenerate")]
    AllTrialsDegenerate(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
