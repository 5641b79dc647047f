//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("negative entry at {location}: {value}")]
    NegativeEntry { location: String, value: f64 },

    #[error("row (measurement {measurement}, preparation {preparation}) sums to {sum}, not 1")]
    RowSumViolation {
        measurement: usize,
        preparation: usize,
        sum: f64,
    },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("{what} = {value} out of range")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("alphabet size {size} too small, need at least 2")]
    AlphabetTooSmall { size: usize },

    #[error("invalid assignment: {0}")]
    AssignmentInvalid(String),

    #[error("game is not unique at (b={bob_answer}, s={alice_question}, t={bob_question}): {winners} winning answers")]
    NotUnique {
        bob_answer: String,
        alice_question: String,
        bob_question: String,
        winners: usize,
    },

    #[error("no winning answer for (b={bob_answer}, s={alice_question}, t={bob_question})")]
    NoWinningAnswer {
        bob_answer: String,
        alice_question: String,
        bob_question: String,
    },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix dimension {dim} exceeds the desk-scale cap {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("epsilon {epsilon} is not below the guessing probability {p_guess}")]
    EpsilonTooLarge { epsilon: f64, p_guess: f64 },

    #[error("label shape error: {0}")]
    LabelShape(String),

    #[error("{what} did not converge (residual gap {gap})")]
    NotConverged { what: String, gap: f64 },
}
