use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("ambient variable count must be positive")]
    ZeroAmbient,

    #[error("zero ideal not supported")]
    ZeroIdeal,

    #[error("unit ideal not supported")]
    UnitIdeal,

    #[error("exponent overflow")]
    Overflow,

    #[error("ideal is not m-primary")]
    NotMPrimary,

    #[error("standard monomials infinite: ideal is not m-primary")]
    StandardMonomialsInfinite,

    #[error("search budget exceeded: budget {budget}, required {required}")]
    BudgetExceeded { budget: u64, required: u128 },

    #[error("prime not associated")]
    PrimeNotAssociated,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("class hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("colon chain did not stabilize within horizon {horizon}")]
    NoStabilization { horizon: usize },

    #[error("parse error at position {position} near `{token}`: {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
