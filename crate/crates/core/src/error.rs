use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sequence '{name}' supplies {available} terms, {requested} requested")]
    GeneratorExhausted {
        name: String,
        requested: usize,
        available: usize,
    },

    #[error("need {needed} terms, only {available} available")]
    InsufficientTerms { needed: usize, available: usize },

    #[error("convergence failure: {0}")]
    ConvergenceFailure(String),

    #[error("every entry of Shanks row {row} has a vanishing denominator")]
    DegenerateDenominator { row: usize },

    #[error("inconsistent summation: {0}")]
    InconsistentSummation(String),

    #[error("continuation has a pole on the integration path near t = {0}")]
    PoleOnPath(f64),

    #[error("singular Padé system for orders [{n}/{m}]")]
    SingularSystem { n: usize, m: usize },

    #[error("degenerate moments: {0}")]
    DegenerateMoments(String),

    #[error("tail mismatch: {0}")]
    TailMismatch(String),

    #[error("mode budget exceeded: {0}")]
    ModeBudgetExceeded(String),

    #[error("requested order {requested} exceeds the configured bound {limit}")]
    ResourceLimit { requested: usize, limit: usize },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for failures of the numerical procedure itself, as opposed to
    /// malformed or out-of-range input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::ConvergenceFailure(_)
                | Error::DegenerateDenominator { .. }
                | Error::InconsistentSummation(_)
                | Error::PoleOnPath(_)
                | Error::SingularSystem { .. }
                | Error::DegenerateMoments(_)
                | Error::TailMismatch(_)
                | Error::ModeBudgetExceeded(_)
        )
    }
}
