use thiserror::Error;

/// Errors produced by the sequence-analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The input lacks the algebraic structure an engine relies on.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A theorem's hypotheses do not hold for the requested parameters.
    #[error("hypothesis not satisfied: {0}")]
    Precondition(String),

    /// The theorem makes no statement at this `k`.
    #[error("no claim at k = {k}: {reason}")]
    NoClaim { k: usize, reason: String },

    /// An exhaustive search would need more LC evaluations than allowed.
    #[error("search needs {required} LC evaluations but the budget is {budget}")]
    Budget { required: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
