use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("probability vector is empty")]
    EmptyModel,
    #[error("probabilities sum to {sum}, not 1")]
    SumNotOne { sum: String },
    #[error("probability {value} at position {index} is outside (0, 1)")]
    OutOfRange { index: usize, value: String },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("leading probability is tied (p_1 = p_2 = {0}); the asymptotic formula has a pole")]
    DegenerateLeader(String),
    #[error("top tie-group exhausts the probability mass (k_1 * p_1 = {0} >= 1)")]
    Degenerate(String),
    #[error("reduced quadrature needs a strictly dominant top group; use the Monte Carlo estimator for homogeneous models")]
    UnsupportedModel,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
