use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidSpec(String),

    #[error("divisor of zero is undefined")]
    ZeroDivisor,

    #[error("weight is not in the expected lattice: {0}")]
    BadWeight(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
