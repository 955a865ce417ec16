use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} vs {right} variables")]
    VarMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("operator does not normalize the ideal: {0}")]
    NotNormalizing(String),
    #[error("operator does not act by a scalar on degree {degree}")]
    NotScalar { degree: u32 },
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("result leaves the Q-Laurent class: {0}")]
    NotQLaurent(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("identity violated: {0}")]
    TheoryViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_same(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::VarMismatch { left, right })
    }
}
