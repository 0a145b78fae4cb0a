use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("jet derivative of order {requested} requested from a jet of order {order}")]
    OrderExceeded { requested: usize, order: usize },

    #[error("jet order must be in 1..=3, got {0}")]
    InvalidOrder(usize),

    #[error("harmonic sum H_{n}^<{ell}>({x}) has a pole in range")]
    PoleInRange { n: i64, ell: u32, x: Rational },

    #[error("singular parameter: {0}")]
    SingularParameter(String),

    #[error("outside domain: {0}")]
    DomainError(String),

    #[error("grid is empty after singular-point exclusion")]
    EmptyGrid,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cannot render report: {0}")]
    Format(String),
}

impl Error {
    /// True for the two "this point cannot be evaluated" variants that the
    /// verifier logs as skipped rather than failed.
    pub fn is_skip(&self) -> bool {
        matches!(
            self,
            Error::SingularParameter(_)
                | Error::DomainError(_)
                | Error::PoleInRange { .. }
                | Error::DivisionByZero
        )
    }
}
