use thiserror::Error;

/// Errors raised by field construction, linear algebra and the exact oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field F_{q}^{m} does not fit the 64-bit element encoding")]
    FieldTooLarge { q: u64, m: u32 },
    #[error("modulus {0} is not a monic irreducible polynomial of the requested degree")]
    InvalidModulus(u64),
    #[error("value {value} is not an element of a field of order {order}")]
    InvalidElement { value: u64, order: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("generator matrix does not have full row rank")]
    RankDeficient,
    #[error("the code has dimension 0")]
    ZeroDimensionalCode,
    #[error("the syndrome system has no solution")]
    InconsistentSystem,
    #[error("expansion basis elements are not linearly independent over the base field")]
    DependentBasis,
    #[error("coordinate {0} is zero but must be invertible")]
    ZeroCoordinate(usize),
    #[error("enumeration of {needed} candidates exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
