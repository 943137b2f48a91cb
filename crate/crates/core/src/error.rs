use thiserror::Error;

use crate::vector::VectorViolation;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid degree list: {0}")]
    DegreeList(String),

    #[error("invalid Hilbert function: {0}")]
    HilbertFunction(String),

    #[error("ideal is not Artinian: no pure power of x{0}")]
    NotArtinian(usize),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("not an lpp sequence: {0}")]
    NotLppSequence(String),

    #[error("invalid vector: {0}")]
    InvalidVector(VectorViolation),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("field characteristic {0} is not prime")]
    NotPrime(u64),

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
