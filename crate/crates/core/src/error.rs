use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Every variant corresponds to a violated precondition; none of the
/// algorithms fail on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero is not allowed here ({0})")]
    Zero(&'static str),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("{q} is not a unit modulo {n}")]
    NotCoprime { q: u64, n: u64 },
    #[error("divisor must be monic")]
    NotMonic,
    #[error("operation needs a polynomial of degree at least {0}")]
    DegreeTooSmall(usize),
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("modulus {0} exceeds the supported word range")]
    ModulusTooLarge(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
