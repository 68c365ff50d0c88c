use thiserror::Error;

use crate::freealg::MultiDegree;

/// Errors raised by the arithmetic layers and the membership engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} is outside the supported range 2..=65536")]
    PrimeOutOfRange(u64),
    #[error("operands live over different primes ({left} and {right})")]
    PrimeMismatch { left: u32, right: u32 },
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("substitution sends x{var} to a polynomial with a constant term")]
    ConstantImage { var: u32 },
    #[error("{what} = {got} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        got: u64,
        cap: u64,
    },
    #[error("index {index} out of range: {context}")]
    IndexOutOfRange { index: i64, context: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("polynomial is not in slice {expected}")]
    SliceMismatch { expected: MultiDegree },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown check id {0}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
