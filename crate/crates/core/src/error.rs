use thiserror::Error;

use crate::qarith::CoeffRing;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor over Z must have leading coefficient ±1")]
    NonMonicDivisor,
    #[error("operation requires a field, got {0}")]
    NotAField(CoeffRing),
    #[error("division is not exact")]
    NonExactDivision,
    #[error("gcd classification mismatch for (m={m}, n={n}): {detail}")]
    ClassificationMismatch { m: u64, n: u64, detail: String },
    #[error("remainder of phi_{big} by phi_{small} is not divisible by {p}")]
    RemainderNotDivisibleByP { big: u64, small: u64, p: u32 },
    #[error("invalid arguments: {0}")]
    InvalidArgument(String),
    #[error("d_out * d_in is nonzero")]
    NotAComplex,
    #[error("nonunit residual {residual} left after cyclotomic trial division")]
    UnfactoredResidual { residual: String },
    #[error("lifted coboundary is not divisible by {p} (n={n}, k={k})")]
    NonDivisibleByP { p: u32, n: usize, k: usize },
    #[error("inconsistent ranks at n={n}, l={l}, p={p}: {detail}")]
    InconsistentRanks {
        n: usize,
        l: usize,
        p: u32,
        detail: String,
    },
    #[error("not found: {0}")]
    NotFound(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Errors that signal an arithmetic or logic bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NonExactDivision
                | Error::ClassificationMismatch { .. }
                | Error::RemainderNotDivisibleByP { .. }
                | Error::NotAComplex
                | Error::UnfactoredResidual { .. }
                | Error::NonDivisibleByP { .. }
                | Error::InconsistentRanks { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
