//! Exact arithmetic functions on positive integers.
//!
//! Everything here is a pure function of its arguments. Values that are not
//! always integral (notably [`ws`]) are returned as reduced [`Rational`]s so
//! that callers decide where, if anywhere, to take a floor.

mod arith;
mod factor;
mod prime;

pub use arith::{big_k, binom, central_binom, divisors, floor_log2, lpp, omega, omega1, p_part, ws};
pub use factor::{factorize, Factorization};
pub use prime::is_prime;

/// Reduced fraction with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumthError {
    #[error("zero has no prime factorization")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ws(n) needs n >= 2, got {0}")]
    WsDomain(u64),
    #[error("invalid factor list: {0}")]
    BadFactors(String),
}
