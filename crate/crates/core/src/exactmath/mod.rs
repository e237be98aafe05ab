//! Exact arbitrary-precision arithmetic: rationals, dense polynomials,
//! canonical rational functions, Sturm-sequence root counting and the number
//! theory (primality, p-adic valuations) behind divisibility certificates.
//!
//! Every value is immutable and every operation is a pure function of its
//! inputs, so the whole module is safe for unrestricted concurrent use.

mod nt;
mod poly;
mod ratfunc;
mod rational;
mod sturm;

pub use nt::{is_prime, is_prime_u64, padic_valuation};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::{
    floor_log2, parse_rational, pow2, rat, ratio, round_down_dyadic, round_up_dyadic, Rational,
};
pub use sturm::{positivity_bound, sturm_count_positive};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    /// Root counting and positivity bounds are undefined for the zero
    /// polynomial (it has infinitely many roots).
    #[error("zero polynomial has infinitely many roots")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    /// The primality test is deterministic only below 2^64 and refuses
    /// larger inputs rather than silently going probabilistic.
    #[error("primality test out of deterministic range (n >= 2^64)")]
    OutOfDeterministicRange,
    #[error("expected a positive integer")]
    NonPositiveInteger,
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
}
