//! Exact-arithmetic toolkit for holonomic (P-recursive) sequences.
//!
//! The crate has four layers:
//!
//! - [`exactmath`]: arbitrary-precision rationals, dense polynomials over
//!   them, canonical rational functions, Sturm root counting and the number
//!   theory used by certificates.
//! - [`logcalc`]: a calculus on expressions `Σ pᵢ(x)·log(x + bᵢ) + r(x)`:
//!   exact differentiation, the derivative chain that collapses the log part
//!   into a rational function, and a computable bound on positive real zeros.
//! - [`precur`]: recurrences with polynomial coefficients — unrolling,
//!   verification, a sequence catalog, and exact recurrence guessing via
//!   fraction-free nullspace computation.
//! - [`refute`]: prime-divisibility certificates showing that a
//!   rational-coefficient candidate recurrence for `log n` cannot hold.
//!
//! [`cli`] wires everything into a command-line tool with stable file
//! formats and exit codes.

pub mod cli;
pub mod exactmath;
pub mod logcalc;
pub mod precur;
pub mod refute;
