//! Exact q-calculus kernel: q-numbers, factorials, Gaussian binomials,
//! q-shifted powers, Euler expansions, the q-derivative, the Jackson integral
//! and the q-exponential family.
//!
//! Nothing here uses floating point. Limits and infinite products are
//! reported as [`Interval`]s certified to contain the true value.

pub mod base;
pub mod brackets;
pub mod interval;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod shifted;

pub use base::{QBase, Regime};
pub use brackets::{bracket, q_binomial, q_factorial, rebase_binomial, rebase_bracket, rebase_factorial};
pub use interval::Interval;
pub use poly::{jackson_integral, q_derivative, PPoly};
pub use scalar::{approx, format_rational, int, parse_rational, powi, ratio, Rational};
pub use series::{certified_sum, q_exponential, ratio_series_enclosure, CertifiedSum, TermSign};
pub use shifted::{
    euler_coefficients, euler_operator_coefficients, q_pochhammer, shifted_pow, shifted_pow_infinite, symmetric_pow,
};
