//! Exact q-deformed discrete probability.
//!
//! The crate is organised in layers:
//!
//! - [`qnum`]: the q-calculus kernel over exact rationals.
//! - [`qdist`]: pmfs, moments, tails and generating functions of the
//!   q-Bernoulli, q-Pascal, q-Poisson, q-hypergeometric, q-contagious and
//!   q-uniform families.
//! - [`qprocess`]: the sequential trial and urn processes behind them, with
//!   exhaustive path enumeration and a seeded Monte Carlo sampler.
//! - [`qverify`]: an executable catalog of identities and limit statements.
//! - [`cli`]: the `qprob` command-line front end.

pub mod cli;
pub mod error;
pub mod qdist;
pub mod qnum;
pub mod qprocess;
pub mod qverify;

pub use error::{QError, Result};
