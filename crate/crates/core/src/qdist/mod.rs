//! q-deformed discrete distributions: pmfs, moments, tails and generating
//! functions.
//!
//! Outcomes are indexed by the integer `k`; the random variable takes the
//! value `[k]` (or the integer range for [`range_pmf`]). Finite laws are
//! exact. Laws whose entries involve limits return [`Interval`] entries and a
//! certified defect.
//!
//! [`Interval`]: crate::qnum::Interval

pub mod bernoulli;
pub mod pascal;
pub mod pmf;
pub mod poisson;
pub mod spec;
pub mod uniform;
pub mod urn;

pub use bernoulli::{
    bernoulli_inf_moments, bernoulli_inf_pmf, bernoulli_moments, bernoulli_nonzero_tail,
    bernoulli_nonzero_tail_infinite, bernoulli_nonzero_tail_integral, bernoulli_pgf, bernoulli_pgf_closed,
    bernoulli_pmf, bernoulli_pmf_formal, bernoulli_pmf_poly, bernoulli_zero_tail, bernoulli_zero_tail_integral,
    central_moment, central_moment_poly, factorial_moment, factorial_moment_closed, raw_moment, raw_moment_direct,
    CentralKind, InfiniteTail,
};
pub use pascal::{
    fewer_than_r_mass, geometric_entry, geometric_pmf, negbinomial_entry, negbinomial_pmf, negbinomial_tail,
    parties_p1_by_count, parties_probabilities, Parties,
};
pub use pmf::{EnclosedPmf, ExactPmf, MomentReport, Pmf};
pub use poisson::{poisson_constant, poisson_moments, poisson_pmf, poisson_weights, super_unit_series, super_unit_term};
pub use spec::{DistSpec, Mode};
pub use uniform::{range_pmf, range_pmf_alt_n2, range_pmf_brute_force, uniform_moments, uniform_pmf};
pub use urn::{contagious_pmf, hypergeom_dual, hypergeom_pmf};
