//! The sequential processes behind the q-distributions.
//!
//! A path of `n` steps is a word in zeros and nonzeros, encoded as a
//! [`PathPattern`]. Each [`Scheme`] assigns a conditional probability to the
//! next step given the current [`ProcessState`]. Summing pattern
//! probabilities over all paths ([`aggregate`]) reproduces the closed-form
//! pmfs exactly and serves as their brute-force oracle; [`sample_paths`]
//! simulates the same processes with a seeded generator.

pub mod pattern;
pub mod sampler;
pub mod scheme;

pub use pattern::{enumerate_patterns, PathPattern};
pub use sampler::{sample_paths, SampleReport};
pub use scheme::{
    chain_probability, pattern_probability, pattern_probability_infinite, step_conditionals, ProcessState, Scheme,
};

use num_traits::Zero;

use crate::error::{QError, Result};
use crate::qdist::{ExactPmf, Pmf};
use crate::qnum::{bracket, Rational};

/// Largest `n` accepted by [`aggregate`] (there are `2^n` paths).
pub const MAX_AGGREGATE_TRIALS: u32 = 16;

/// Law of the number of nonzeros after `n` steps, summed over every path.
///
/// Outcomes that no feasible path reaches are omitted.
pub fn aggregate(scheme: &Scheme, n: u32) -> Result<ExactPmf> {
    if n > MAX_AGGREGATE_TRIALS {
        return Err(QError::Resource(format!(
            "exhaustive enumeration is limited to n <= {MAX_AGGREGATE_TRIALS}, got n = {n}"
        )));
    }
    let q = scheme.q();
    let mut rows = Vec::new();
    for kappa in 0..=n {
        if !scheme.feasible(kappa, n - kappa) {
            continue;
        }
        let mass = enumerate_patterns(n, kappa)
            .iter()
            .map(|pattern| pattern_probability(pattern, scheme))
            .try_fold(Rational::zero(), |acc, p| p.map(|p| acc + p))?;
        rows.push((kappa, mass, bracket(kappa.into(), q)));
    }
    Ok(Pmf::exact(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdist::{bernoulli_pmf, contagious_pmf, hypergeom_pmf};
    use crate::qnum::{int, ratio, QBase};

    #[test]
    fn aggregation_examples() {
        let q = QBase::from_ratio(1, 2);
        let bern = aggregate(&Scheme::Bernoulli { p: ratio(1, 2), q: q.clone() }, 2).unwrap();
        assert_eq!(bern, bernoulli_pmf(2, &ratio(1, 2), &q).unwrap());
        let hyper = aggregate(&Scheme::Hypergeom { m: 1, u: 1, q: q.clone() }, 2).unwrap();
        assert_eq!(hyper.entries.len(), 1);
        assert_eq!(hyper.probability(1), int(1));
        assert_eq!(hyper, hypergeom_pmf(1, 1, 2, &q).unwrap());
        let cont = aggregate(&Scheme::Contagious { m: 1, u: 1, s: 1, q: q.clone() }, 2).unwrap();
        assert_eq!(cont, contagious_pmf(1, 1, 1, 2, &q).unwrap());
        assert!(aggregate(&Scheme::Hypergeom { m: 9, u: 9, q }, 17).is_err());
    }
}
