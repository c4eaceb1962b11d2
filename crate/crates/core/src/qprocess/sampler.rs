use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

use super::scheme::{step_conditionals, ProcessState, Scheme};
use crate::error::{QError, Result};
use crate::qdist::spec::{check_not_super_unit, check_probability};
use crate::qdist::{bernoulli_pmf, contagious_pmf, hypergeom_pmf, DistSpec, ExactPmf, Pmf};
use crate::qnum::Rational;

/// Outcome of a Monte Carlo run compared with the exact law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub spec: DistSpec,
    pub n_samples: u64,
    pub counts: BTreeMap<u32, u64>,
    pub empirical: BTreeMap<u32, Rational>,
    /// Exact total variation distance between `empirical` and the exact pmf.
    pub tv_distance: Rational,
    pub seed: u64,
}

/// Nonzero-step thresholds: a step is nonzero iff a uniform `u64` is below
/// `floor(p_nonzero * 2^64)`. Indexed by `[nonzeros][zeros]`.
struct Thresholds(Vec<Vec<u128>>);

impl Thresholds {
    fn build(scheme: &Scheme, n: u32) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n - i)
                    .map(|j| match step_conditionals(ProcessState::new(i, j), scheme) {
                        Ok((_, nonzero)) => fixed_point(&nonzero),
                        // Unreachable: getting here needs a step of probability zero.
                        Err(_) => 0,
                    })
                    .collect()
            })
            .collect();
        Self(rows)
    }

    fn nonzero(&self, state: ProcessState, draw: u64) -> bool {
        u128::from(draw) < self.0[state.nonzeros as usize][state.zeros as usize]
    }
}

/// `floor(x * 2^64)` for `x` in `[0, 1]`.
fn fixed_point(x: &Rational) -> u128 {
    let scaled: BigInt = (x.numer() << 64u32) / x.denom();
    scaled.to_u128().expect("probability in [0, 1]")
}

/// Draws `n_samples` independent `n`-step paths and tallies the number of nonzeros.
///
/// Path `i` uses a ChaCha8 stream selected by `(seed, i)`, so the report does
/// not depend on how paths are scheduled across threads.
pub fn sample_paths(scheme: &Scheme, n: u32, n_samples: u64, seed: u64) -> Result<SampleReport> {
    if n_samples == 0 {
        return Err(QError::Domain("n_samples must be at least 1".into()));
    }
    let exact = exact_law(scheme, n)?;
    let thresholds = Thresholds::build(scheme, n);
    let tally = (0..n_samples)
        .into_par_iter()
        .fold(
            || vec![0u64; n as usize + 1],
            |mut acc, path| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(path);
                let mut state = ProcessState::default();
                for _ in 0..n {
                    state = state.advance(thresholds.nonzero(state, rng.next_u64()));
                }
                acc[state.nonzeros as usize] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; n as usize + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let counts: BTreeMap<u32, u64> =
        tally.into_iter().enumerate().filter(|(_, c)| *c > 0).map(|(k, c)| (k as u32, c)).collect();
    let total = Rational::from_integer(n_samples.into());
    let empirical: BTreeMap<u32, Rational> =
        counts.iter().map(|(k, c)| (*k, Rational::from_integer((*c).into()) / &total)).collect();
    let observed = Pmf { entries: empirical.clone(), values: exact.values.clone(), defect: Rational::zero() };
    Ok(SampleReport {
        spec: scheme.dist_spec(n),
        n_samples,
        counts,
        empirical,
        tv_distance: observed.tv_distance(&exact),
        seed,
    })
}

/// The closed-form law a scheme must reproduce, with probability-regime checks.
fn exact_law(scheme: &Scheme, n: u32) -> Result<ExactPmf> {
    match scheme {
        Scheme::Bernoulli { p, q } => {
            check_probability(p)?;
            check_not_super_unit(q, "sampling q-Bernoulli trials")?;
            bernoulli_pmf(n, p, q)
        }
        Scheme::Hypergeom { m, u, q } => hypergeom_pmf(*m, *u, n, q),
        Scheme::Contagious { m, u, s, q } => contagious_pmf(*m, *u, *s, n, q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{int, ratio, QBase};

    #[test]
    fn thresholds_are_exact_floors() {
        assert_eq!(fixed_point(&int(1)), 1u128 << 64);
        assert_eq!(fixed_point(&ratio(1, 2)), 1u128 << 63);
        assert_eq!(fixed_point(&ratio(1, 3)), (1u128 << 64) / 3);
    }

    #[test]
    fn deterministic_and_degenerate() {
        let scheme = Scheme::Bernoulli { p: ratio(1, 2), q: QBase::from_ratio(1, 2) };
        let a = sample_paths(&scheme, 4, 2_000, 7).unwrap();
        let b = sample_paths(&scheme, 4, 2_000, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.counts.values().sum::<u64>(), 2_000);
        let sure = Scheme::Bernoulli { p: int(1), q: QBase::from_ratio(1, 2) };
        let r = sample_paths(&sure, 5, 100, 1).unwrap();
        assert_eq!(r.empirical.get(&5), Some(&int(1)));
        assert_eq!(r.tv_distance, int(0));
        assert!(sample_paths(&Scheme::Bernoulli { p: ratio(1, 2), q: QBase::from_ratio(2, 1) }, 3, 10, 0).is_err());
    }
}
