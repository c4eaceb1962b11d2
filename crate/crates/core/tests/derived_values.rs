//! Documented example values, each recomputed by a test-side oracle.

mod common;

use std::collections::BTreeMap;

use common::*;
use num_traits::{One, Zero};
use qprob::qdist::{
    bernoulli_inf_moments, bernoulli_inf_pmf, bernoulli_moments, bernoulli_nonzero_tail, bernoulli_nonzero_tail_integral,
    bernoulli_pgf, bernoulli_pgf_closed, bernoulli_pmf, bernoulli_zero_tail, bernoulli_zero_tail_integral, central_moment,
    contagious_pmf, factorial_moment, factorial_moment_closed, geometric_entry, geometric_pmf, hypergeom_dual,
    hypergeom_pmf, negbinomial_entry, parties_probabilities, poisson_moments, poisson_pmf, range_pmf, range_pmf_alt_n2,
    raw_moment, uniform_moments, uniform_pmf, CentralKind, ExactPmf,
};
use qprob::qnum::{
    approx, bracket, euler_coefficients, jackson_integral, q_binomial, q_derivative, q_exponential, q_factorial,
    rebase_binomial, rebase_bracket, shifted_pow, shifted_pow_infinite, symmetric_pow, Interval, PPoly, QBase,
};
use qprob::qprocess::{
    aggregate, enumerate_patterns, pattern_probability, pattern_probability_infinite, step_conditionals, PathPattern,
    ProcessState, Scheme,
};

fn half() -> QBase {
    QBase::from_ratio(1, 2)
}

fn law(pmf: &ExactPmf) -> BTreeMap<u32, R> {
    pmf.entries.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (*k, v.clone())).collect()
}

fn eps(k: u32) -> R {
    pow(&r(1, 10), k)
}

/// Probability of an explicit Bernoulli step sequence, multiplying the per-step conditionals.
fn bernoulli_steps(steps: &[bool], p: &R, q: &R) -> R {
    let mut zeros = 0;
    steps.iter().fold(R::one(), |acc, &nonzero| {
        let hit = pow(q, zeros) * p;
        if nonzero {
            acc * hit
        } else {
            zeros += 1;
            acc * (R::one() - hit)
        }
    })
}

fn all_steps(n: u32) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |mask| (0..n).map(|i| mask >> i & 1 == 1).collect())
}

#[test]
fn brackets_and_binomials_match_power_sums_and_pascal() {
    let q = r(1, 2);
    assert_eq!(bracket(3, &half()), r(7, 4));
    assert_eq!(q_factorial(3, &half()), r(21, 8));
    assert_eq!(q_factorial(3, &half()), br(1, &q) * br(2, &q) * br(3, &q));
    assert_eq!(q_binomial(4, 2, &half()), r(35, 16));
    for qv in grid_qs().into_iter().chain([r(2, 1), r(3, 1)]) {
        let qb = QBase::new(qv.clone()).unwrap();
        let rows = pascal(12, &qv);
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(bracket(n as i64, &qb), br(n as i64, &qv));
            for (k, entry) in row.iter().enumerate() {
                assert_eq!(&q_binomial(n as i64, k as i64, &qb), entry, "[{n} {k}] at q = {qv}");
            }
        }
    }
}

#[test]
fn rebased_values() {
    assert_eq!(rebase_bracket(2, &half()), r(3, 1));
    assert_eq!(rebase_bracket(2, &half()), pow(&r(2, 1), 1) * br(2, &r(1, 2)));
    assert_eq!(rebase_binomial(4, 2, &half()), r(35, 1));
    assert_eq!(rebase_binomial(4, 2, &half()), pow(&r(2, 1), 4) * &pascal(4, &r(1, 2))[4][2]);
}

#[test]
fn shifted_powers_and_expansions() {
    let q = half();
    assert_eq!(shifted_pow(&r(1, 1), &r(-1, 2), 2, &q).unwrap(), (R::one() - r(1, 2)) * (R::one() - r(1, 4)));
    assert_eq!(shifted_pow(&r(1, 1), &r(-1, 2), 2, &q).unwrap(), r(3, 8));
    assert_eq!(euler_coefficients(2, &q), vec![r(1, 1), br(2, &r(1, 2)), r(1, 2)]);
    let (a, b) = (r(1, 1), r(-1, 2));
    let direct = (0..4u32).fold(R::one(), |acc, i| acc * (&a + pow(&r(1, 2), i) * &b));
    let expanded = euler_coefficients(4, &q)
        .iter()
        .enumerate()
        .fold(R::zero(), |acc, (j, c)| acc + c * pow(&a, 4 - j as u32) * pow(&b, j as u32));
    assert_eq!(expanded, direct);
    let rows = pascal(2, &r(1, 2));
    assert_eq!(symmetric_pow(&r(1, 1), &r(1, 1), 2, &q), rows[2].iter().fold(R::zero(), |s, c| s + c));
    assert_eq!(symmetric_pow(&r(1, 1), &r(1, 1), 2, &q), r(7, 2));
}

#[test]
fn q_derivative_matches_difference_quotient() {
    let qv = r(1, 2);
    let q = half();
    // (f(x) - f(qx)) / ((1 - q) x) at a few points, for f = (1 ∸ x)^3 and x^s.
    let poch = |x: &R| (0..3u32).fold(R::one(), |acc, i| acc * (R::one() - pow(&qv, i) * x));
    let f = PPoly::q_pochhammer(&R::one(), 3, &q);
    let df = q_derivative(&f, &q);
    for x in [r(1, 3), r(2, 5), r(7, 4)] {
        let quotient = (poch(&x) - poch(&(&qv * &x))) / ((R::one() - &qv) * &x);
        assert_eq!(df.eval(&x), quotient);
        let shifted = (0..2u32).fold(R::one(), |acc, i| acc * (R::one() - pow(&qv, i + 1) * &x));
        assert_eq!(df.eval(&x), -br(3, &qv) * shifted);
    }
    for s in 0..6usize {
        let d = q_derivative(&PPoly::monomial(R::one(), s), &q);
        assert_eq!(d, if s == 0 { PPoly::zero() } else { PPoly::monomial(br(s as i64, &qv), s - 1) });
    }
}

#[test]
fn jackson_integral_termwise() {
    let qv = r(1, 2);
    let f = PPoly::new(vec![r(1, 1), -qv.clone()]);
    let upper = r(1, 2);
    // Termwise rule: the integral of x^s from 0 to a is a^(s+1) / [s+1].
    let oracle = &upper / br(1, &qv) - &qv * pow(&upper, 2) / br(2, &qv);
    assert_eq!(jackson_integral(&f, &upper, &half()), oracle);
    assert_eq!(oracle, r(5, 12));
}

#[test]
fn infinite_product_and_exponentials() {
    let q = half();
    let iv = shifted_pow_infinite(&r(1, 2), &q, &eps(12)).unwrap();
    let partial = (0..60u32).fold(R::one(), |acc, i| acc * (R::one() - pow(&r(1, 2), i + 1)));
    let oracle = Interval::new(&partial * (R::one() - pow(&r(1, 2), 60)), partial).unwrap();
    assert!(iv.intersects(&oracle) && iv.width() <= eps(12));
    assert!((approx(iv.lo()) - 0.288_788_095_1).abs() < 1e-9);

    let e0 = q_exponential(0, &r(1, 1), &q, &eps(9)).unwrap();
    assert!((approx(&e0.midpoint()) - 1.0 / euler_product_f64(0.5, 0.5)).abs() < 1e-8);
    assert!((approx(&e0.midpoint()) - 3.462_746).abs() < 1e-6);
    for mu in [0, 1] {
        assert_eq!(q_exponential(mu, &R::zero(), &q, &eps(9)).unwrap(), Interval::point(R::one()));
    }
    let lambda = r(1, 3);
    let product = &q_exponential(0, &lambda, &q, &eps(14)).unwrap() * &q_exponential(1, &-lambda, &q, &eps(14)).unwrap();
    assert!(product.contains(&R::one()));
}

#[test]
fn bernoulli_examples_against_paths() {
    let (p, qv, q) = (r(1, 2), r(1, 2), half());
    let pmf = bernoulli_pmf(2, &p, &q).unwrap();
    let expected = BTreeMap::from([(0, r(3, 8)), (1, r(3, 8)), (2, r(1, 4))]);
    assert_eq!(law(&pmf), expected);
    assert_eq!(bernoulli_paths(2, &p, &qv), expected);

    let m = bernoulli_moments(2, &p, &q).unwrap();
    let paths = bernoulli_paths(2, &p, &qv);
    let mean = paths.iter().fold(R::zero(), |a, (k, v)| a + br((*k).into(), &qv) * v);
    let second = paths.iter().fold(R::zero(), |a, (k, v)| a + pow(&br((*k).into(), &qv), 2) * v);
    assert_eq!((m.mean.clone(), m.second_moment.clone(), m.variance.clone()), (r(3, 4), r(15, 16), r(3, 8)));
    assert_eq!((mean.clone(), second.clone()), (m.mean, m.second_moment));

    assert_eq!(raw_moment(2, &q, 0), PPoly::one());
    assert_eq!(raw_moment(2, &q, 1), PPoly::monomial(br(2, &qv), 1));
    assert_eq!(raw_moment(2, &q, 2).eval(&p), second);

    // E[(xi - [0])(xi - [1]) / q] over the path law.
    let fact = paths.iter().fold(R::zero(), |a, (k, v)| {
        let x = br((*k).into(), &qv);
        a + &x * (&x - R::one()) / &qv * v
    });
    assert_eq!(factorial_moment(2, &p, &q, 2).unwrap(), fact);
    assert_eq!(fact, r(3, 8));
    assert_eq!(factorial_moment_closed(2, &p, &q, 2), fact);
    assert_eq!(factorial_moment(2, &p, &q, 3).unwrap(), R::zero());

    // (xi - mu)(xi - q mu)
    let central = paths.iter().fold(R::zero(), |a, (k, v)| {
        let x = br((*k).into(), &qv);
        a + (&x - &mean) * (&x - &qv * &mean) * v
    });
    assert_eq!(central_moment(2, &p, &q, 2, CentralKind::Shifted(0)).unwrap(), central);
    assert_eq!(central, r(3, 8));
    assert_eq!(central_moment(2, &p, &q, 1, CentralKind::Shifted(0)).unwrap(), R::zero());
    assert_eq!(central_moment(2, &p, &q, 0, CentralKind::Shifted(0)).unwrap(), R::one());

    let z = r(2, 1);
    let pgf = paths.iter().fold(R::zero(), |a, (k, v)| a + pow(&z, *k) * v);
    assert_eq!(pgf, r(17, 8));
    assert_eq!(bernoulli_pgf(2, &p, &q, &z).unwrap(), pgf);
    assert_eq!(bernoulli_pgf_closed(2, &p, &q, &z), pgf);
}

#[test]
fn tails_against_paths() {
    for qv in grid_qs() {
        let q = QBase::new(qv.clone()).unwrap();
        for p in grid_ps() {
            for n in 1..=6u32 {
                let paths = bernoulli_paths(n, &p, &qv);
                for idx in 0..n {
                    let few_zeros = paths.iter().filter(|(k, _)| n - **k <= idx).fold(R::zero(), |a, (_, v)| a + v);
                    let few_nonzeros = paths.iter().filter(|(k, _)| **k <= idx).fold(R::zero(), |a, (_, v)| a + v);
                    assert_eq!(bernoulli_zero_tail(n, &p, &q, idx).unwrap(), few_zeros);
                    assert_eq!(bernoulli_zero_tail_integral(n, &p, &q, idx).unwrap(), few_zeros);
                    assert_eq!(bernoulli_nonzero_tail(n, &p, &q, idx).unwrap(), few_nonzeros);
                    assert_eq!(bernoulli_nonzero_tail_integral(n, &p, &q, idx).unwrap(), few_nonzeros);
                }
            }
        }
    }
    let (p, q) = (r(1, 2), half());
    assert_eq!(bernoulli_zero_tail(2, &p, &q, 1).unwrap(), r(5, 8));
    assert_eq!(bernoulli_nonzero_tail(2, &p, &q, 1).unwrap(), r(3, 4));
    assert!(bernoulli_zero_tail(2, &p, &q, 2).is_err());
}

#[test]
fn infinite_trial_law() {
    let (p, q) = (r(1, 2), half());
    let pmf = bernoulli_inf_pmf(&p, &q, 40, &eps(12)).unwrap();
    assert!((approx(&pmf.probability(0).midpoint()) - euler_product_f64(0.5, 0.5)).abs() < 1e-11);
    assert!(pmf.total().contains(&R::one()));
    let m = bernoulli_inf_moments(&p, &q).unwrap();
    assert_eq!((m.mean.clone(), m.variance.clone()), (r(1, 1), r(1, 2)));
    // Truncated expectation of [k] and [k]^2 with [k] = (1 - q^k) / (1 - q).
    let (mut mean, mut second) = (0.0, 0.0);
    for (k, iv) in &pmf.entries {
        let x = (1.0 - 0.5f64.powi(*k as i32)) / 0.5;
        mean += x * approx(&iv.midpoint());
        second += x * x * approx(&iv.midpoint());
    }
    assert!((mean - 1.0).abs() < 1e-9 && (second - mean * mean - 0.5).abs() < 1e-9);
}

#[test]
fn geometric_and_negative_binomial_against_paths() {
    let (p, qv, q) = (r(1, 2), r(1, 2), half());
    assert_eq!(geometric_entry(1, &p, &q), p);
    assert_eq!(geometric_entry(2, &p, &q), bernoulli_steps(&[false, true], &p, &qv));
    assert_eq!(geometric_entry(2, &p, &q), r(1, 8));
    // The r-th nonzero lands on trial j: paths of length j ending in a nonzero with r nonzeros.
    for qv in grid_qs() {
        let q = QBase::new(qv.clone()).unwrap();
        for p in grid_ps() {
            for rr in 1..=3u32 {
                for j in rr..=7u32 {
                    let oracle = all_steps(j)
                        .filter(|s| s[j as usize - 1] && s.iter().filter(|b| **b).count() == rr as usize)
                        .fold(R::zero(), |a, s| a + bernoulli_steps(&s, &p, &qv));
                    assert_eq!(negbinomial_entry(rr, j, &p, &q), oracle, "r={rr} j={j} p={p} q={qv}");
                }
            }
        }
    }
    assert_eq!(negbinomial_entry(2, 3, &p, &q), r(3, 32));
    let geometric = geometric_pmf(&p, &q, 60, false, &eps(12)).unwrap();
    let never = shifted_pow_infinite(&p, &q, &eps(14)).unwrap();
    let ever = Interval::new(R::one() - never.hi(), R::one() - never.lo()).unwrap();
    assert!(geometric.listed_mass().intersects(&ever));
    assert!(geometric.total().contains(&R::one()));
}

#[test]
fn parties_against_paths() {
    for qv in grid_qs() {
        let q = QBase::new(qv.clone()).unwrap();
        for p in grid_ps() {
            for a in 1..=4u32 {
                for b in 1..=4u32 {
                    // Player one wins iff a nonzeros occur within the first a + b - 1 trials.
                    let paths = bernoulli_paths(a + b - 1, &p, &qv);
                    let p1 = paths.iter().filter(|(k, _)| **k >= a).fold(R::zero(), |s, (_, v)| s + v);
                    let got = parties_probabilities(a, b, &p, &q).unwrap();
                    assert_eq!(got.p1, p1, "a={a} b={b} p={p} q={qv}");
                    assert_eq!(got.p2, R::one() - &p1);
                }
            }
        }
    }
    let got = parties_probabilities(1, 2, &r(1, 2), &half()).unwrap();
    assert_eq!((got.p1, got.p2), (r(5, 8), r(3, 8)));
}

#[test]
fn poisson_examples() {
    let q = half();
    let pmf = poisson_pmf(&r(1, 1), &q, 10, &eps(12)).unwrap();
    let zero = pmf.probability(0);
    assert!((approx(&zero.midpoint()) - euler_product_f64(0.5, 0.5)).abs() < 1e-11);
    assert_eq!(pmf.probability(2), zero.scale(&r(2, 3)));
    let degenerate = poisson_pmf(&R::zero(), &q, 5, &eps(12)).unwrap();
    assert_eq!(degenerate.probability(0), Interval::point(R::one()));
    assert!(degenerate.entries.iter().all(|(k, iv)| *k == 0 || iv.hi().is_zero()));
    let superunit = poisson_pmf(&r(1, 3), &QBase::from_ratio(2, 1), 30, &eps(12)).unwrap();
    assert!(superunit.total().contains(&R::one()));
    let m = poisson_moments(&r(1, 1), &q).unwrap();
    assert_eq!((m.mean, m.variance), (r(1, 1), r(1, 2)));
    // Truncated series: weights lambda^k / [k]! normalised numerically.
    let mut weights = Vec::new();
    let mut fact = 1.0f64;
    for k in 0..80i32 {
        if k > 0 {
            fact *= (1.0 - 0.5f64.powi(k)) / 0.5;
        }
        weights.push((k, 1.0 / fact));
    }
    let norm: f64 = weights.iter().map(|(_, v)| v).sum();
    let bracket_f = |k: i32| (1.0 - 0.5f64.powi(k)) / 0.5;
    let mean: f64 = weights.iter().map(|(k, v)| bracket_f(*k) * v / norm).sum();
    let second: f64 = weights.iter().map(|(k, v)| bracket_f(*k).powi(2) * v / norm).sum();
    assert!((mean - 1.0).abs() < 1e-9 && (second - 1.5).abs() < 1e-9);
}

#[test]
fn urn_examples() {
    let (qv, q) = (r(1, 2), half());
    let hyper = law(&hypergeom_pmf(1, 1, 1, &q).unwrap());
    assert_eq!(hyper, BTreeMap::from([(0, r(1, 3)), (1, r(2, 3))]));
    assert_eq!(hyper, urn_paths(1, 1, -1, 1, &qv));
    assert_eq!(law(&hypergeom_pmf(1, 1, 2, &q).unwrap()), BTreeMap::from([(1, r(1, 1))]));
    // Base 1/q = 2 value checked against the draw process run in base 2.
    let dual = hypergeom_dual(2, 1, 2, &q, 1).unwrap();
    assert_eq!(dual, urn_paths(2, 1, -1, 2, &r(2, 1))[&1]);
    let cont = law(&contagious_pmf(1, 1, 1, 2, &q).unwrap());
    assert_eq!(cont, BTreeMap::from([(0, r(1, 7)), (1, r(2, 7)), (2, r(4, 7))]));
    assert_eq!(cont, urn_paths(1, 1, 1, 2, &qv));
    assert_eq!(law(&aggregate(&Scheme::Contagious { m: 1, u: 1, s: 1, q: q.clone() }, 2).unwrap()), cont);
}

#[test]
fn uniform_and_range_examples() {
    let (qv, q) = (r(1, 2), half());
    let uniform = law(&uniform_pmf(2, &q));
    assert_eq!(uniform, BTreeMap::from([(0, r(4, 7)), (1, r(2, 7)), (2, r(1, 7))]));
    let mean = uniform.iter().fold(R::zero(), |a, (k, v)| a + br((*k).into(), &qv) * v);
    assert_eq!(mean, r(1, 2));
    assert_eq!(uniform_moments(2, &q).mean, mean);
    assert_eq!(law(&range_pmf(3, 1, &q).unwrap()), BTreeMap::from([(0, r(1, 1))]));
    let range = law(&range_pmf(1, 2, &q).unwrap());
    assert_eq!(range, BTreeMap::from([(0, r(5, 9)), (1, r(4, 9))]));
    assert_eq!(range, range_brute(1, 2, &qv));
    let alt = range_pmf_alt_n2(1, &q);
    assert_eq!(law(&alt), BTreeMap::from([(0, r(2, 3)), (1, r(1, 3))]));
    assert!(alt.total().is_one());
}

#[test]
fn process_examples() {
    let (p, qv, q) = (r(1, 2), r(1, 2), half());
    let bern = Scheme::Bernoulli { p: p.clone(), q: q.clone() };
    let pattern = PathPattern::new(vec![1, 0]).unwrap();
    assert_eq!(pattern_probability(&pattern, &bern).unwrap(), bernoulli_steps(&[false, true], &p, &qv));
    assert_eq!(pattern_probability(&pattern, &bern).unwrap(), r(1, 8));
    let all_zero = pattern_probability_infinite(&PathPattern::infinite(vec![]), &p, &q, &eps(12)).unwrap();
    assert!(all_zero.intersects(&shifted_pow_infinite(&p, &q, &eps(14)).unwrap()) && all_zero.width() <= eps(12));

    // Second-step conditionals given the first step.
    let start = ProcessState::default();
    assert_eq!(step_conditionals(start, &bern).unwrap(), (R::one() - &p, p.clone()));
    let after_zero = step_conditionals(start.advance(false), &bern).unwrap();
    let after_one = step_conditionals(start.advance(true), &bern).unwrap();
    assert_eq!(after_zero, (R::one() - &qv * &p, &qv * &p));
    assert_eq!(after_one, (R::one() - &p, p.clone()));

    let hyper = Scheme::Hypergeom { m: 1, u: 1, q: q.clone() };
    assert_eq!(step_conditionals(start, &hyper).unwrap(), (r(1, 3), r(2, 3)));
    for s in [-1i64, 0, 1, 2] {
        let cont = Scheme::Contagious { m: 2, u: 3, s, q: q.clone() };
        for nonzeros in 0..=2u32 {
            for zeros in 0..=2u32 {
                let (z, nz) = step_conditionals(ProcessState::new(nonzeros, zeros), &cont).unwrap();
                assert!((z + nz).is_one());
            }
        }
    }
}

#[test]
fn pattern_counting_matches_pascal() {
    for qv in grid_qs().into_iter().chain([r(2, 1)]) {
        let rows = pascal(8, &qv);
        for n in 0..=8u32 {
            for kappa in 0..=n {
                let patterns = enumerate_patterns(n, kappa);
                assert_eq!(patterns.len() as u64, (0..kappa as u64).fold(1u64, |c, i| c * (n as u64 - i) / (i + 1)));
                let total = patterns.iter().fold(R::zero(), |acc, pat| {
                    let exponent: u32 = pat.partial_sums()[..kappa as usize].iter().sum();
                    acc + pow(&qv, exponent)
                });
                assert_eq!(total, rows[n as usize][kappa as usize], "n={n} kappa={kappa} q={qv}");
            }
        }
    }
}
