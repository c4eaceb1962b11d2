//! The q-Poisson law in both regimes.
//!
//! For `q < 1` the law is `lambda^k / [k]! (1 ∸ lambda(1-q))^∞`. For `q > 1`
//! it is `q^(-C(k,2)) lambda^k / ([k]! (1 ∸ lambda)^k) * C`, where the
//! normalizing constant `C` is the reciprocal of the sum of the same terms.
//! At `q = 1` both reduce to the classical law with `C = e^(-lambda)`.

use num_traits::{One, Signed, Zero};

use super::pmf::{EnclosedPmf, MomentReport, Pmf};
use super::spec::check_positive_eps;
use crate::error::{QError, Result};
use crate::qnum::scalar::choose2;
use crate::qnum::{
    bracket, int, powi, q_exponential, q_factorial, shifted_pow, ratio_series_enclosure, shifted_pow_infinite, Interval,
    QBase, Rational, Regime,
};

pub(crate) fn check_poisson(lambda: &Rational, q: &QBase) -> Result<()> {
    if lambda.is_negative() {
        return Err(QError::Domain(format!("lambda must be nonnegative, got {lambda}")));
    }
    match q.regime() {
        Regime::SubUnit => {
            if lambda * (Rational::one() - q.value()) >= Rational::one() {
                return Err(QError::Domain(format!(
                    "the q-Poisson law at q = {q} needs lambda (1 - q) < 1, got lambda = {lambda}"
                )));
            }
        }
        Regime::Unit => {}
        Regime::SuperUnit => {
            // Every factor 1 - q^(-j) lambda, j >= 1, must be positive.
            if lambda >= q.value() {
                return Err(QError::Domain(format!(
                    "the q-Poisson law at q = {q} needs lambda < q so that no factor 1 - q^(-j) lambda vanishes \
                     or turns negative, got lambda = {lambda}"
                )));
            }
        }
    }
    Ok(())
}

/// Unnormalized weights `w_k` for `k = 0..=kappa_max`, so that
/// `Pr(k) = w_k * C` with `C` from [`poisson_constant`].
pub fn poisson_weights(lambda: &Rational, q: &QBase, kappa_max: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(kappa_max as usize + 1);
    let mut w = Rational::one();
    out.push(w.clone());
    for k in 1..=i64::from(kappa_max) {
        w *= weight_ratio(lambda, q, k - 1);
        out.push(w.clone());
    }
    out
}

/// `w_(k+1) / w_k`.
fn weight_ratio(lambda: &Rational, q: &QBase, k: i64) -> Rational {
    match q.regime() {
        Regime::SuperUnit => {
            q.pow(-k) * lambda / (bracket(k + 1, q) * (Rational::one() - q.pow(-(k + 1)) * lambda))
        }
        _ => lambda / bracket(k + 1, q),
    }
}

/// Enclosure of the normalizing constant `C`, of width at most `eps`.
pub fn poisson_constant(lambda: &Rational, q: &QBase, eps: &Rational) -> Result<Interval> {
    check_poisson(lambda, q)?;
    check_positive_eps(eps)?;
    match q.regime() {
        Regime::SubUnit => shifted_pow_infinite(&(lambda * (Rational::one() - q.value())), q, eps),
        Regime::Unit => reciprocal_enclosure(|e| q_exponential(0, lambda, q, e), eps),
        Regime::SuperUnit => reciprocal_enclosure(|e| super_unit_series(lambda, q, e), eps),
    }
}

/// `sum_k q^(-C(k,2)) lambda^k / ([k]! (1 ∸ lambda)^k)` for `q > 1`; its
/// reciprocal is `lim_n (1 ∸ lambda/[n])^n`.
///
/// The term ratio `q^(-k) lambda / ([k+1] (1 - q^(-k-1) lambda))` is
/// nonincreasing in `k` for `0 <= lambda < q`.
pub fn super_unit_series(lambda: &Rational, q: &QBase, eps: &Rational) -> Result<Interval> {
    q.require(Regime::SuperUnit, "the q > 1 Poisson series")?;
    check_poisson(lambda, q)?;
    ratio_series_enclosure(
        &Rational::one(),
        |k| weight_ratio(lambda, q, k as i64),
        |k| Some(weight_ratio(lambda, q, k as i64)),
        eps,
    )
}

/// The direct term `q^(-C(k,2)) lambda^k / ([k]! (1 ∸ lambda)^k)` of the `q > 1` series.
pub fn super_unit_term(lambda: &Rational, q: &QBase, k: u32) -> Result<Rational> {
    let k_i = i64::from(k);
    let inverse_shifted = shifted_pow(&Rational::one(), &-lambda, -k_i, q)?;
    Ok(q.pow(-choose2(k_i)) * powi(lambda, k_i) / q_factorial(k, q) * inverse_shifted)
}

/// Encloses `1/S` given a routine enclosing `S >= 1` to any width.
fn reciprocal_enclosure(series: impl Fn(&Rational) -> Result<Interval>, eps: &Rational) -> Result<Interval> {
    // S >= 1, so the width of 1/S is at most the width of S.
    series(eps)?.recip()
}

/// Certified q-Poisson pmf listed for `k = 0..=kappa_max`; the defect
/// encloses the mass beyond `kappa_max`. Widths are at most `eps`.
pub fn poisson_pmf(lambda: &Rational, q: &QBase, kappa_max: u32, eps: &Rational) -> Result<EnclosedPmf> {
    check_poisson(lambda, q)?;
    check_positive_eps(eps)?;
    let weights = poisson_weights(lambda, q, kappa_max);
    let tail = weight_tail(lambda, q, kappa_max, &(eps / int(4)))?;
    let bound = weights.iter().fold(tail.hi().clone(), |a, w| a.max(w.clone())).max(Rational::one());
    let constant_eps = eps / (int(2) * bound);
    let constant = poisson_constant(lambda, q, &constant_eps)?.tidy(&constant_eps);
    let mut pmf = Pmf { entries: Default::default(), values: Default::default(), defect: (&tail * &constant).tidy(eps) };
    for (k, w) in weights.iter().enumerate() {
        let k = k as u32;
        pmf.entries.insert(k, constant.scale(w));
        pmf.values.insert(k, bracket(k.into(), q));
    }
    Ok(pmf)
}

/// Enclosure of `sum_{k > kappa_max} w_k`.
fn weight_tail(lambda: &Rational, q: &QBase, kappa_max: u32, eps: &Rational) -> Result<Interval> {
    if lambda.is_zero() {
        return Ok(Interval::point(Rational::zero()));
    }
    let first = i64::from(kappa_max) + 1;
    let t = poisson_weights(lambda, q, kappa_max + 1).pop().expect("nonempty");
    ratio_series_enclosure(
        &t,
        |k| weight_ratio(lambda, q, first + k as i64),
        |k| Some(weight_ratio(lambda, q, first + k as i64)),
        eps,
    )
}

/// Mean `lambda`, variance `lambda (1 - (1-q) lambda)`.
///
/// Defined for `q <= 1` and `0 <= lambda (1-q) <= 1`; the boundary gives a
/// degenerate law with zero variance.
pub fn poisson_moments(lambda: &Rational, q: &QBase) -> Result<MomentReport> {
    q.require_not(Regime::SuperUnit, "closed-form q-Poisson moments")?;
    if lambda.is_negative() || lambda * (Rational::one() - q.value()) > Rational::one() {
        return Err(QError::Domain(format!("moments need 0 <= lambda (1 - q) <= 1, got lambda = {lambda}")));
    }
    let mean = lambda.clone();
    let variance = lambda * (Rational::one() - (Rational::one() - q.value()) * lambda);
    let second = &variance + &mean * &mean;
    Ok(MomentReport { mean, second_moment: second, variance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{approx, ratio};

    #[test]
    fn sub_unit_example() {
        let q = QBase::from_ratio(1, 2);
        let eps = ratio(1, 1_000_000_000);
        let pmf = poisson_pmf(&int(1), &q, 6, &eps).unwrap();
        let first = pmf.probability(0);
        assert!((approx(first.lo()) - 0.288_788_095_1).abs() < 1e-8);
        assert_eq!(pmf.probability(2), first.scale(&ratio(2, 3)));
        assert!(pmf.total().contains(&int(1)));
        assert!(pmf.max_width() <= eps);
        let zero = poisson_pmf(&int(0), &q, 3, &eps).unwrap();
        assert_eq!(zero.probability(0), Interval::point(int(1)));
    }

    #[test]
    fn super_unit_normalizes() {
        let q = QBase::from_ratio(2, 1);
        let eps = ratio(1, 1_000_000_000_000);
        let pmf = poisson_pmf(&ratio(1, 3), &q, 10, &eps).unwrap();
        assert!(pmf.total().contains(&int(1)));
        let weights = poisson_weights(&ratio(1, 3), &q, 5);
        for (k, w) in weights.iter().enumerate() {
            assert_eq!(w, &super_unit_term(&ratio(1, 3), &q, k as u32).unwrap());
        }
        assert!(poisson_pmf(&int(2), &q, 3, &eps).is_err());
    }

    #[test]
    fn classical_limit() {
        let pmf = poisson_pmf(&int(1), &QBase::classical(), 3, &ratio(1, 1_000_000_000)).unwrap();
        assert!((approx(pmf.probability(0).lo()) - (-1f64).exp()).abs() < 1e-9);
        assert!(pmf.total().contains(&int(1)));
    }

    #[test]
    fn moments() {
        let q = QBase::from_ratio(1, 2);
        let m = poisson_moments(&int(1), &q).unwrap();
        assert_eq!((m.mean, m.variance), (int(1), ratio(1, 2)));
        assert_eq!(poisson_moments(&int(2), &q).unwrap().variance, int(0));
        assert_eq!(poisson_moments(&int(3), &QBase::classical()).unwrap().variance, int(3));
        assert!(poisson_moments(&int(1), &QBase::from_ratio(2, 1)).is_err());
    }
}
