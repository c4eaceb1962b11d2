//! Certified summation of convergent series with a ratio-test tail bound,
//! and the q-exponential family built on it.

use num_traits::{One, Signed, Zero};

use super::base::{QBase, Regime};
use super::brackets::bracket;
use super::interval::Interval;
use super::scalar::{ceil_dyadic, dyadic_bits, floor_dyadic, Rational};
use crate::error::{QError, Result};

/// Hard cap on the number of terms any certified sum may take.
pub const MAX_SERIES_TERMS: usize = 20_000;

/// Sign information that tightens the enclosure of the tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermSign {
    NonNegative,
    Any,
}

/// A partial sum together with a bound on the absolute value of the omitted tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedSum {
    pub partial: Rational,
    pub tail_bound: Rational,
    /// Number of terms included in `partial`.
    pub terms: usize,
    pub sign: TermSign,
}

impl CertifiedSum {
    pub fn enclosure(&self) -> Interval {
        match self.sign {
            TermSign::NonNegative => Interval::new(self.partial.clone(), &self.partial + &self.tail_bound)
                .expect("tail bound is nonnegative"),
            TermSign::Any => Interval::around(&self.partial, &self.tail_bound),
        }
    }
}

/// Sum `t_0 + t_1 + ...` until the certified tail is at most `eps / 2`.
///
/// `term(k)` is called for `k = 0, 1, 2, ...` in order. `ratio_bound(k)` must
/// return some `rho` with `|t_{j+1}| <= rho |t_j|` for every `j >= k`, or
/// `None` when no such bound is available yet. Once `rho < 1` the tail after
/// `t_k` is at most `|t_k| rho / (1 - rho)`.
pub fn certified_sum<T, R>(mut term: T, ratio_bound: R, eps: &Rational, sign: TermSign) -> Result<CertifiedSum>
where
    T: FnMut(usize) -> Rational,
    R: Fn(usize) -> Option<Rational>,
{
    if !eps.is_positive() {
        return Err(QError::Domain(format!("tolerance must be positive, got {eps}")));
    }
    let half_eps = eps / Rational::from_integer(2.into());
    let mut partial = Rational::zero();
    for k in 0..MAX_SERIES_TERMS {
        let t = term(k);
        partial += &t;
        if let Some(rho) = ratio_bound(k) {
            if rho < Rational::one() {
                let tail_bound = if t.is_zero() { Rational::zero() } else { t.abs() * &rho / (Rational::one() - &rho) };
                if tail_bound <= half_eps {
                    return Ok(CertifiedSum { partial, tail_bound, terms: k + 1, sign });
                }
            }
        }
    }
    Err(QError::Resource(format!("series did not reach tolerance {eps} within {MAX_SERIES_TERMS} terms")))
}

/// Enclosure of `t_0 + t_1 + ...` for nonnegative terms given by
/// `t_(k+1) = t_k * ratio(k)`, of width at most `eps`.
///
/// Terms are carried as dyadic lower and upper bounds, so denominators stay
/// bounded however long the series runs. `ratio_bound(k)` has the same
/// meaning as in [`certified_sum`]. The precision doubles until the width fits.
pub fn ratio_series_enclosure<F, R>(first: &Rational, ratio: F, ratio_bound: R, eps: &Rational) -> Result<Interval>
where
    F: Fn(usize) -> Rational,
    R: Fn(usize) -> Option<Rational>,
{
    if !eps.is_positive() {
        return Err(QError::Domain(format!("tolerance must be positive, got {eps}")));
    }
    if first.is_negative() {
        return Err(QError::Domain(format!("first term must be nonnegative, got {first}")));
    }
    let quarter = eps / Rational::from_integer(4.into());
    let mut bits = dyadic_bits(eps) + 16;
    for _ in 0..8 {
        let (mut lo, mut hi) = (floor_dyadic(first, bits), ceil_dyadic(first, bits));
        let (mut sum_lo, mut sum_hi) = (Rational::zero(), Rational::zero());
        let mut done = None;
        for k in 0..MAX_SERIES_TERMS {
            sum_lo += &lo;
            sum_hi += &hi;
            if let Some(rho) = ratio_bound(k) {
                if rho < Rational::one() {
                    let tail = &hi * &rho / (Rational::one() - &rho);
                    if tail <= quarter {
                        done = Some(Interval::new(sum_lo.clone(), &sum_hi + tail).expect("ordered"));
                        break;
                    }
                }
            }
            let r = ratio(k);
            if r.is_negative() {
                return Err(QError::Domain(format!("term ratio must be nonnegative, got {r}")));
            }
            lo = floor_dyadic(&(&lo * &r), bits);
            hi = ceil_dyadic(&(&hi * &r), bits);
        }
        match done {
            Some(sum) if sum.width() <= *eps => return Ok(sum),
            Some(_) => bits *= 2,
            None => {
                return Err(QError::Resource(format!(
                    "series did not reach tolerance {eps} within {MAX_SERIES_TERMS} terms"
                )))
            }
        }
    }
    Err(QError::Resource(format!("rounding could not reach tolerance {eps}")))
}

/// Enclosure of `E_mu(lambda) = sum_k lambda^k q^(mu C(k,2)) / [k]!` of width at most `eps`.
///
/// The term ratio is `lambda q^(mu k) / [k+1]`. It is nonincreasing in `k`
/// (in absolute value) when `q <= 1, mu >= 0` or `q >= 1, mu <= 0`; for
/// `q > 1, mu = 1` it is bounded by `|lambda| (q-1)/q`. Other combinations
/// diverge or have no usable bound and are rejected.
pub fn q_exponential(mu: i64, lambda: &Rational, q: &QBase, eps: &Rational) -> Result<Interval> {
    let abs_lambda = lambda.abs();
    let one = Rational::one();
    let constant_bound: Option<Rational> = match q.regime() {
        Regime::SubUnit if mu == 0 => {
            if &abs_lambda * (&one - q.value()) >= one {
                return Err(QError::Domain(format!(
                    "E_0({lambda}) diverges at q = {q}: needs |lambda|(1 - q) < 1"
                )));
            }
            None
        }
        Regime::SubUnit if mu > 0 => None,
        Regime::Unit => None,
        Regime::SuperUnit if mu <= 0 => None,
        Regime::SuperUnit if mu == 1 => {
            let rho = &abs_lambda * (q.value() - &one) / q.value();
            if rho >= one {
                return Err(QError::Domain(format!(
                    "E_1({lambda}) diverges at q = {q}: needs |lambda|(q - 1) < q"
                )));
            }
            Some(rho)
        }
        _ => {
            return Err(QError::Domain(format!("E_{mu} has no convergent series at q = {q}")));
        }
    };
    let mut current = Rational::one();
    let term = |k: usize| {
        if k > 0 {
            let k = k as i64;
            current = &current * lambda * q.pow(mu * (k - 1)) / bracket(k, q);
        }
        current.clone()
    };
    let ratio = |k: usize| {
        constant_bound.clone().or_else(|| {
            let k = k as i64;
            Some(&abs_lambda * q.pow(mu * k) / bracket(k + 1, q))
        })
    };
    Ok(certified_sum(term, ratio, eps, TermSign::Any)?.enclosure().tidy(eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::scalar::{approx, int, ratio};

    #[test]
    fn geometric_series_enclosure() {
        // sum 2^-k = 2
        let half = ratio(1, 2);
        let mut t = int(2);
        let s = certified_sum(
            |_| {
                t = &t * &half;
                t.clone()
            },
            |_| Some(half.clone()),
            &ratio(1, 1_000_000),
            TermSign::NonNegative,
        )
        .unwrap();
        let e = s.enclosure();
        assert!(e.contains(&int(2)));
        assert!(e.width() <= ratio(1, 2_000_000));
    }

    #[test]
    fn rounded_series_matches_exact_sum() {
        // sum 3^-k / k! = e^(1/3) encloses the exact partial sums
        let third = ratio(1, 3);
        let eps = ratio(1, 1_000_000_000_000_000);
        let s = ratio_series_enclosure(&int(1), |k| &third / int(k as i64 + 1), |k| Some(&third / int(k as i64 + 1)), &eps)
            .unwrap();
        assert!(s.width() <= eps);
        assert!((approx(s.lo()) - (1f64 / 3.0).exp()).abs() < 1e-15);
        let exact = certified_sum(
            {
                let mut t = int(1);
                let third = third.clone();
                move |k| {
                    if k > 0 {
                        t = &t * &third / int(k as i64);
                    }
                    t.clone()
                }
            },
            |k| Some(&third / int(k as i64 + 1)),
            &eps,
            TermSign::NonNegative,
        )
        .unwrap();
        assert!(s.intersects(&exact.enclosure()));
        assert!(ratio_series_enclosure(&int(-1), |_| int(0), |_| Some(int(0)), &eps).is_err());
    }

    #[test]
    fn exponential_at_zero_is_one() {
        let q = QBase::from_ratio(1, 2);
        for mu in [0, 1, 2] {
            let e = q_exponential(mu, &int(0), &q, &ratio(1, 1000)).unwrap();
            assert_eq!(e, Interval::point(int(1)));
        }
    }

    #[test]
    fn classical_exponential() {
        let e = q_exponential(0, &int(1), &QBase::classical(), &ratio(1, 1_000_000_000_000)).unwrap();
        assert!((approx(&e.midpoint()) - std::f64::consts::E).abs() < 1e-11);
    }

    #[test]
    fn divergent_parameters_rejected() {
        let q = QBase::from_ratio(1, 2);
        assert!(q_exponential(0, &int(2), &q, &ratio(1, 100)).is_err());
        assert!(q_exponential(-1, &int(1), &q, &ratio(1, 100)).is_err());
        assert!(q_exponential(2, &int(1), &QBase::from_ratio(2, 1), &ratio(1, 100)).is_err());
    }
}
