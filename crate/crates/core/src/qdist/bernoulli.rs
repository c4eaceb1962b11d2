//! The q-Bernoulli law over `n` trials and its `n -> infinity` limit.

use num_traits::{One, Zero};

use super::pmf::{EnclosedPmf, ExactPmf, MomentReport, Pmf};
use super::spec::{check_below_one, check_not_super_unit, check_positive_eps, check_probability};
use crate::error::{QError, Result};
use crate::qnum::scalar::dyadic_bits;
use crate::qnum::{
    bracket, certified_sum, int, jackson_integral, powi, q_binomial, q_factorial, q_pochhammer, shifted_pow,
    ratio_series_enclosure, shifted_pow_infinite, symmetric_pow, Interval, PPoly, QBase, Rational, Regime, TermSign,
};

/// `Pr(xi_n = [k]) = [n choose k] p^k (1 ∸ p)^(n-k)` for `k = 0..n`.
///
/// Requires `0 <= p <= 1` and `0 < q <= 1`.
pub fn bernoulli_pmf(n: u32, p: &Rational, q: &QBase) -> Result<ExactPmf> {
    check_probability(p)?;
    check_not_super_unit(q, "the q-Bernoulli law")?;
    Ok(bernoulli_pmf_formal(n, p, q))
}

/// The same formula without any parameter checks, for identity evaluation
/// (for instance at `q > 1` or at `p` outside `[0, 1]`).
pub fn bernoulli_pmf_formal(n: u32, p: &Rational, q: &QBase) -> ExactPmf {
    Pmf::exact((0..=n).map(|k| {
        let mass = q_binomial(n.into(), k.into(), q) * powi(p, k.into()) * q_pochhammer(p, n - k, q);
        (k, mass, bracket(k.into(), q))
    }))
}

/// The pmf entries as polynomials in `p`.
pub fn bernoulli_pmf_poly(n: u32, q: &QBase) -> Vec<PPoly> {
    (0..=n)
        .map(|k| {
            PPoly::monomial(q_binomial(n.into(), k.into(), q), k as usize)
                * PPoly::q_pochhammer(&Rational::one(), n - k, q)
        })
        .collect()
}

/// Closed-form moments: mean `[n]p`, second moment `[n]p + q p^2 [n][n-1]`,
/// variance `[n]p(1-p)`.
pub fn bernoulli_moments(n: u32, p: &Rational, q: &QBase) -> Result<MomentReport> {
    check_probability(p)?;
    check_not_super_unit(q, "the q-Bernoulli law")?;
    let n = i64::from(n);
    let mean = bracket(n, q) * p;
    let second = &mean + q.value() * p * p * bracket(n, q) * bracket(n - 1, q);
    let report = MomentReport::from_raw(mean, second);
    debug_assert_eq!(report.variance, bracket(n, q) * p * (Rational::one() - p));
    Ok(report)
}

/// Limit moments as `n -> infinity`: mean `p/(1-q)`, variance `p(1-p)/(1-q)`.
pub fn bernoulli_inf_moments(p: &Rational, q: &QBase) -> Result<MomentReport> {
    q.require(Regime::SubUnit, "the infinite-trial q-Bernoulli law")?;
    check_probability(p)?;
    let one_minus_q = Rational::one() - q.value();
    let mean = p / &one_minus_q;
    let variance = p * (Rational::one() - p) / &one_minus_q;
    let second = &variance + &mean * &mean;
    Ok(MomentReport { mean, second_moment: second, variance })
}

/// Certified law of the number of nonzeros in infinitely many trials:
/// `Pr(k) = (p/(1-q))^k / [k]! * (1 ∸ p)^∞` for `k <= kappa_max`.
///
/// The defect is the enclosure of the mass beyond `kappa_max`, computed from
/// the series tail rather than by subtraction. Every interval has width at
/// most `eps`.
pub fn bernoulli_inf_pmf(p: &Rational, q: &QBase, kappa_max: u32, eps: &Rational) -> Result<EnclosedPmf> {
    q.require(Regime::SubUnit, "the infinite-trial q-Bernoulli law")?;
    check_probability(p)?;
    check_below_one(p)?;
    check_positive_eps(eps)?;
    let c = p / (Rational::one() - q.value());
    let coefficients = scaled_exponential_terms(&c, kappa_max, q);
    let tail = exponential_tail(&c, kappa_max, q, &(eps / int(4)))?;
    // Every entry and the defect scale the product by at most `bound`.
    let bound = coefficients.iter().fold(tail.hi().clone(), |acc, a| acc.max(a.clone())).max(Rational::one());
    let product = shifted_pow_infinite(p, q, &(eps / (int(2) * &bound)))?;
    // Outward rounding keeps denominators small and adds at most eps/8.
    let bits = dyadic_bits(&(eps / int(16)));
    let mut pmf = Pmf {
        entries: Default::default(),
        values: Default::default(),
        defect: (&tail * &product).round_outward(bits),
    };
    for (k, a) in coefficients.iter().enumerate() {
        let k = k as u32;
        pmf.entries.insert(k, product.scale(a).round_outward(bits));
        pmf.values.insert(k, bracket(k.into(), q));
    }
    Ok(pmf)
}

/// `c^k / [k]!` for `k = 0..=kappa_max`.
pub(crate) fn scaled_exponential_terms(c: &Rational, kappa_max: u32, q: &QBase) -> Vec<Rational> {
    let mut out = Vec::with_capacity(kappa_max as usize + 1);
    let mut t = Rational::one();
    out.push(t.clone());
    for k in 1..=i64::from(kappa_max) {
        t = t * c / bracket(k, q);
        out.push(t.clone());
    }
    out
}

/// Enclosure of `sum_{k > kappa_max} c^k / [k]!` for `c >= 0`, `q < 1`.
///
/// The ratio `c/[k+1]` of consecutive terms is nonincreasing, so the ratio at
/// the current index bounds all later ones.
pub(crate) fn exponential_tail(c: &Rational, kappa_max: u32, q: &QBase, eps: &Rational) -> Result<Interval> {
    let first = i64::from(kappa_max) + 1;
    let t = powi(c, first) / q_factorial(first as u32, q);
    let ratio = |k: usize| c / bracket(first + k as i64 + 1, q);
    ratio_series_enclosure(&t, ratio, |k| Some(ratio(k)), eps)
}

fn check_tail_index(n: u32, index: u32, what: &str) -> Result<()> {
    if index >= n {
        return Err(QError::Domain(format!("{what} must be below n = {n}, got {index}")));
    }
    Ok(())
}

/// `Pr(at most kappa zeros in n trials) = sum_{i<=kappa} [n choose i] p^(n-i) (1 ∸ p)^i`.
pub fn bernoulli_zero_tail(n: u32, p: &Rational, q: &QBase, kappa: u32) -> Result<Rational> {
    check_tail_index(n, kappa, "kappa")?;
    Ok((0..=kappa)
        .map(|i| q_binomial(n.into(), i.into(), q) * powi(p, (n - i).into()) * q_pochhammer(p, i, q))
        .fold(Rational::zero(), |acc, t| acc + t))
}

/// Integral form of [`bernoulli_zero_tail`]:
/// `[n] [n-1 choose kappa] ∫_0^p x^(n-1-kappa) (1 ∸ qx)^kappa d_qx`.
pub fn bernoulli_zero_tail_integral(n: u32, p: &Rational, q: &QBase, kappa: u32) -> Result<Rational> {
    check_tail_index(n, kappa, "kappa")?;
    let integrand = PPoly::monomial(Rational::one(), (n - 1 - kappa) as usize) * PPoly::q_pochhammer(q.value(), kappa, q);
    Ok(bracket(n.into(), q) * q_binomial(i64::from(n) - 1, kappa.into(), q) * jackson_integral(&integrand, p, q))
}

/// `Pr(at most ell nonzeros in n trials) = sum_{i<=ell} [n choose i] p^i (1 ∸ p)^(n-i)`.
pub fn bernoulli_nonzero_tail(n: u32, p: &Rational, q: &QBase, ell: u32) -> Result<Rational> {
    check_tail_index(n, ell, "ell")?;
    Ok((0..=ell)
        .map(|i| q_binomial(n.into(), i.into(), q) * powi(p, i.into()) * q_pochhammer(p, n - i, q))
        .fold(Rational::zero(), |acc, t| acc + t))
}

/// Integral form of [`bernoulli_nonzero_tail`]:
/// `1 - [n] [n-1 choose ell] ∫_0^p x^ell (1 ∸ qx)^(n-1-ell) d_qx`.
pub fn bernoulli_nonzero_tail_integral(n: u32, p: &Rational, q: &QBase, ell: u32) -> Result<Rational> {
    check_tail_index(n, ell, "ell")?;
    let integrand = PPoly::monomial(Rational::one(), ell as usize) * PPoly::q_pochhammer(q.value(), n - 1 - ell, q);
    Ok(Rational::one()
        - bracket(n.into(), q) * q_binomial(i64::from(n) - 1, ell.into(), q) * jackson_integral(&integrand, p, q))
}

/// Both sides of the infinite-trial nonzero tail: the direct sum of limit
/// pmf entries and the integral form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteTail {
    pub direct: Interval,
    pub integral: Interval,
}

/// `Pr(at most ell nonzeros in infinitely many trials)`, evaluated two ways:
///
/// - `direct = sum_{i<=ell} (p/(1-q))^i / [i]! (1 ∸ p)^∞`
/// - `integral = 1 - 1/(1-q) ∫_0^p (x/(1-q))^ell / [ell]! (1 ∸ qx)^∞ d_qx`
///
/// The Jackson integral of the non-polynomial integrand is the sum
/// `(1-q) p sum_k q^k f(p q^k)`. Using
/// `(1 ∸ q^(k+1) p)^∞ = (1 ∸ p)^∞ / (1 ∸ p)^(k+1)` it becomes
/// `(1 ∸ p)^∞ (1-q) p^(ell+1) sum_k q^(k(ell+1)) / (1 ∸ p)^(k+1)`.
pub fn bernoulli_nonzero_tail_infinite(p: &Rational, q: &QBase, ell: u32, eps: &Rational) -> Result<InfiniteTail> {
    q.require(Regime::SubUnit, "the infinite-trial q-Bernoulli law")?;
    check_probability(p)?;
    check_below_one(p)?;
    check_positive_eps(eps)?;
    let one = Rational::one();
    let one_minus_q = &one - q.value();
    let c = p / &one_minus_q;
    let direct_coefficient =
        scaled_exponential_terms(&c, ell, q).into_iter().fold(Rational::zero(), |acc, t| acc + t);

    // sum_k q^(k(ell+1)) / (1 ∸ p)^(k+1); consecutive ratio q^(ell+1) / (1 - q^(k+1) p)
    // decreases in k.
    let q_step = q.pow(i64::from(ell) + 1);
    let integral_scale = powi(&c, ell.into()) / q_factorial(ell, q) * p;
    let series_eps = eps / (int(4) * integral_scale.clone().max(one.clone()));
    let mut term = Rational::zero();
    let mut q_k = one.clone();
    let sum = certified_sum(
        |k| {
            if k == 0 {
                term = &one / (&one - p);
            } else {
                q_k = &q_k * q.value();
                term = &term * &q_step / (&one - &q_k * p);
            }
            term.clone()
        },
        |k| Some(&q_step / (&one - q.pow(k as i64 + 1) * p)),
        &series_eps,
        TermSign::NonNegative,
    )?
    .enclosure();
    let bound = direct_coefficient.clone().max(&integral_scale * sum.hi()).max(one.clone());
    let product = shifted_pow_infinite(p, q, &(eps / (int(4) * bound)))?;

    let direct = product.scale(&direct_coefficient);
    // 1/(1-q) * c^ell/[ell]! * (1-q) p * product * sum
    let integral = (-(&product * &sum).scale(&integral_scale)).shift(&one);
    Ok(InfiniteTail { direct, integral })
}

/// `E prod_{i<r} q^(-i) (xi_n - [i])` computed from the pmf.
pub fn factorial_moment(n: u32, p: &Rational, q: &QBase, r: u32) -> Result<Rational> {
    let pmf = bernoulli_pmf(n, p, q)?;
    Ok(pmf.expectation(|_, v| {
        (0..i64::from(r)).fold(Rational::one(), |acc, i| acc * q.pow(-i) * (v - bracket(i, q)))
    }))
}

/// Closed form `p^r prod_{i<r} [n-i]` of [`factorial_moment`].
pub fn factorial_moment_closed(n: u32, p: &Rational, q: &QBase, r: u32) -> Rational {
    (0..i64::from(r)).fold(powi(p, r.into()), |acc, i| acc * bracket(i64::from(n) - i, q))
}

/// Raw moment `E xi_n^r` as a polynomial in `p`, by the recursion
/// `mu'_(r+1) = ([n] p + p (1-p) d/d_qp) mu'_r` from `mu'_0 = 1`.
pub fn raw_moment(n: u32, q: &QBase, r: u32) -> PPoly {
    let n_p = PPoly::monomial(bracket(n.into(), q), 1);
    let p_one_minus_p = PPoly::new(vec![Rational::zero(), Rational::one(), -Rational::one()]);
    (0..r).fold(PPoly::one(), |mu, _| &n_p * &mu + &p_one_minus_p * &mu.q_derivative(q))
}

/// Raw moment `sum_k [k]^r pmf_k(p)` as a polynomial in `p`, summed directly.
pub fn raw_moment_direct(n: u32, q: &QBase, r: u32) -> PPoly {
    bernoulli_pmf_poly(n, q)
        .into_iter()
        .enumerate()
        .fold(PPoly::zero(), |acc, (k, entry)| acc + entry.scale(&powi(&bracket(k as i64, q), r.into())))
}

/// Which q-deformed central moment to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralKind {
    /// `E prod_{i<r} (xi - q^(s+i) <xi>)`
    Shifted(i64),
    /// `E sum_k [r choose k] xi^k (-<xi>)^(r-k)`
    Symmetric,
}

/// Central moment of the q-Bernoulli law, computed from the pmf.
pub fn central_moment(n: u32, p: &Rational, q: &QBase, r: u32, kind: CentralKind) -> Result<Rational> {
    let pmf = bernoulli_pmf(n, p, q)?;
    let mean = bracket(n.into(), q) * p;
    Ok(match kind {
        CentralKind::Shifted(s) => {
            pmf.expectation(|_, v| shifted_pow(v, &(-&mean * q.pow(s)), r.into(), q).expect("nonnegative exponent"))
        }
        CentralKind::Symmetric => pmf.expectation(|_, v| symmetric_pow(v, &-&mean, r, q)),
    })
}

/// `mu_r(s; p) = E prod_{i<r} (xi - q^(s+i) [n] p)` as a polynomial in `p`.
pub fn central_moment_poly(n: u32, q: &QBase, r: u32, s: i64) -> PPoly {
    let mean = PPoly::monomial(bracket(n.into(), q), 1);
    bernoulli_pmf_poly(n, q).into_iter().enumerate().fold(PPoly::zero(), |acc, (k, entry)| {
        let value = PPoly::constant(bracket(k as i64, q));
        let product = (0..i64::from(r))
            .fold(PPoly::one(), |prod, i| prod * (&value - &mean.scale(&q.pow(s + i))));
        acc + entry * product
    })
}

/// Probability generating function `sum_k z^k Pr(xi_n = [k])`.
pub fn bernoulli_pgf(n: u32, p: &Rational, q: &QBase, z: &Rational) -> Result<Rational> {
    let pmf = bernoulli_pmf(n, p, q)?;
    Ok(pmf.entries.iter().map(|(k, m)| powi(z, (*k).into()) * m).fold(Rational::zero(), |a, t| a + t))
}

/// Closed form `sum_k [n choose k] p^k (z ∸ 1)^k` of the generating function.
pub fn bernoulli_pgf_closed(n: u32, p: &Rational, q: &QBase, z: &Rational) -> Rational {
    (0..=n)
        .map(|k| {
            let shifted = shifted_pow(z, &-Rational::one(), k.into(), q).expect("nonnegative exponent");
            q_binomial(n.into(), k.into(), q) * powi(p, k.into()) * shifted
        })
        .fold(Rational::zero(), |a, t| a + t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{approx, ratio};

    fn half() -> Rational {
        ratio(1, 2)
    }

    #[test]
    fn two_trial_example() {
        let q = QBase::from_ratio(1, 2);
        let pmf = bernoulli_pmf(2, &half(), &q).unwrap();
        assert_eq!(pmf.probability(0), ratio(3, 8));
        assert_eq!(pmf.probability(1), ratio(3, 8));
        assert_eq!(pmf.probability(2), ratio(1, 4));
        let m = bernoulli_moments(2, &half(), &q).unwrap();
        assert_eq!(m, pmf.moments());
        assert_eq!((m.mean, m.second_moment, m.variance), (ratio(3, 4), ratio(15, 16), ratio(3, 8)));
    }

    #[test]
    fn single_trial_and_classical() {
        let q = QBase::from_ratio(1, 3);
        let p = ratio(2, 7);
        let pmf = bernoulli_pmf(1, &p, &q).unwrap();
        assert_eq!(pmf.probability(0), ratio(5, 7));
        assert_eq!(pmf.probability(1), p);
        let classical = bernoulli_pmf(3, &p, &QBase::classical()).unwrap();
        assert_eq!(classical.probability(1), int(3) * &p * ratio(25, 49));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(bernoulli_pmf(2, &ratio(3, 2), &QBase::from_ratio(1, 2)).is_err());
        assert!(matches!(bernoulli_pmf(2, &half(), &QBase::from_ratio(2, 1)), Err(QError::Regime(_))));
        assert_eq!(bernoulli_pmf_formal(2, &half(), &QBase::from_ratio(2, 1)).total(), int(1));
    }

    #[test]
    fn infinite_law_encloses_product_and_normalizes() {
        let q = QBase::from_ratio(1, 2);
        let eps = ratio(1, 1_000_000_000_000);
        let pmf = bernoulli_inf_pmf(&half(), &q, 40, &eps).unwrap();
        let first = pmf.probability(0);
        assert!((approx(first.lo()) - 0.288_788_095_1).abs() < 1e-9);
        assert!(pmf.max_width() <= eps);
        assert!(pmf.total().contains(&int(1)));
        let zero = bernoulli_inf_pmf(&Rational::zero(), &q, 3, &eps).unwrap();
        assert_eq!(zero.probability(0), Interval::point(int(1)));
        assert!(zero.defect.contains(&Rational::zero()));
    }

    #[test]
    fn tails_match_integral_forms() {
        let q = QBase::from_ratio(1, 2);
        assert_eq!(bernoulli_zero_tail(2, &half(), &q, 1).unwrap(), ratio(5, 8));
        assert_eq!(bernoulli_zero_tail_integral(2, &half(), &q, 1).unwrap(), ratio(5, 8));
        assert_eq!(bernoulli_nonzero_tail(2, &half(), &q, 1).unwrap(), ratio(3, 4));
        assert_eq!(bernoulli_nonzero_tail_integral(2, &half(), &q, 1).unwrap(), ratio(3, 4));
        assert!(bernoulli_zero_tail(2, &half(), &q, 2).is_err());
        let p = ratio(1, 5);
        assert_eq!(bernoulli_zero_tail(2, &p, &q, 0).unwrap(), &p * &p);
        assert_eq!(bernoulli_nonzero_tail(3, &p, &q, 0).unwrap(), q_pochhammer(&p, 3, &q));
    }

    #[test]
    fn factorial_and_raw_moments() {
        let q = QBase::from_ratio(1, 2);
        assert_eq!(factorial_moment(2, &half(), &q, 2).unwrap(), ratio(3, 8));
        assert_eq!(factorial_moment_closed(2, &half(), &q, 2), ratio(3, 8));
        assert_eq!(factorial_moment(2, &half(), &q, 3).unwrap(), Rational::zero());
        assert_eq!(raw_moment(2, &q, 0), PPoly::one());
        assert_eq!(raw_moment(2, &q, 1), PPoly::monomial(ratio(3, 2), 1));
        assert_eq!(raw_moment(2, &q, 2).eval(&half()), ratio(15, 16));
        assert_eq!(raw_moment(4, &q, 3), raw_moment_direct(4, &q, 3));
    }

    #[test]
    fn central_moments() {
        let q = QBase::from_ratio(1, 2);
        assert_eq!(central_moment(2, &half(), &q, 0, CentralKind::Shifted(0)).unwrap(), int(1));
        assert_eq!(central_moment(2, &half(), &q, 1, CentralKind::Shifted(0)).unwrap(), int(0));
        assert_eq!(central_moment(2, &half(), &q, 2, CentralKind::Shifted(0)).unwrap(), ratio(3, 8));
        assert_eq!(central_moment_poly(2, &q, 2, 0).eval(&half()), ratio(3, 8));
        assert_eq!(central_moment(2, &half(), &q, 1, CentralKind::Symmetric).unwrap(), int(0));
    }

    #[test]
    fn generating_function() {
        let q = QBase::from_ratio(1, 2);
        assert_eq!(bernoulli_pgf(2, &half(), &q, &int(2)).unwrap(), ratio(17, 8));
        assert_eq!(bernoulli_pgf_closed(2, &half(), &q, &int(2)), ratio(17, 8));
        assert_eq!(bernoulli_pgf_closed(5, &ratio(1, 5), &q, &int(1)), int(1));
        assert_eq!(bernoulli_pgf_closed(3, &ratio(1, 5), &q, &int(0)), q_pochhammer(&ratio(1, 5), 3, &q));
    }

    #[test]
    fn infinite_tail_two_ways() {
        let q = QBase::from_ratio(1, 2);
        let eps = ratio(1, 1_000_000_000_000);
        for ell in 0..4 {
            let tail = bernoulli_nonzero_tail_infinite(&half(), &q, ell, &eps).unwrap();
            assert!(tail.direct.width() <= eps && tail.integral.width() <= eps);
            assert!(tail.direct.intersects(&tail.integral), "ell = {ell}");
        }
    }
}
