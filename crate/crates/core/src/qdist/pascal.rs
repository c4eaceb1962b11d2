//! Waiting-time laws: the q-geometric and q-negative-binomial distributions
//! (both defective) and the division-of-stakes probabilities.

use num_traits::{One, Zero};

use super::bernoulli::scaled_exponential_terms;
use super::pmf::{EnclosedPmf, Pmf};
use super::spec::{check_open_unit, check_positive_eps};
use crate::error::{QError, Result};
use crate::qnum::{
    bracket, certified_sum, int, powi, q_binomial, q_pochhammer, shifted_pow_infinite, Interval, QBase, Rational,
    Regime, TermSign,
};

/// `Pr(W = [j]) = (1 ∸ p)^(j-1) q^(j-1) p`.
pub fn geometric_entry(j: u32, p: &Rational, q: &QBase) -> Rational {
    negbinomial_entry(1, j, p, q)
}

/// `Pr(W_r = [j]) = (1 ∸ p)^(j-r) q^(j-r) p^r [j-1 choose r-1]`, zero for `j < r`.
pub fn negbinomial_entry(r: u32, j: u32, p: &Rational, q: &QBase) -> Rational {
    if j < r || r == 0 {
        return Rational::zero();
    }
    q_pochhammer(p, j - r, q)
        * q.pow(i64::from(j - r))
        * powi(p, r.into())
        * q_binomial(i64::from(j) - 1, i64::from(r) - 1, q)
}

/// Waiting time for the first nonzero, listed for `j = 1..=j_max`.
///
/// Without rescaling the defect is `(1 ∸ p)^∞` (no nonzero ever) plus the
/// certified mass beyond `j_max`. With rescaling every entry and the tail are
/// divided by `1 - (1 ∸ p)^∞`, so the defect is the tail alone.
pub fn geometric_pmf(p: &Rational, q: &QBase, j_max: u32, rescaled: bool, eps: &Rational) -> Result<EnclosedPmf> {
    let pmf = negbinomial_pmf(1, p, q, j_max, eps)?;
    if !rescaled {
        return Ok(pmf);
    }
    let never = shifted_pow_infinite(p, q, &(eps / int(8)))?;
    let norm_inv = (-&never).shift(&Rational::one()).recip()?;
    let tail = negbinomial_tail(1, p, q, j_max, &(eps / int(8)))?;
    Ok(Pmf {
        entries: pmf.entries.iter().map(|(j, e)| (*j, (e * &norm_inv).tidy(eps))).collect(),
        values: pmf.values,
        defect: (&tail * &norm_inv).tidy(eps),
    })
}

/// Waiting time for the `r`-th nonzero, listed for `j = r..=j_max`.
///
/// The defect encloses the mass of fewer than `r` nonzeros in infinitely many
/// trials, `(1 ∸ p)^∞ sum_{l<r} (p/(1-q))^l / [l]!`, plus the mass beyond
/// `j_max`. Entries are exact points; the defect has width at most `eps`.
pub fn negbinomial_pmf(r: u32, p: &Rational, q: &QBase, j_max: u32, eps: &Rational) -> Result<EnclosedPmf> {
    q.require(Regime::SubUnit, "the q-negative-binomial law")?;
    check_open_unit(p)?;
    check_positive_eps(eps)?;
    if r == 0 {
        return Err(QError::Domain("r must be at least 1".into()));
    }
    if j_max < r {
        return Err(QError::Domain(format!("j_max = {j_max} lists no entries for r = {r}")));
    }
    let mut pmf = Pmf { entries: Default::default(), values: Default::default(), defect: Interval::point(Rational::zero()) };
    for j in r..=j_max {
        pmf.entries.insert(j, Interval::point(negbinomial_entry(r, j, p, q)));
        pmf.values.insert(j, bracket(j.into(), q));
    }
    let short = fewer_than_r_mass(r, p, q, &(eps / int(2)))?;
    let tail = negbinomial_tail(r, p, q, j_max, &(eps / int(2)))?;
    pmf.defect = (&short + &tail).tidy(eps);
    Ok(pmf)
}

/// Enclosure of `sum_{j > j_max} Pr(W_r = [j])`.
///
/// The entry ratio `(1 - q^(j-r) p) q [j] / [j-r+1]` is at most
/// `q [j] / [j-r+1]`, which is nonincreasing in `j` for `q < 1` and tends to `q`.
pub fn negbinomial_tail(r: u32, p: &Rational, q: &QBase, j_max: u32, eps: &Rational) -> Result<Interval> {
    let first = i64::from(j_max) + 1;
    let r_i = i64::from(r);
    let mut t = Rational::zero();
    let sum = certified_sum(
        |k| {
            let j = first + k as i64;
            t = if k == 0 {
                negbinomial_entry(r, j as u32, p, q)
            } else {
                &t * (Rational::one() - q.pow(j - 1 - r_i) * p) * q.value() * bracket(j - 1, q) / bracket(j - r_i, q)
            };
            t.clone()
        },
        |k| {
            let j = first + k as i64;
            Some(q.value() * bracket(j, q) / bracket(j - r_i + 1, q))
        },
        eps,
        TermSign::NonNegative,
    )?;
    Ok(sum.enclosure())
}

/// Enclosure of `(1 ∸ p)^∞ sum_{l=0}^{r-1} (p/(1-q))^l / [l]!`.
pub fn fewer_than_r_mass(r: u32, p: &Rational, q: &QBase, eps: &Rational) -> Result<Interval> {
    let c = p / (Rational::one() - q.value());
    let coefficient = scaled_exponential_terms(&c, r - 1, q).into_iter().fold(Rational::zero(), |a, t| a + t);
    let product = shifted_pow_infinite(p, q, &(eps / coefficient.clone().max(Rational::one())))?;
    Ok(product.scale(&coefficient))
}

/// Probabilities that `a` nonzeros appear before `b` zeros (`p1`) and the
/// reverse (`p2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parties {
    pub p1: Rational,
    pub p2: Rational,
}

/// `p1 = p^a sum_{l<b} [a+l-1 choose a-1] (1 ∸ p)^l q^l` and
/// `p2 = (1 ∸ p)^b sum_{l<a} [b+l-1 choose b-1] p^l`.
pub fn parties_probabilities(a: u32, b: u32, p: &Rational, q: &QBase) -> Result<Parties> {
    if a == 0 || b == 0 {
        return Err(QError::Domain(format!("a and b must be at least 1, got a = {a}, b = {b}")));
    }
    let (a_i, b_i) = (i64::from(a), i64::from(b));
    let p1 = (0..b)
        .map(|l| {
            q_binomial(a_i + i64::from(l) - 1, a_i - 1, q) * q_pochhammer(p, l, q) * q.pow(l.into())
        })
        .fold(Rational::zero(), |s, t| s + t)
        * powi(p, a_i);
    let p2 = (0..a)
        .map(|l| q_binomial(b_i + i64::from(l) - 1, b_i - 1, q) * powi(p, l.into()))
        .fold(Rational::zero(), |s, t| s + t)
        * q_pochhammer(p, b, q);
    Ok(Parties { p1, p2 })
}

/// `p1` counted as at least `a` nonzeros among `a + b - 1` trials:
/// `sum_{s<b} [a+b-1 choose a+s] p^(a+s) (1 ∸ p)^(b-1-s)`.
pub fn parties_p1_by_count(a: u32, b: u32, p: &Rational, q: &QBase) -> Result<Rational> {
    if a == 0 || b == 0 {
        return Err(QError::Domain(format!("a and b must be at least 1, got a = {a}, b = {b}")));
    }
    let total = i64::from(a + b - 1);
    Ok((0..b)
        .map(|s| {
            q_binomial(total, i64::from(a + s), q) * powi(p, i64::from(a + s)) * q_pochhammer(p, b - 1 - s, q)
        })
        .fold(Rational::zero(), |acc, t| acc + t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::ratio;

    #[test]
    fn geometric_entries() {
        let q = QBase::from_ratio(1, 2);
        let p = ratio(1, 2);
        assert_eq!(geometric_entry(1, &p, &q), p);
        assert_eq!(geometric_entry(2, &p, &q), ratio(1, 8));
        assert_eq!(negbinomial_entry(2, 2, &p, &q), ratio(1, 4));
        assert_eq!(negbinomial_entry(2, 3, &p, &q), ratio(3, 32));
        assert_eq!(negbinomial_entry(1, 5, &p, &q), geometric_entry(5, &p, &q));
    }

    #[test]
    fn defects_contain_missing_mass() {
        let q = QBase::from_ratio(1, 2);
        let p = ratio(1, 2);
        let eps = ratio(1, 1_000_000_000_000);
        let geo = geometric_pmf(&p, &q, 10, false, &eps).unwrap();
        assert!(geo.total().contains(&int(1)));
        assert!(geo.defect.width() <= eps);
        let never = shifted_pow_infinite(&p, &q, &eps).unwrap();
        assert!((-&never).shift(&int(1)).intersects(&(&geo.listed_mass() + &(&geo.defect - &never))));
        let scaled = geometric_pmf(&p, &q, 10, true, &eps).unwrap();
        assert!(scaled.total().contains(&int(1)));
        for r in 1..4 {
            let nb = negbinomial_pmf(r, &ratio(1, 5), &QBase::from_ratio(3, 4), 12, &eps).unwrap();
            assert!(nb.total().contains(&int(1)), "r = {r}");
        }
        assert!(negbinomial_pmf(3, &p, &q, 2, &eps).is_err());
    }

    #[test]
    fn parties_examples() {
        let q = QBase::from_ratio(1, 2);
        let p = ratio(1, 2);
        let one = parties_probabilities(1, 1, &p, &q).unwrap();
        assert_eq!((one.p1, one.p2), (p.clone(), p.clone()));
        let got = parties_probabilities(1, 2, &p, &q).unwrap();
        assert_eq!((got.p1.clone(), got.p2), (ratio(5, 8), ratio(3, 8)));
        assert_eq!(parties_p1_by_count(1, 2, &p, &q).unwrap(), got.p1);
    }
}
