//! The q-uniform law on `{0, ..., M}` and the range of `n` independent draws.

use num_traits::{One, Zero};

use super::pmf::{ExactPmf, MomentReport, Pmf};
use crate::error::{QError, Result};
use crate::qnum::{bracket, int, powi, QBase, Rational};

/// `Pr(X = [i]) = q^i / [M+1]`, `i = 0..=M`.
pub fn uniform_pmf(max_index: u32, q: &QBase) -> ExactPmf {
    let norm = bracket(i64::from(max_index) + 1, q);
    Pmf::exact((0..=max_index).map(|i| (i, q.pow(i.into()) / &norm, bracket(i.into(), q))))
}

/// Closed-form moments of the q-uniform law over the values `[i]`.
///
/// Mean `q[M]/[2]`, second moment `q[M](q[2][M]+1)/([2][3])`, variance
/// `q[M](q^2[M]+[2])/([2]^2[3])`.
pub fn uniform_moments(max_index: u32, q: &QBase) -> MomentReport {
    let m = i64::from(max_index);
    let (b2, b3, bm) = (bracket(2, q), bracket(3, q), bracket(m, q));
    let qv = q.value();
    let mean = qv * &bm / &b2;
    let second = qv * &bm * (qv * &b2 * &bm + Rational::one()) / (&b2 * &b3);
    let report = MomentReport::from_raw(mean, second);
    debug_assert_eq!(report.variance, qv * &bm * (qv * qv * &bm + &b2) / (&b2 * &b2 * &b3));
    report
}

/// Law of the range `max - min` of `n` independent q-uniform draws on `{0..M}`.
///
/// `Pr(0) = [M+1]_(q^n) / [M+1]^n` and, for `1 <= l <= M`,
/// `Pr(l) = [M+1-l]_(q^n) ([l+1]^n - [2]_(q^n) [l]^n + q^n [l-1]^n) / [M+1]^n`.
/// Values are the integer range `l`.
pub fn range_pmf(max_index: u32, n: u32, q: &QBase) -> Result<ExactPmf> {
    if n == 0 {
        return Err(QError::Domain("the range needs at least one draw".into()));
    }
    let m = i64::from(max_index);
    let n_i = i64::from(n);
    let qn = q.power(n_i);
    let scale = powi(&bracket(m + 1, q), n_i);
    Ok(Pmf::exact((0..=max_index).map(|l| {
        let l_i = i64::from(l);
        let mass = if l == 0 {
            bracket(m + 1, &qn) / &scale
        } else {
            bracket(m + 1 - l_i, &qn) / &scale
                * (powi(&bracket(l_i + 1, q), n_i) - bracket(2, &qn) * powi(&bracket(l_i, q), n_i)
                    + qn.value() * powi(&bracket(l_i - 1, q), n_i))
        };
        (l, mass, int(l_i))
    })))
}

/// A second two-draw range law: `Pr(0) = 1/[M+1]` and
/// `Pr(l) = [2]/[M+1] (1 - [l]/[M+1]) q^(M+1-2l)` for `1 <= l <= M`.
pub fn range_pmf_alt_n2(max_index: u32, q: &QBase) -> ExactPmf {
    let m = i64::from(max_index);
    let norm = bracket(m + 1, q);
    Pmf::exact((0..=max_index).map(|l| {
        let l_i = i64::from(l);
        let mass = if l == 0 {
            Rational::one() / &norm
        } else {
            bracket(2, q) / &norm * (Rational::one() - bracket(l_i, q) / &norm) * q.pow(m + 1 - 2 * l_i)
        };
        (l, mass, int(l_i))
    }))
}

/// Range law by brute force over all `(M+1)^n` draw tuples, weighting each
/// tuple by `prod q^(x_i) / [M+1]^n`.
pub fn range_pmf_brute_force(max_index: u32, n: u32, q: &QBase) -> Result<ExactPmf> {
    let side = u64::from(max_index) + 1;
    let count = side.checked_pow(n).filter(|c| *c <= 1 << 20);
    let Some(count) = count else {
        return Err(QError::Resource(format!("{side}^{n} outcome tuples exceed the enumeration guard")));
    };
    let weights: Vec<Rational> = (0..=max_index).map(|i| q.pow(i.into())).collect();
    let scale = powi(&bracket(side as i64, q), n.into());
    let mut mass = vec![Rational::zero(); max_index as usize + 1];
    for mut code in 0..count {
        let (mut lo, mut hi, mut w) = (u64::MAX, 0, Rational::one());
        for _ in 0..n {
            let x = code % side;
            code /= side;
            lo = lo.min(x);
            hi = hi.max(x);
            w *= &weights[x as usize];
        }
        mass[(hi - lo) as usize] += w;
    }
    Ok(Pmf::exact(mass.into_iter().enumerate().map(|(l, w)| (l as u32, w / &scale, int(l as i64)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::ratio;

    #[test]
    fn uniform_examples() {
        let q = QBase::from_ratio(1, 2);
        let pmf = uniform_pmf(2, &q);
        assert_eq!(pmf.probability(0), ratio(4, 7));
        assert_eq!(pmf.probability(1), ratio(2, 7));
        assert_eq!(pmf.probability(2), ratio(1, 7));
        assert_eq!(uniform_moments(2, &q).mean, ratio(1, 2));
        assert_eq!(uniform_moments(2, &q), pmf.moments());
        assert_eq!(uniform_moments(0, &q), MomentReport::from_raw(int(0), int(0)));
        assert_eq!(uniform_moments(6, &QBase::classical()).mean, int(3));
    }

    #[test]
    fn range_examples() {
        let q = QBase::from_ratio(1, 2);
        let pmf = range_pmf(1, 2, &q).unwrap();
        assert_eq!(pmf.probability(0), ratio(5, 9));
        assert_eq!(pmf.probability(1), ratio(4, 9));
        assert_eq!(range_pmf(3, 1, &q).unwrap().probability(0), int(1));
        assert_eq!(range_pmf(3, 3, &q).unwrap(), range_pmf_brute_force(3, 3, &q).unwrap());
        let alt = range_pmf_alt_n2(1, &q);
        assert_eq!((alt.probability(0), alt.probability(1)), (ratio(2, 3), ratio(1, 3)));
        assert_eq!(range_pmf_alt_n2(0, &q).probability(0), int(1));
        assert_eq!(range_pmf_alt_n2(4, &QBase::classical()), range_pmf(4, 2, &QBase::classical()).unwrap());
    }
}
