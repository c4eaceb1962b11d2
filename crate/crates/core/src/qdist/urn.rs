//! Urn laws: the q-hypergeometric (draws without replacement) and the
//! q-contagious law (each drawn ball returned with `s` extra copies).

use num_traits::One;

use super::pmf::{ExactPmf, Pmf};
use crate::error::{QError, Result};
use crate::qnum::{bracket, q_binomial, QBase, Rational};

/// `[m choose k] [u choose n-k] q^((m-k)(n-k)) / [m+u choose n]` for `k` from
/// `max(0, n-u)` to `min(m, n)`.
///
/// Normalized for every `q > 0`, so no regime restriction is applied.
pub fn hypergeom_pmf(m: u32, u: u32, n: u32, q: &QBase) -> Result<ExactPmf> {
    if n > m + u {
        return Err(QError::Domain(format!("cannot draw n = {n} balls from an urn of {}", m + u)));
    }
    let low = n.saturating_sub(u);
    let high = m.min(n);
    Ok(Pmf::exact((low..=high).map(|k| (k, hypergeom_entry(m, u, n, k, q), bracket(k.into(), q)))))
}

pub(crate) fn hypergeom_entry(m: u32, u: u32, n: u32, k: u32, q: &QBase) -> Rational {
    let (m, u, n, k) = (i64::from(m), i64::from(u), i64::from(n), i64::from(k));
    q_binomial(m, k, q) * q_binomial(u, n - k, q) * q.pow((m - k) * (n - k)) / q_binomial(m + u, n, q)
}

/// The pmf at `kappa` in base `1/q`, checked against the base-`q` pmf of the
/// mirrored urn (`m` and `u` swapped) at `n - kappa`.
pub fn hypergeom_dual(m: u32, u: u32, n: u32, q: &QBase, kappa: u32) -> Result<Rational> {
    if n > m + u {
        return Err(QError::Domain(format!("cannot draw n = {n} balls from an urn of {}", m + u)));
    }
    if kappa > n {
        return Err(QError::Domain(format!("kappa = {kappa} exceeds n = {n}")));
    }
    let inverted = hypergeom_entry(m, u, n, kappa, &q.inverse());
    let mirrored = hypergeom_entry(u, m, n, n - kappa, q);
    if inverted != mirrored {
        return Err(QError::Inconsistent(format!(
            "base 1/q value {inverted} differs from mirrored base q value {mirrored}"
        )));
    }
    Ok(inverted)
}

/// Validates a contagious urn over `n` draws.
///
/// Every denominator `[m+u+gs]`, `g < n`, must be positive. When `s < 0` a
/// colour can run out: its count `m + a s` must reach exactly zero before it
/// could turn negative.
pub(crate) fn check_contagious(m: u32, u: u32, s: i64, n: u32) -> Result<()> {
    let total = i64::from(m) + i64::from(u);
    for g in 0..i64::from(n) {
        if total + g * s <= 0 {
            return Err(QError::Domain(format!(
                "contagious urn m = {m}, u = {u}, s = {s} is empty before draw {} of {n}",
                g + 1
            )));
        }
    }
    for (name, count) in [("marked", m), ("unmarked", u)] {
        for a in 0..i64::from(n) {
            let c = i64::from(count) + a * s;
            if c == 0 {
                break;
            }
            if c < 0 {
                return Err(QError::Domain(format!(
                    "{name} count {count} with s = {s} jumps past zero to {c}; the bracket [{c}] is not a weight"
                )));
            }
        }
    }
    Ok(())
}

/// Whether `k` marked draws among `n` keep every factor positive.
pub(crate) fn contagious_feasible(m: u32, u: u32, s: i64, n: u32, k: u32) -> bool {
    let positive = |count: u32, draws: u32| (0..i64::from(draws)).all(|a| i64::from(count) + a * s > 0);
    positive(m, k) && positive(u, n - k)
}

/// `[n choose k]_(q^-s) q^((m+sk)(n-k)) prod_{a<k} [m+as] prod_{b<n-k} [u+bs] / prod_{g<n} [m+u+gs]`.
///
/// Lists the feasible `k` only. `s = 0` gives Bernoulli trials with
/// `p = [m]/[m+u]` and `s = -1` the hypergeometric law.
pub fn contagious_pmf(m: u32, u: u32, s: i64, n: u32, q: &QBase) -> Result<ExactPmf> {
    check_contagious(m, u, s, n)?;
    let total = i64::from(m) + i64::from(u);
    let denominator =
        (0..i64::from(n)).fold(Rational::one(), |acc, g| acc * bracket(total + g * s, q));
    let binomial_base = q.power(-s);
    Ok(Pmf::exact((0..=n).filter(|k| contagious_feasible(m, u, s, n, *k)).map(|k| {
        let (k_i, n_i) = (i64::from(k), i64::from(n));
        let marked = (0..k_i).fold(Rational::one(), |acc, a| acc * bracket(i64::from(m) + a * s, q));
        let unmarked = (0..n_i - k_i).fold(Rational::one(), |acc, b| acc * bracket(i64::from(u) + b * s, q));
        let mass = q_binomial(n_i, k_i, &binomial_base) * q.pow((i64::from(m) + s * k_i) * (n_i - k_i)) * marked
            * unmarked
            / &denominator;
        (k, mass, bracket(k_i, q))
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{int, ratio};

    #[test]
    fn hypergeom_examples() {
        let q = QBase::from_ratio(1, 2);
        let pmf = hypergeom_pmf(1, 1, 1, &q).unwrap();
        assert_eq!(pmf.probability(0), ratio(1, 3));
        assert_eq!(pmf.probability(1), ratio(2, 3));
        let all = hypergeom_pmf(3, 2, 5, &q).unwrap();
        assert_eq!(all.entries.len(), 1);
        assert_eq!(all.probability(3), int(1));
        assert!(hypergeom_pmf(1, 1, 3, &q).is_err());
        assert_eq!(hypergeom_dual(2, 1, 2, &q, 1).unwrap(), ratio(6, 7));
        assert_eq!(hypergeom_pmf(4, 3, 4, &QBase::from_ratio(3, 1)).unwrap().total(), int(1));
    }

    #[test]
    fn contagious_examples() {
        let q = QBase::from_ratio(1, 2);
        let pmf = contagious_pmf(1, 1, 1, 2, &q).unwrap();
        assert_eq!(pmf.probability(0), ratio(1, 7));
        assert_eq!(pmf.probability(1), ratio(2, 7));
        assert_eq!(pmf.probability(2), ratio(4, 7));
        assert_eq!(contagious_pmf(3, 2, -1, 4, &q).unwrap(), hypergeom_pmf(3, 2, 4, &q).unwrap());
        let p = bracket(2, &q) / bracket(5, &q);
        let bernoulli = super::super::bernoulli::bernoulli_pmf(4, &p, &QBase::classical()).unwrap();
        let zero_s = contagious_pmf(2, 3, 0, 4, &q).unwrap();
        for k in 0..=4 {
            assert_eq!(zero_s.probability(k), bernoulli.probability(k));
        }
    }

    #[test]
    fn contagious_validation() {
        assert!(check_contagious(3, 2, -2, 3).is_err());
        assert!(check_contagious(4, 2, -2, 3).is_ok());
        assert!(check_contagious(1, 1, -1, 3).is_err());
        assert!(check_contagious(2, 2, 3, 6).is_ok());
    }
}
