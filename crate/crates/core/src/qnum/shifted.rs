//! q-shifted powers `(a ∔ b)^n = prod_{i<n} (a + q^i b)` and the expansions
//! built from them.

use num_traits::{One, Signed, Zero};

use super::base::{QBase, Regime};
use super::brackets::{bracket, q_binomial, q_factorial, triangular_weight};
use super::interval::Interval;
use super::scalar::{ceil_dyadic, dyadic_bits, floor_dyadic, powi, Rational};
use crate::error::{QError, Result};

/// `(a ∔ b)^n` for any integer `n`.
///
/// For `n >= 0` this is `prod_{i<n} (a + q^i b)`. For `n = -beta < 0` it is
/// `1 / prod_{i<beta} (a + q^(i - beta) b)`, the extension under which
/// `(a ∔ b)^(s+t) = (a ∔ b)^s (a ∔ q^s b)^t` holds for all integers.
pub fn shifted_pow(a: &Rational, b: &Rational, n: i64, q: &QBase) -> Result<Rational> {
    if n >= 0 {
        return Ok((0..n).fold(Rational::one(), |acc, i| acc * (a + q.pow(i) * b)));
    }
    let beta = -n;
    let mut denominator = Rational::one();
    for i in 0..beta {
        let factor = a + q.pow(i - beta) * b;
        if factor.is_zero() {
            return Err(QError::DivisionByZero(format!(
                "({a} ∔ {b})^{n} at q = {q}: factor {i} vanishes"
            )));
        }
        denominator *= factor;
    }
    Ok(denominator.recip())
}

/// `(1 ∸ p)^n = prod_{i<n} (1 - q^i p)` for `n >= 0`.
pub fn q_pochhammer(p: &Rational, n: u32, q: &QBase) -> Rational {
    (0..i64::from(n)).fold(Rational::one(), |acc, i| acc * (Rational::one() - q.pow(i) * p))
}

/// Certified enclosure of `(1 ∸ p)^∞ = prod_{i>=0} (1 - p q^i)` of width at most `eps`.
///
/// The product is truncated at the first `N` with `t = p q^N / (1 - q) < eps/2`.
/// Since `prod_{i>=N} (1 - t_i) >= 1 - sum t_i` for `t_i` in `[0, 1)`, the
/// value lies in `[P_N (1 - t), P_N]`. The partial product `P_N` is carried
/// as a pair of dyadic bounds rounded outward at every step; exact partial
/// products would have denominators growing like `q^(-N^2/2)`.
pub fn shifted_pow_infinite(p: &Rational, q: &QBase, eps: &Rational) -> Result<Interval> {
    q.require(Regime::SubUnit, "the infinite q-shifted product")?;
    if p.is_negative() || p >= &Rational::one() {
        return Err(QError::Domain(format!("infinite product needs 0 <= p < 1, got {p}")));
    }
    if !eps.is_positive() {
        return Err(QError::Domain(format!("tolerance must be positive, got {eps}")));
    }
    if p.is_zero() {
        return Ok(Interval::point(Rational::one()));
    }
    let one = Rational::one();
    let half_eps = eps / Rational::from_integer(2.into());
    let scale = p / (&one - q.value());
    let mut factors = 0i64;
    let mut q_n = one.clone();
    while &scale * &q_n >= half_eps {
        q_n *= q.value();
        factors += 1;
    }
    let tail = &scale * &q_n;
    // Each rounding moves a bound by at most 2^-bits and the factors lie in
    // (0, 1], so the bounds drift apart by at most 2 (factors + 1) 2^-bits <= eps/4.
    let bits = dyadic_bits(&(eps / Rational::from_integer((8 * (factors + 1)).into())));
    let (mut lo, mut hi) = (one.clone(), one.clone());
    let mut q_i = one.clone();
    for _ in 0..factors {
        let factor = &one - p * &q_i;
        lo = floor_dyadic(&(&lo * &factor), bits);
        hi = ceil_dyadic(&(&hi * &factor), bits);
        q_i *= q.value();
    }
    Interval::new(floor_dyadic(&(lo * (&one - tail)), bits), hi)
}

/// Coefficients `c_j = [m choose j] q^C(j,2)` of Euler's expansion
/// `(x ∔ y)^m = sum_j c_j x^(m-j) y^j`.
pub fn euler_coefficients(m: u32, q: &QBase) -> Vec<Rational> {
    let m = i64::from(m);
    (0..=m).map(|j| q_binomial(m, j, q) * triangular_weight(j, q)).collect()
}

/// The symmetric q-power `(a +_q b)^n = sum_k [n choose k] a^k b^(n-k)`.
pub fn symmetric_pow(a: &Rational, b: &Rational, n: u32, q: &QBase) -> Rational {
    let n = i64::from(n);
    (0..=n)
        .map(|k| q_binomial(n, k, q) * powi(a, k) * powi(b, n - k))
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// Coefficients `c_1..c_m` in `(x D_q)^m = sum_k c_k x^k D_q^k`.
///
/// `c_k = (1/[k-1]!) sum_{s<k} [k-1 choose s] (-1)^s q^C(s,2) [k-s]^(m-1)`;
/// the returned vector holds `c_k` at index `k - 1`.
pub fn euler_operator_coefficients(m: u32, q: &QBase) -> Result<Vec<Rational>> {
    if m < 1 {
        return Err(QError::Domain("operator power must be at least 1".into()));
    }
    let coefficients = (1..=i64::from(m))
        .map(|k| {
            let inner = (0..k).fold(Rational::zero(), |acc, s| {
                let sign = if s % 2 == 0 { Rational::one() } else { -Rational::one() };
                acc + sign
                    * q_binomial(k - 1, s, q)
                    * triangular_weight(s, q)
                    * powi(&bracket(k - s, q), i64::from(m) - 1)
            });
            inner / q_factorial((k - 1) as u32, q)
        })
        .collect();
    Ok(coefficients)
}
