//! q-numbers, q-factorials and Gaussian binomial coefficients.

use num_traits::{One, Zero};

use super::base::QBase;
use super::scalar::{choose2, int, Rational};

/// The q-number `[x] = (q^x - 1)/(q - 1)`.
///
/// At `q = 1` this is the integer `x` itself; for `x < 0` it satisfies
/// `[x] = -q^x [-x]`.
pub fn bracket(x: i64, q: &QBase) -> Rational {
    if q.is_unit() {
        return int(x);
    }
    let one = Rational::one();
    (q.pow(x) - &one) / (q.value() - &one)
}

/// `[k]! = [1][2]...[k]`, with `[0]! = 1`.
pub fn q_factorial(k: u32, q: &QBase) -> Rational {
    (1..=i64::from(k)).fold(Rational::one(), |acc, i| acc * bracket(i, q))
}

/// Gaussian binomial `[x choose k]` for any integer `x`.
///
/// Zero for `k < 0` and for `0 <= x < k`; one for `k = 0`.
pub fn q_binomial(x: i64, k: i64, q: &QBase) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        let top = bracket(x - i, q);
        if top.is_zero() {
            return top;
        }
        acc = acc * top / bracket(i + 1, q);
    }
    acc
}

/// `[x]` evaluated in the base `1/q`.
///
/// Equal to `q^(1-x) [x]_q`.
pub fn rebase_bracket(x: i64, q: &QBase) -> Rational {
    bracket(x, &q.inverse())
}

/// `[k]!` in the base `1/q`; equal to `q^(-C(k,2)) [k]!_q`.
pub fn rebase_factorial(k: u32, q: &QBase) -> Rational {
    q_factorial(k, &q.inverse())
}

/// `[a choose b]` in the base `1/q`; equal to `q^(b(b-a)) [a choose b]_q`.
pub fn rebase_binomial(a: i64, b: i64, q: &QBase) -> Rational {
    q_binomial(a, b, &q.inverse())
}

/// The exponent `C(j, 2)` weight `q^C(j,2)`.
pub(crate) fn triangular_weight(j: i64, q: &QBase) -> Rational {
    q.pow(choose2(j))
}
