//! Univariate polynomials in the probability parameter `p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::base::QBase;
use super::brackets::bracket;
use super::scalar::Rational;

/// Polynomial `sum_s c_s p^s` with exact coefficients and no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PPoly {
    coefficients: Vec<Rational>,
}

impl PPoly {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c p^s`
    pub fn monomial(c: Rational, s: usize) -> Self {
        let mut coefficients = vec![Rational::zero(); s + 1];
        coefficients[s] = c;
        Self::new(coefficients)
    }

    /// The polynomial `p`.
    pub fn identity() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `(1 ∸ c p)^n = prod_{i<n} (1 - c q^i p)` expanded in `p`.
    pub fn q_pochhammer(c: &Rational, n: u32, q: &QBase) -> Self {
        (0..i64::from(n)).fold(Self::one(), |acc, i| {
            &acc * &Self::new(vec![Rational::one(), -(c * q.pow(i))])
        })
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `p^s` (zero beyond the degree).
    pub fn coefficient(&self, s: usize) -> Rational {
        self.coefficients.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coefficients.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, p: &Rational) -> Rational {
        self.coefficients.iter().rev().fold(Rational::zero(), |acc, c| acc * p + c)
    }

    /// `f(c p)` as a polynomial in `p`.
    pub fn rescale(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let coefficients = self
            .coefficients
            .iter()
            .map(|a| {
                let out = a * &power;
                power *= c;
                out
            })
            .collect();
        Self::new(coefficients)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    /// Multiply by `p^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coefficients = vec![Rational::zero(); k];
        coefficients.extend(self.coefficients.iter().cloned());
        Self::new(coefficients)
    }

    /// The q-derivative: `p^s` maps to `[s] p^(s-1)`, constants to zero.
    pub fn q_derivative(&self, q: &QBase) -> Self {
        q_derivative(self, q)
    }
}

/// q-derivative `(f(qp) - f(p)) / ((q - 1) p)`, applied termwise.
pub fn q_derivative(f: &PPoly, q: &QBase) -> PPoly {
    let coefficients = f
        .coefficients
        .iter()
        .enumerate()
        .skip(1)
        .map(|(s, c)| c * bracket(s as i64, q))
        .collect();
    PPoly::new(coefficients)
}

/// Jackson integral `∫_0^upper f(x) d_q x` of a polynomial.
///
/// Uses the termwise rule `∫_0^a x^s d_q x = a^(s+1) / [s+1]`, the antiderivative
/// of the q-derivative that vanishes at zero.
pub fn jackson_integral(f: &PPoly, upper: &Rational, q: &QBase) -> Rational {
    let mut power = upper.clone();
    let mut total = Rational::zero();
    for (s, c) in f.coefficients.iter().enumerate() {
        total += c * &power / bracket(s as i64 + 1, q);
        power *= upper;
    }
    total
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| match s {
                0 => format!("{c}"),
                1 => format!("({c})p"),
                _ => format!("({c})p^{s}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Add for &PPoly {
    type Output = PPoly;
    fn add(self, rhs: &PPoly) -> PPoly {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        PPoly::new((0..len).map(|s| self.coefficient(s) + rhs.coefficient(s)).collect())
    }
}

impl Sub for &PPoly {
    type Output = PPoly;
    fn sub(self, rhs: &PPoly) -> PPoly {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        PPoly::new((0..len).map(|s| self.coefficient(s) - rhs.coefficient(s)).collect())
    }
}

impl Neg for &PPoly {
    type Output = PPoly;
    fn neg(self) -> PPoly {
        PPoly::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

impl Mul for &PPoly {
    type Output = PPoly;
    fn mul(self, rhs: &PPoly) -> PPoly {
        if self.is_zero() || rhs.is_zero() {
            return PPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PPoly {
            type Output = PPoly;
            fn $m(self, rhs: PPoly) -> PPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
