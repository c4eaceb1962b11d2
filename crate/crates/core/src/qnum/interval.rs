use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::scalar::{ceil_dyadic, dyadic_bits, floor_dyadic, Rational};
use crate::error::{QError, Result};

/// Closed interval `[lo, hi]` with exact rational endpoints.
///
/// Used as a certified enclosure: whenever an operation returns an
/// `Interval` for a limit, an infinite product or a series, the true value
/// lies inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(QError::Domain(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    /// `[c - r, c + r]` for `r >= 0`.
    pub fn around(center: &Rational, radius: &Rational) -> Self {
        let r = radius.abs();
        Self { lo: center - &r, hi: center + &r }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// True when `other` is a subset of `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Distance between the two sets; zero when they intersect.
    pub fn gap(&self, other: &Interval) -> Rational {
        if self.hi < other.lo {
            &other.lo - &self.hi
        } else if other.hi < self.lo {
            &self.lo - &other.hi
        } else {
            Rational::zero()
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn shift(&self, c: &Rational) -> Interval {
        Interval { lo: &self.lo + c, hi: &self.hi + c }
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            Interval { lo: Rational::zero(), hi: self.hi.clone().max(-self.lo.clone()) }
        }
    }

    pub fn recip(&self) -> Result<Interval> {
        if self.contains(&Rational::zero()) {
            return Err(QError::DivisionByZero(format!("reciprocal of [{}, {}]", self.lo, self.hi)));
        }
        Ok(Interval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        Ok(self * &other.recip()?)
    }

    /// Strictly below every point of `other`.
    /// The smallest enclosing interval with endpoints on the grid `2^-bits`.
    /// It is at most `2^(1-bits)` wider.
    pub fn round_outward(&self, bits: u64) -> Interval {
        Interval { lo: floor_dyadic(&self.lo, bits), hi: ceil_dyadic(&self.hi, bits) }
    }

    /// Outward rounding to a dyadic grid fine enough that the width stays at
    /// most `eps`; returned unchanged when there is no room.
    pub fn tidy(&self, eps: &Rational) -> Interval {
        let rounded = self.round_outward(dyadic_bits(&(eps / Rational::from_integer(16.into()))));
        if &rounded.width() <= eps {
            rounded
        } else {
            self.clone()
        }
    }

    pub fn precedes(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    /// Clamp into `[floor, ceil]`; used where a quantity is known a priori to be bounded.
    pub fn clamp(&self, floor: &Rational, ceil: &Rational) -> Interval {
        let lo = self.lo.clone().max(floor.clone()).min(ceil.clone());
        let hi = self.hi.clone().min(ceil.clone()).max(lo.clone());
        Interval { lo, hi }
    }
}

impl From<Rational> for Interval {
    fn from(x: Rational) -> Self {
        Interval::point(x)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        if !self.lo.is_negative() && !rhs.lo.is_negative() {
            return Interval { lo: &self.lo * &rhs.lo, hi: &self.hi * &rhs.hi };
        }
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = products.iter().min().cloned().expect("four products");
        let hi = products.iter().max().cloned().expect("four products");
        Interval { lo, hi }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::scalar::{int, ratio};

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn arithmetic_encloses_pointwise_results() {
        let a = iv(-2, 3);
        let b = iv(-1, 4);
        assert_eq!(&a * &b, iv(-8, 12));
        assert_eq!(&a - &b, iv(-6, 4));
        assert_eq!(&a + &b, iv(-3, 7));
        assert_eq!(a.abs(), iv(0, 3));
        assert!(a.recip().is_err());
        assert_eq!(iv(2, 4).recip().unwrap(), Interval::new(ratio(1, 4), ratio(1, 2)).unwrap());
    }

    #[test]
    fn gap_and_order() {
        assert_eq!(iv(0, 1).gap(&iv(3, 4)), int(2));
        assert_eq!(iv(0, 5).gap(&iv(3, 4)), int(0));
        assert!(iv(0, 1).precedes(&iv(2, 3)));
        assert!(!iv(0, 2).precedes(&iv(2, 3)));
        assert!(Interval::new(int(1), int(0)).is_err());
    }
}
