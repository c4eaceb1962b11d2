use std::fmt;

use num_traits::{One, Signed};

use super::scalar::{powi, Rational};
use crate::error::{QError, Result};

/// Position of the deformation parameter relative to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    /// `0 < q < 1`
    SubUnit,
    /// `q = 1`, the classical case.
    Unit,
    /// `q > 1`
    SuperUnit,
}

/// A strictly positive rational deformation parameter together with its regime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QBase {
    value: Rational,
    regime: Regime,
}

impl QBase {
    pub fn new(value: Rational) -> Result<Self> {
        if !value.is_positive() {
            return Err(QError::Domain(format!("q must be positive, got {value}")));
        }
        let regime = match value.cmp(&Rational::one()) {
            std::cmp::Ordering::Less => Regime::SubUnit,
            std::cmp::Ordering::Equal => Regime::Unit,
            std::cmp::Ordering::Greater => Regime::SuperUnit,
        };
        Ok(Self { value, regime })
    }

    /// `num/den`; panics unless the ratio is positive.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(super::scalar::ratio(num, den)).expect("q must be positive")
    }

    pub fn classical() -> Self {
        Self { value: Rational::one(), regime: Regime::Unit }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn is_unit(&self) -> bool {
        self.regime == Regime::Unit
    }

    /// The base `1/q`.
    pub fn inverse(&self) -> Self {
        Self::new(self.value.recip()).expect("reciprocal of a positive rational is positive")
    }

    /// The base `q^k`.
    pub fn power(&self, k: i64) -> Self {
        Self::new(self.pow(k)).expect("powers of a positive rational are positive")
    }

    /// `q^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Rational {
        if self.is_unit() {
            Rational::one()
        } else {
            powi(&self.value, k)
        }
    }

    pub(crate) fn require(&self, regime: Regime, what: &str) -> Result<()> {
        if self.regime == regime {
            Ok(())
        } else {
            Err(QError::Regime(format!("{what} requires q in the {regime:?} regime, got q = {}", self.value)))
        }
    }

    pub(crate) fn require_not(&self, regime: Regime, what: &str) -> Result<()> {
        if self.regime != regime {
            Ok(())
        } else {
            Err(QError::Regime(format!("{what} is not defined in the {regime:?} regime, got q = {}", self.value)))
        }
    }
}

impl fmt::Display for QBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}
