use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::qnum::{Interval, Rational};

/// Probability mass function over integer outcome indices.
///
/// `entries[k]` is the probability of outcome `k`, `values[k]` the value the
/// random variable takes there (usually the q-number `[k]`), and `defect` the
/// mass not carried by any listed entry: the intrinsic deficit of a defective
/// law plus any truncated tail.
///
/// `P` is [`Rational`] for exact finite laws and [`Interval`] for laws whose
/// entries involve limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pmf<P> {
    pub entries: BTreeMap<u32, P>,
    pub values: BTreeMap<u32, Rational>,
    pub defect: P,
}

pub type ExactPmf = Pmf<Rational>;
pub type EnclosedPmf = Pmf<Interval>;

impl<P> Pmf<P> {
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Pmf<Rational> {
    /// Builds an exact pmf with zero defect.
    pub fn exact(rows: impl IntoIterator<Item = (u32, Rational, Rational)>) -> Self {
        let mut entries = BTreeMap::new();
        let mut values = BTreeMap::new();
        for (k, probability, value) in rows {
            entries.insert(k, probability);
            values.insert(k, value);
        }
        Self { entries, values, defect: Rational::zero() }
    }

    /// Probability of outcome `k`; zero off the support.
    pub fn probability(&self, k: u32) -> Rational {
        self.entries.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Listed mass plus defect.
    pub fn total(&self) -> Rational {
        self.entries.values().fold(self.defect.clone(), |acc, p| acc + p)
    }

    /// `E f(k, value)` over the listed entries.
    pub fn expectation(&self, f: impl Fn(u32, &Rational) -> Rational) -> Rational {
        self.entries
            .iter()
            .map(|(k, p)| p * f(*k, &self.values[k]))
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// Mean, second moment and variance of the value map.
    pub fn moments(&self) -> MomentReport {
        let mean = self.expectation(|_, v| v.clone());
        let second = self.expectation(|_, v| v * v);
        MomentReport::from_raw(mean, second)
    }

    /// Total variation distance `1/2 sum_k |a_k - b_k|` over the union of supports.
    pub fn tv_distance(&self, other: &Pmf<Rational>) -> Rational {
        let keys: BTreeSet<u32> = self.support().chain(other.support()).collect();
        let sum = keys
            .into_iter()
            .map(|k| (self.probability(k) - other.probability(k)).abs())
            .fold(Rational::zero(), |acc, d| acc + d);
        sum / Rational::from_integer(2.into())
    }

    /// Equal probabilities at every outcome, treating unlisted outcomes as zero.
    pub fn same_law(&self, other: &Pmf<Rational>) -> bool {
        self.support().chain(other.support()).all(|k| self.probability(k) == other.probability(k))
            && self.defect == other.defect
    }

    pub fn enclosed(&self) -> Pmf<Interval> {
        Pmf {
            entries: self.entries.iter().map(|(k, p)| (*k, Interval::point(p.clone()))).collect(),
            values: self.values.clone(),
            defect: Interval::point(self.defect.clone()),
        }
    }
}

impl Pmf<Interval> {
    pub fn probability(&self, k: u32) -> Interval {
        self.entries.get(&k).cloned().unwrap_or_else(|| Interval::point(Rational::zero()))
    }

    /// Enclosure of listed mass plus defect; contains 1 for a valid law.
    pub fn total(&self) -> Interval {
        self.entries.values().fold(self.defect.clone(), |acc, p| &acc + p)
    }

    /// Enclosure of the listed mass alone.
    pub fn listed_mass(&self) -> Interval {
        self.entries.values().fold(Interval::point(Rational::zero()), |acc, p| &acc + p)
    }

    pub fn max_width(&self) -> Rational {
        self.entries.values().map(Interval::width).fold(self.defect.width(), |a, b| a.max(b))
    }
}

/// Mean, second raw moment and variance of a q-distributed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub mean: Rational,
    pub second_moment: Rational,
    pub variance: Rational,
}

impl MomentReport {
    pub fn from_raw(mean: Rational, second_moment: Rational) -> Self {
        let variance = &second_moment - &mean * &mean;
        Self { mean, second_moment, variance }
    }
}

impl fmt::Display for MomentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mean {}, second moment {}, variance {}", self.mean, self.second_moment, self.variance)
    }
}

impl<P: fmt::Display> fmt::Display for Pmf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.entries.iter().map(|(k, e)| format!("{k}: {e}")).collect();
        write!(f, "{{{}}} defect {}", rows.join(", "), self.defect)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{int, ratio};

    #[test]
    fn moments_and_distance() {
        let a = Pmf::exact([(0, ratio(1, 4), int(0)), (1, ratio(3, 4), int(2))]);
        let m = a.moments();
        assert_eq!(m.mean, ratio(3, 2));
        assert_eq!(m.second_moment, int(3));
        assert_eq!(m.variance, ratio(3, 4));
        let b = Pmf::exact([(1, int(1), int(2))]);
        assert_eq!(a.tv_distance(&b), ratio(1, 4));
        assert_eq!(a.total(), int(1));
    }
}
