//! Convergence tables for the limit statements: a distance to the limit law
//! (or limit value) tabulated along an increasing parameter.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::error::{QError, Result};
use crate::qdist::bernoulli::{exponential_tail, scaled_exponential_terms};
use crate::qdist::{bernoulli_pmf, bernoulli_pmf_formal, hypergeom_pmf, super_unit_series, ExactPmf};
use crate::qnum::{
    bracket, powi, q_binomial, q_exponential, q_pochhammer, ratio, shifted_pow_infinite, Interval, QBase, Rational, Regime,
};

/// Names of the tabulated limits.
pub const LIMIT_NAMES: [&str; 4] = ["L4_3", "L5_17", "L5_25", "I4_24"];

/// A limit statement with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitSpec {
    /// q-Bernoulli law with `n` trials against its infinite-trial law; `0 < q < 1`.
    BernoulliInfinite { p: Rational, q: QBase },
    /// Hypergeometric law with `m = N - c`, `u = c` against q-Bernoulli with `p = q^(-c)`; `q > 1`.
    UrnToBernoulli { q: QBase, c: u32, n: u32 },
    /// Hypergeometric law with `m = c`, `u = N - c` in base `Q < 1` against
    /// `[n choose k]_q (1 ∸ p')^k p'^(n-k)` with `q = 1/Q`, `p' = Q^c`.
    UrnToDualBernoulli { big_q: QBase, c: u32, n: u32 },
    /// `(1 ∸ lambda/[n])^n` against the reciprocal series; `q > 1`, `0 <= lambda < q`.
    SuperUnitProduct { lambda: Rational, q: QBase },
    /// `(1 ∸ lambda/[n])^n` against `1 / E_1(lambda) = prod_(j>=1) (1 - (q-1) lambda q^(-j))`;
    /// `q > 1`, `0 <= lambda (q-1) < q`. Agrees with the reciprocal series at `q = 2` only.
    SuperUnitExponential { lambda: Rational, q: QBase },
}

/// Kind of limit, used to parse names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitName {
    L4_3,
    L5_17,
    L5_25,
    I4_24,
}

impl FromStr for LimitName {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L4_3" => Ok(LimitName::L4_3),
            "L5_17" => Ok(LimitName::L5_17),
            "L5_25" => Ok(LimitName::L5_25),
            "I4_24" => Ok(LimitName::I4_24),
            other => Err(QError::Unknown(format!(
                "unknown limit `{other}` (expected one of {})",
                LIMIT_NAMES.join(", ")
            ))),
        }
    }
}

impl fmt::Display for LimitName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimitName::L4_3 => "L4_3",
            LimitName::L5_17 => "L5_17",
            LimitName::L5_25 => "L5_25",
            LimitName::I4_24 => "I4_24",
        })
    }
}

impl LimitName {
    /// The default parameter sequence.
    pub fn default_sequence(self) -> Vec<u32> {
        match self {
            LimitName::I4_24 => vec![20, 30, 40],
            _ => vec![10, 20, 30],
        }
    }

    /// The reference configuration.
    pub fn default_spec(self) -> LimitSpec {
        match self {
            LimitName::L4_3 => LimitSpec::BernoulliInfinite { p: ratio(1, 2), q: QBase::from_ratio(1, 2) },
            LimitName::L5_17 => LimitSpec::UrnToBernoulli { q: QBase::from_ratio(2, 1), c: 4, n: 3 },
            LimitName::L5_25 => LimitSpec::UrnToDualBernoulli { big_q: QBase::from_ratio(1, 2), c: 4, n: 3 },
            LimitName::I4_24 => LimitSpec::SuperUnitProduct { lambda: ratio(1, 2), q: QBase::from_ratio(2, 1) },
        }
    }
}

impl LimitSpec {
    pub fn name(&self) -> LimitName {
        match self {
            LimitSpec::BernoulliInfinite { .. } => LimitName::L4_3,
            LimitSpec::UrnToBernoulli { .. } => LimitName::L5_17,
            LimitSpec::UrnToDualBernoulli { .. } => LimitName::L5_25,
            LimitSpec::SuperUnitProduct { .. } | LimitSpec::SuperUnitExponential { .. } => LimitName::I4_24,
        }
    }

    pub fn params(&self) -> Vec<(String, String)> {
        let pair = |k: &str, v: &dyn fmt::Display| (k.to_string(), v.to_string());
        match self {
            LimitSpec::BernoulliInfinite { p, q } => vec![pair("p", p), pair("q", q)],
            LimitSpec::UrnToBernoulli { q, c, n } => vec![pair("q", q), pair("c", c), pair("n", n)],
            LimitSpec::UrnToDualBernoulli { big_q, c, n } => vec![pair("q", big_q), pair("c", c), pair("n", n)],
            LimitSpec::SuperUnitProduct { lambda, q } => vec![pair("lambda", lambda), pair("q", q)],
            LimitSpec::SuperUnitExponential { lambda, q } => {
                vec![pair("lambda", lambda), pair("q", q), pair("limit", &"1/E_1(lambda)")]
            }
        }
    }

    /// Distance to the limit at parameter value `index`.
    pub fn distance(&self, index: u32, eps: &Rational) -> Result<Interval> {
        match self {
            LimitSpec::BernoulliInfinite { p, q } => bernoulli_to_infinite(index, p, q, eps),
            LimitSpec::UrnToBernoulli { q, c, n } => {
                q.require(Regime::SuperUnit, "the urn-to-Bernoulli limit")?;
                let urn = hypergeom_pmf(urn_size(index, *c, *n)? - c, *c, *n, q)?;
                let limit = bernoulli_pmf_formal(*n, &q.pow(-i64::from(*c)), q);
                Ok(Interval::point(urn.tv_distance(&limit)))
            }
            LimitSpec::UrnToDualBernoulli { big_q, c, n } => {
                big_q.require(Regime::SubUnit, "the urn-to-dual-Bernoulli limit")?;
                let urn = hypergeom_pmf(*c, urn_size(index, *c, *n)? - c, *n, big_q)?;
                Ok(Interval::point(urn.tv_distance(&dual_bernoulli(*n, big_q, *c))))
            }
            LimitSpec::SuperUnitProduct { lambda, q } => {
                q.require(Regime::SuperUnit, "the q > 1 limit product")?;
                let product = q_pochhammer(&(lambda / bracket(index.into(), q)), index, q);
                let limit = super_unit_series(lambda, q, eps)?.recip()?;
                Ok(limit.shift(&-product).abs())
            }
            LimitSpec::SuperUnitExponential { lambda, q } => {
                q.require(Regime::SuperUnit, "the q > 1 limit product")?;
                if lambda.is_negative() {
                    return Err(QError::Domain(format!("lambda must be nonnegative, got {lambda}")));
                }
                let product = q_pochhammer(&(lambda / bracket(index.into(), q)), index, q);
                // E_1(lambda) >= 1, so its reciprocal is no wider than itself.
                let limit = q_exponential(1, lambda, q, eps)?.recip()?;
                Ok(limit.shift(&-product).abs())
            }
        }
    }
}

fn urn_size(total: u32, c: u32, n: u32) -> Result<u32> {
    if total < c + n {
        return Err(QError::Domain(format!("urn size N = {total} must be at least c + n = {}", c + n)));
    }
    Ok(total)
}

/// `[n choose k]_q (1 ∸_q p')^k p'^(n-k)` with `q = 1/Q` and `p' = Q^c`.
fn dual_bernoulli(n: u32, big_q: &QBase, c: u32) -> ExactPmf {
    let q = big_q.inverse();
    let p_prime = big_q.pow(c.into());
    ExactPmf::exact((0..=n).map(|k| {
        let mass = q_binomial(n.into(), k.into(), &q)
            * q_pochhammer(&p_prime, k, &q)
            * powi(&p_prime, i64::from(n - k));
        (k, mass, bracket(k.into(), big_q))
    }))
}

/// Total variation between the `n`-trial law and the infinite-trial law,
/// including the limit's mass beyond `n`.
fn bernoulli_to_infinite(n: u32, p: &Rational, q: &QBase, eps: &Rational) -> Result<Interval> {
    q.require(Regime::SubUnit, "the infinite-trial limit")?;
    let finite = bernoulli_pmf(n, p, q)?;
    if p >= &Rational::one() {
        return Err(QError::Domain(format!("the infinite-trial law needs p < 1, got {p}")));
    }
    let c = p / (Rational::one() - q.value());
    let coefficients = scaled_exponential_terms(&c, n, q);
    let product = shifted_pow_infinite(p, q, eps)?;
    let mut total = &exponential_tail(&c, n, q, eps)? * &product;
    for (k, a) in coefficients.iter().enumerate() {
        let limit = product.scale(a);
        total = &total + &limit.shift(&-finite.probability(k as u32)).abs();
    }
    Ok(total.scale(&ratio(1, 2)))
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub index: u32,
    pub distance: Interval,
}

/// Distances to a limit along an increasing parameter sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceTable {
    pub name: LimitName,
    pub params: Vec<(String, String)>,
    pub rows: Vec<ConvergenceRow>,
    /// Each distance lies entirely below the previous one.
    pub strictly_decreasing: bool,
    /// Each distance lies entirely at or below the previous one.
    pub nonincreasing: bool,
}

/// Tabulates `spec` along `sequence` (which must be strictly increasing).
pub fn limit_table(spec: &LimitSpec, sequence: &[u32], eps: &Rational) -> Result<ConvergenceTable> {
    if sequence.is_empty() || sequence.windows(2).any(|w| w[0] >= w[1]) {
        return Err(QError::Domain(format!("parameter sequence {sequence:?} must be nonempty and increasing")));
    }
    if !eps.is_positive() {
        return Err(QError::Domain(format!("tolerance must be positive, got {eps}")));
    }
    let rows = sequence
        .iter()
        .map(|&index| Ok(ConvergenceRow { index, distance: spec.distance(index, eps)? }))
        .collect::<Result<Vec<_>>>()?;
    let strictly_decreasing = rows.windows(2).all(|w| w[1].distance.hi() < w[0].distance.lo());
    let nonincreasing = rows.windows(2).all(|w| w[1].distance.hi() <= w[0].distance.lo());
    Ok(ConvergenceTable { name: spec.name(), params: spec.params(), rows, strictly_decreasing, nonincreasing })
}
