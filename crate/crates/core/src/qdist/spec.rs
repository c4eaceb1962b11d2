use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{QError, Result};
use crate::qnum::{QBase, Rational, Regime};

/// How strictly parameters are validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Entries must be genuine probabilities: `0 < q <= 1` except for the
    /// `q > 1` Poisson law.
    Probability,
    /// Formal evaluation for identity and limit checks; any `q > 0`.
    Identity,
}

/// One of the eight q-distribution variants with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistSpec {
    Bernoulli { n: u32, p: Rational, q: QBase },
    BernoulliInfinite { p: Rational, q: QBase },
    Geometric { p: Rational, q: QBase, rescaled: bool },
    NegBinomial { r: u32, p: Rational, q: QBase },
    Poisson { lambda: Rational, q: QBase },
    Hypergeom { m: u32, u: u32, n: u32, q: QBase },
    Contagious { m: u32, u: u32, s: i64, n: u32, q: QBase },
    Uniform { max_index: u32, q: QBase },
}

impl DistSpec {
    pub fn family(&self) -> &'static str {
        match self {
            DistSpec::Bernoulli { .. } => "bernoulli",
            DistSpec::BernoulliInfinite { .. } => "bernoulli-inf",
            DistSpec::Geometric { .. } => "geometric",
            DistSpec::NegBinomial { .. } => "negbinomial",
            DistSpec::Poisson { .. } => "poisson",
            DistSpec::Hypergeom { .. } => "hypergeom",
            DistSpec::Contagious { .. } => "contagious",
            DistSpec::Uniform { .. } => "uniform",
        }
    }

    pub fn q(&self) -> &QBase {
        match self {
            DistSpec::Bernoulli { q, .. }
            | DistSpec::BernoulliInfinite { q, .. }
            | DistSpec::Geometric { q, .. }
            | DistSpec::NegBinomial { q, .. }
            | DistSpec::Poisson { q, .. }
            | DistSpec::Hypergeom { q, .. }
            | DistSpec::Contagious { q, .. }
            | DistSpec::Uniform { q, .. } => q,
        }
    }

    /// Parameter names and exact text values, in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("family", self.family().to_string())];
        match self {
            DistSpec::Bernoulli { n, p, .. } => {
                out.push(("n", n.to_string()));
                out.push(("p", p.to_string()));
            }
            DistSpec::BernoulliInfinite { p, .. } => out.push(("p", p.to_string())),
            DistSpec::Geometric { p, rescaled, .. } => {
                out.push(("p", p.to_string()));
                out.push(("rescaled", rescaled.to_string()));
            }
            DistSpec::NegBinomial { r, p, .. } => {
                out.push(("r", r.to_string()));
                out.push(("p", p.to_string()));
            }
            DistSpec::Poisson { lambda, .. } => out.push(("lambda", lambda.to_string())),
            DistSpec::Hypergeom { m, u, n, .. } => {
                out.push(("m", m.to_string()));
                out.push(("u", u.to_string()));
                out.push(("n", n.to_string()));
            }
            DistSpec::Contagious { m, u, s, n, .. } => {
                out.push(("m", m.to_string()));
                out.push(("u", u.to_string()));
                out.push(("s", s.to_string()));
                out.push(("n", n.to_string()));
            }
            DistSpec::Uniform { max_index, .. } => out.push(("M", max_index.to_string())),
        }
        out.push(("q", self.q().to_string()));
        out
    }

    /// Checks the structural invariants, plus the regime restriction in
    /// [`Mode::Probability`].
    pub fn validate(&self, mode: Mode) -> Result<()> {
        let q = self.q();
        if mode == Mode::Probability && q.regime() == Regime::SuperUnit && !matches!(self, DistSpec::Poisson { .. }) {
            return Err(QError::Regime(format!(
                "{} is a probability law only for 0 < q <= 1, got q = {q}",
                self.family()
            )));
        }
        match self {
            DistSpec::Bernoulli { p, .. } => check_probability(p),
            DistSpec::BernoulliInfinite { p, q } => {
                q.require(Regime::SubUnit, "the infinite-trial q-Bernoulli law")?;
                check_probability(p)?;
                check_below_one(p)
            }
            DistSpec::Geometric { p, q, .. } => {
                q.require(Regime::SubUnit, "the q-geometric law")?;
                check_open_unit(p)
            }
            DistSpec::NegBinomial { r, p, q } => {
                q.require(Regime::SubUnit, "the q-negative-binomial law")?;
                if *r == 0 {
                    return Err(QError::Domain("r must be at least 1".into()));
                }
                check_open_unit(p)
            }
            DistSpec::Poisson { lambda, q } => super::poisson::check_poisson(lambda, q),
            DistSpec::Hypergeom { m, u, n, .. } => {
                if n > &(m + u) {
                    return Err(QError::Domain(format!("cannot draw n = {n} balls from an urn of {}", m + u)));
                }
                Ok(())
            }
            DistSpec::Contagious { m, u, s, n, .. } => super::urn::check_contagious(*m, *u, *s, *n),
            DistSpec::Uniform { .. } => Ok(()),
        }
    }
}

impl fmt::Display for DistSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        let rest: Vec<String> = params[1..].iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.family(), rest.join(", "))
    }
}

pub(crate) fn check_probability(p: &Rational) -> Result<()> {
    if p.is_negative() || p > &Rational::one() {
        return Err(QError::Domain(format!("p must lie in [0, 1], got {p}")));
    }
    Ok(())
}

pub(crate) fn check_open_unit(p: &Rational) -> Result<()> {
    if !p.is_positive() || p >= &Rational::one() {
        return Err(QError::Domain(format!("p must lie in (0, 1), got {p}")));
    }
    Ok(())
}

pub(crate) fn check_below_one(p: &Rational) -> Result<()> {
    if p >= &Rational::one() {
        return Err(QError::Domain(format!("p must be below 1, got {p}")));
    }
    Ok(())
}

pub(crate) fn check_not_super_unit(q: &QBase, what: &str) -> Result<()> {
    if q.regime() == Regime::SuperUnit {
        return Err(QError::Regime(format!("{what} is a probability law only for 0 < q <= 1, got q = {q}")));
    }
    Ok(())
}

pub(crate) fn check_positive_eps(eps: &Rational) -> Result<()> {
    if eps.is_zero() || eps.is_negative() {
        return Err(QError::Domain(format!("tolerance must be positive, got {eps}")));
    }
    Ok(())
}
