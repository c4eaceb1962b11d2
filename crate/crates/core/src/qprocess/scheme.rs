use std::fmt;

use num_traits::{One, Signed, Zero};

use super::pattern::PathPattern;
use crate::error::{QError, Result};
use crate::qdist::spec::check_probability;
use crate::qdist::DistSpec;
use crate::qnum::{bracket, powi, q_pochhammer, shifted_pow_infinite, Interval, QBase, Rational};

/// A sequential trial mechanism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scheme {
    /// Trials whose nonzero probability is `q^r p` after `r` zeros.
    Bernoulli { p: Rational, q: QBase },
    /// Draws without replacement from `m` marked and `u` unmarked balls.
    Hypergeom { m: u32, u: u32, q: QBase },
    /// Draws returning `s + 1` copies of the drawn ball.
    Contagious { m: u32, u: u32, s: i64, q: QBase },
}

impl Scheme {
    pub fn q(&self) -> &QBase {
        match self {
            Scheme::Bernoulli { q, .. } | Scheme::Hypergeom { q, .. } | Scheme::Contagious { q, .. } => q,
        }
    }

    /// The macroscopic law produced by `n` steps.
    pub fn dist_spec(&self, n: u32) -> DistSpec {
        match self.clone() {
            Scheme::Bernoulli { p, q } => DistSpec::Bernoulli { n, p, q },
            Scheme::Hypergeom { m, u, q } => DistSpec::Hypergeom { m, u, n, q },
            Scheme::Contagious { m, u, s, q } => DistSpec::Contagious { m, u, s, n, q },
        }
    }

    /// Marked/unmarked counts and the contagion step; hypergeometric draws are `s = -1`.
    fn urn(&self) -> Option<(i64, i64, i64)> {
        match self {
            Scheme::Bernoulli { .. } => None,
            Scheme::Hypergeom { m, u, .. } => Some((i64::from(*m), i64::from(*u), -1)),
            Scheme::Contagious { m, u, s, .. } => Some((i64::from(*m), i64::from(*u), *s)),
        }
    }

    /// Whether a path with `nonzeros` marked and `zeros` unmarked draws keeps
    /// every urn count positive at the moment it is drawn from.
    pub fn feasible(&self, nonzeros: u32, zeros: u32) -> bool {
        match self.urn() {
            None => true,
            Some((m, u, s)) => {
                let positive = |count: i64, draws: u32| (0..i64::from(draws)).all(|a| count + a * s > 0);
                positive(m, nonzeros) && positive(u, zeros)
            }
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::Bernoulli { p, q } => write!(f, "bernoulli(p={p}, q={q})"),
            Scheme::Hypergeom { m, u, q } => write!(f, "hypergeom(m={m}, u={u}, q={q})"),
            Scheme::Contagious { m, u, s, q } => write!(f, "contagious(m={m}, u={u}, s={s}, q={q})"),
        }
    }
}

/// Progress of a path: `draws = nonzeros + zeros`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ProcessState {
    pub draws: u32,
    pub nonzeros: u32,
    pub zeros: u32,
}

impl ProcessState {
    pub fn new(nonzeros: u32, zeros: u32) -> Self {
        Self { draws: nonzeros + zeros, nonzeros, zeros }
    }

    pub fn advance(self, nonzero: bool) -> Self {
        if nonzero {
            Self::new(self.nonzeros + 1, self.zeros)
        } else {
            Self::new(self.nonzeros, self.zeros + 1)
        }
    }
}

/// Probabilities of the next step being zero and nonzero, in that order.
///
/// - Bernoulli after `r` zeros: `(1 - q^r p, q^r p)`.
/// - Urn with `i` nonzeros among `g` draws: marked weight `[m + i s]`,
///   unmarked weight `q^(m + i s) [u + (g - i) s]`, both over `[m + u + g s]`.
///   Hypergeometric draws are the case `s = -1`. The two weights add up to
///   the denominator by `[a] + q^a [b] = [a + b]`.
pub fn step_conditionals(state: ProcessState, scheme: &Scheme) -> Result<(Rational, Rational)> {
    if state.draws != state.nonzeros + state.zeros {
        return Err(QError::Domain(format!("inconsistent state {state:?}")));
    }
    match scheme {
        Scheme::Bernoulli { p, q } => {
            let nonzero = q.pow(state.zeros.into()) * p;
            Ok((Rational::one() - &nonzero, nonzero))
        }
        _ => {
            let (m, u, s) = scheme.urn().expect("urn scheme");
            let q = scheme.q();
            let marked = m + i64::from(state.nonzeros) * s;
            let unmarked = u + i64::from(state.zeros) * s;
            if marked < 0 || unmarked < 0 || marked + unmarked <= 0 {
                return Err(QError::Domain(format!(
                    "state {state:?} is unreachable in {scheme}: urn holds {marked} marked and {unmarked} unmarked"
                )));
            }
            let total = bracket(marked + unmarked, q);
            let nonzero = bracket(marked, q) / &total;
            let zero = q.pow(marked) * bracket(unmarked, q) / &total;
            Ok((zero, nonzero))
        }
    }
}

/// Exact probability of a finite pattern, from the closed microscopic formulas:
///
/// - Bernoulli: `(1 ∸ p)^(sum a) p^k q^(sum_{i<k} |a(i)|)`.
/// - Urn: `q^(sum_i (m + s i) a(i)) prod_{a<k} [m+as] prod_{b<n-k} [u+bs] / prod_{g<n} [m+u+gs]`.
pub fn pattern_probability(pattern: &PathPattern, scheme: &Scheme) -> Result<Rational> {
    if pattern.is_terminal_infinite() {
        return Err(QError::Domain(format!(
            "pattern {pattern} ends in an infinite run; use pattern_probability_infinite"
        )));
    }
    let kappa = pattern.kappa();
    let zeros = pattern.zeros();
    match scheme {
        Scheme::Bernoulli { p, q } => {
            let exponent: u32 = pattern.partial_sums()[..kappa as usize].iter().sum();
            Ok(q_pochhammer(p, zeros, q) * powi(p, kappa.into()) * q.pow(exponent.into()))
        }
        _ => {
            if !scheme.feasible(kappa, zeros) {
                return Err(QError::Domain(format!("pattern {pattern} exhausts the urn in {scheme}")));
            }
            let (m, u, s) = scheme.urn().expect("urn scheme");
            let q = scheme.q();
            let n = i64::from(kappa + zeros);
            let exponent: i64 =
                pattern.runs().iter().enumerate().map(|(i, a)| (m + s * i as i64) * i64::from(*a)).sum();
            let marked = (0..i64::from(kappa)).fold(Rational::one(), |acc, a| acc * bracket(m + a * s, q));
            let unmarked = (0..i64::from(zeros)).fold(Rational::one(), |acc, b| acc * bracket(u + b * s, q));
            let denominator = (0..n).fold(Rational::one(), |acc, g| acc * bracket(m + u + g * s, q));
            Ok(q.pow(exponent) * marked * unmarked / denominator)
        }
    }
}

/// Probability of a pattern ending in zeros forever under Bernoulli trials:
/// `p^k (1 ∸ p)^∞ q^(sum_{s<k} (k - s) a(s))`, enclosed to width `eps`.
pub fn pattern_probability_infinite(pattern: &PathPattern, p: &Rational, q: &QBase, eps: &Rational) -> Result<Interval> {
    if !pattern.is_terminal_infinite() {
        return Err(QError::Domain(format!("pattern {pattern} is finite; use pattern_probability")));
    }
    check_probability(p)?;
    let kappa = pattern.kappa();
    let exponent: i64 = pattern.runs()[..kappa as usize]
        .iter()
        .enumerate()
        .map(|(s, a)| (i64::from(kappa) - s as i64) * i64::from(*a))
        .sum();
    let factor = powi(p, kappa.into()) * q.pow(exponent);
    if factor.is_zero() {
        return Ok(Interval::point(Rational::zero()));
    }
    let product = shifted_pow_infinite(p, q, &(eps / factor.abs().max(Rational::one())))?;
    Ok(product.scale(&factor))
}

/// Product of the step conditionals along a finite pattern.
pub fn chain_probability(pattern: &PathPattern, scheme: &Scheme) -> Result<Rational> {
    let mut state = ProcessState::default();
    let mut prob = Rational::one();
    for step in pattern.steps() {
        let (zero, nonzero) = step_conditionals(state, scheme)?;
        prob *= if step { nonzero } else { zero };
        state = state.advance(step);
    }
    Ok(prob)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{int, ratio};

    fn bern() -> Scheme {
        Scheme::Bernoulli { p: ratio(1, 2), q: QBase::from_ratio(1, 2) }
    }

    #[test]
    fn bernoulli_conditionals() {
        let p = ratio(1, 3);
        let q = QBase::from_ratio(1, 2);
        let scheme = Scheme::Bernoulli { p: p.clone(), q: q.clone() };
        let after = |zeros, nonzeros| step_conditionals(ProcessState::new(nonzeros, zeros), &scheme).unwrap();
        assert_eq!(after(0, 0), (ratio(2, 3), p.clone()));
        assert_eq!(after(1, 0), (int(1) - q.value() * &p, q.value() * &p));
        assert_eq!(after(0, 1), (ratio(2, 3), p.clone()));
    }

    #[test]
    fn urn_conditionals() {
        let scheme = Scheme::Hypergeom { m: 1, u: 1, q: QBase::from_ratio(1, 2) };
        assert_eq!(step_conditionals(ProcessState::default(), &scheme).unwrap(), (ratio(1, 3), ratio(2, 3)));
        let contagious = Scheme::Contagious { m: 2, u: 3, s: 2, q: QBase::from_ratio(2, 3) };
        for i in 0..4 {
            for j in 0..4 {
                let (a, b) = step_conditionals(ProcessState::new(i, j), &contagious).unwrap();
                assert_eq!(a + b, int(1));
            }
        }
        assert!(step_conditionals(ProcessState::new(2, 0), &scheme).is_err());
    }

    #[test]
    fn pattern_examples() {
        let pattern = PathPattern::new(vec![1, 0]).unwrap();
        assert_eq!(pattern_probability(&pattern, &bern()).unwrap(), ratio(1, 8));
        assert_eq!(chain_probability(&pattern, &bern()).unwrap(), ratio(1, 8));
        let q = QBase::from_ratio(1, 2);
        let eps = ratio(1, 1_000_000_000_000);
        let never = pattern_probability_infinite(&PathPattern::infinite(vec![]), &ratio(1, 2), &q, &eps).unwrap();
        assert_eq!(never, shifted_pow_infinite(&ratio(1, 2), &q, &eps).unwrap());
        assert!(pattern_probability(&PathPattern::infinite(vec![0]), &bern()).is_err());
    }
}
