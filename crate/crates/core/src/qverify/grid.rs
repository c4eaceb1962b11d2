use std::fmt;

use num_traits::{One, Signed};

use crate::error::{QError, Result};
use crate::qnum::{parse_rational, ratio, QBase, Rational, Regime};

/// Parameter ranges an identity is evaluated on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    /// Deformation parameters in `(0, 1]`.
    pub qs: Vec<Rational>,
    /// Deformation parameters above 1, used only by identities valid there.
    pub super_qs: Vec<Rational>,
    /// Probability-like arguments (`p`, `v`, `x`).
    pub ps: Vec<Rational>,
    /// Upper bound for integer parameters such as `n`.
    pub max_int: u32,
}

/// `q in {1/4, 1/2, 3/4, 1}`, `q > 1 in {2, 3}`, `p in {1/5, 1/2, 4/5}`, integers up to 8.
pub fn default_grid() -> GridSpec {
    GridSpec {
        qs: vec![ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(1, 1)],
        super_qs: vec![ratio(2, 1), ratio(3, 1)],
        ps: vec![ratio(1, 5), ratio(1, 2), ratio(4, 5)],
        max_int: 8,
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        default_grid()
    }
}

impl GridSpec {
    /// Applies `key=v1,v2,...` with key `q`, `q_super`, `p` or `max_int`.
    ///
    /// `q` values above 1 are moved to `q_super`, so `q=1/2,2` is accepted.
    pub fn apply_override(&mut self, text: &str) -> Result<()> {
        let (key, values) = text
            .split_once('=')
            .ok_or_else(|| QError::Parse(format!("grid override `{text}` is not of the form key=v1,v2")))?;
        let parsed = || -> Result<Vec<Rational>> {
            values.split(',').map(|v| parse_rational(v.trim())).collect()
        };
        match key.trim() {
            "q" => {
                let qs = parsed()?;
                for q in &qs {
                    if !q.is_positive() {
                        return Err(QError::Domain(format!("grid q must be positive, got {q}")));
                    }
                }
                self.qs = qs.iter().filter(|q| *q <= &Rational::one()).cloned().collect();
                let above: Vec<Rational> = qs.into_iter().filter(|q| q > &Rational::one()).collect();
                if !above.is_empty() {
                    self.super_qs = above;
                }
            }
            "q_super" => {
                let qs = parsed()?;
                if let Some(bad) = qs.iter().find(|q| *q <= &Rational::one()) {
                    return Err(QError::Domain(format!("q_super values must exceed 1, got {bad}")));
                }
                self.super_qs = qs;
            }
            "p" | "v" => self.ps = parsed()?,
            "max_int" | "n" => {
                self.max_int = values
                    .trim()
                    .parse()
                    .map_err(|_| QError::Parse(format!("max_int must be a nonnegative integer, got `{values}`")))?;
            }
            other => {
                return Err(QError::Parse(format!("unknown grid key `{other}` (expected q, q_super, p, max_int)")))
            }
        }
        Ok(())
    }

    pub fn with_overrides<S: AsRef<str>>(mut self, overrides: &[S]) -> Result<Self> {
        for o in overrides {
            // Several overrides may share one argument, separated by `;`.
            for part in o.as_ref().split(';').filter(|s| !s.trim().is_empty()) {
                self.apply_override(part)?;
            }
        }
        Ok(self)
    }

    /// Every grid `q`, in order: the `(0, 1]` values then those above 1.
    pub fn all_qs(&self) -> impl Iterator<Item = QBase> + '_ {
        self.qs
            .iter()
            .chain(self.super_qs.iter())
            .map(|q| QBase::new(q.clone()).expect("grid values are positive"))
    }
}

/// Which deformation parameters an identity is valid for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QDomain {
    /// Every `q > 0`.
    Any,
    /// `0 < q <= 1`.
    UpToOne,
    /// `0 < q < 1`.
    SubUnit,
    /// `q != 1`.
    NonUnit,
    /// `q > 1`.
    SuperUnit,
}

impl QDomain {
    pub fn admits(self, q: &QBase) -> bool {
        match self {
            QDomain::Any => true,
            QDomain::UpToOne => q.regime() != Regime::SuperUnit,
            QDomain::SubUnit => q.regime() == Regime::SubUnit,
            QDomain::NonUnit => q.regime() != Regime::Unit,
            QDomain::SuperUnit => q.regime() == Regime::SuperUnit,
        }
    }

    /// Splits the grid into admitted bases and skip notes for the rest.
    pub fn select(self, grid: &GridSpec) -> (Vec<QBase>, Vec<String>) {
        let mut admitted = Vec::new();
        let mut skipped = Vec::new();
        for q in grid.all_qs() {
            if self.admits(&q) {
                admitted.push(q);
            } else {
                skipped.push(format!("q={q}: outside the domain ({self})"));
            }
        }
        (admitted, skipped)
    }
}

impl fmt::Display for QDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QDomain::Any => "q > 0",
            QDomain::UpToOne => "0 < q <= 1",
            QDomain::SubUnit => "0 < q < 1",
            QDomain::NonUnit => "q != 1",
            QDomain::SuperUnit => "q > 1",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let grid = default_grid().with_overrides(&["q=1/3,2", "p=1/7;max_int=4"]).unwrap();
        assert_eq!(grid.qs, vec![ratio(1, 3)]);
        assert_eq!(grid.super_qs, vec![ratio(2, 1)]);
        assert_eq!(grid.ps, vec![ratio(1, 7)]);
        assert_eq!(grid.max_int, 4);
        assert!(default_grid().with_overrides(&["r=1"]).is_err());
        assert!(default_grid().with_overrides(&["q=0"]).is_err());
    }

    #[test]
    fn domains() {
        let (qs, skipped) = QDomain::SubUnit.select(&default_grid());
        assert_eq!(qs.len(), 3);
        assert_eq!(skipped.len(), 3);
        assert!(skipped[0].starts_with("q=1:"));
    }
}
