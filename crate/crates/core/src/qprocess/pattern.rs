use std::fmt;
use std::str::FromStr;

use crate::error::{QError, Result};

/// A trial sequence encoded by its zero runs.
///
/// `runs = [a(0), ..., a(k)]` stands for `a(0)` zeros, a nonzero, `a(1)`
/// zeros, a nonzero, ..., and finally `a(k)` zeros, so the pattern has `k`
/// nonzeros and `k + sum a(s)` trials. When `terminal_infinite` is set the
/// last run is `0^∞` and its stored length is ignored (kept at zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPattern {
    runs: Vec<u32>,
    terminal_infinite: bool,
}

impl PathPattern {
    pub fn new(runs: Vec<u32>) -> Result<Self> {
        if runs.is_empty() {
            return Err(QError::Domain("a pattern needs at least one run".into()));
        }
        Ok(Self { runs, terminal_infinite: false })
    }

    /// `a(0)` zeros, nonzero, ..., `a(k-1)` zeros, nonzero, then zeros forever.
    pub fn infinite(mut leading: Vec<u32>) -> Self {
        leading.push(0);
        Self { runs: leading, terminal_infinite: true }
    }

    /// Builds the pattern of a finite step sequence (`true` = nonzero).
    pub fn from_steps(steps: &[bool]) -> Self {
        let mut runs = vec![0];
        for &nonzero in steps {
            if nonzero {
                runs.push(0);
            } else {
                *runs.last_mut().expect("nonempty") += 1;
            }
        }
        Self { runs, terminal_infinite: false }
    }

    pub fn runs(&self) -> &[u32] {
        &self.runs
    }

    pub fn is_terminal_infinite(&self) -> bool {
        self.terminal_infinite
    }

    /// Number of nonzeros.
    pub fn kappa(&self) -> u32 {
        (self.runs.len() - 1) as u32
    }

    /// Zeros counted in the finite runs.
    pub fn zeros(&self) -> u32 {
        let finite = if self.terminal_infinite { &self.runs[..self.runs.len() - 1] } else { &self.runs[..] };
        finite.iter().sum()
    }

    /// Number of trials, `None` for an infinite pattern.
    pub fn trials(&self) -> Option<u32> {
        (!self.terminal_infinite).then(|| self.kappa() + self.zeros())
    }

    /// Partial sums `|a(i)| = a(0) + ... + a(i)`.
    pub fn partial_sums(&self) -> Vec<u32> {
        self.runs
            .iter()
            .scan(0, |acc, a| {
                *acc += a;
                Some(*acc)
            })
            .collect()
    }

    /// Step sequence of a finite pattern; for an infinite one, the steps
    /// before the final run of zeros.
    pub fn steps(&self) -> Vec<bool> {
        let k = self.runs.len() - 1;
        let mut out = Vec::new();
        for (s, a) in self.runs.iter().enumerate() {
            if s == k && self.terminal_infinite {
                break;
            }
            out.extend(std::iter::repeat_n(false, *a as usize));
            if s < k {
                out.push(true);
            }
        }
        out
    }
}

impl fmt::Display for PathPattern {
    /// Step string such as `0101`, with `0…` for a terminal infinite run.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in self.steps() {
            f.write_str(if step { "1" } else { "0" })?;
        }
        if self.terminal_infinite {
            f.write_str("0…")?;
        }
        Ok(())
    }
}

impl FromStr for PathPattern {
    type Err = QError;

    /// Parses a step string of `0` and `1`; a trailing `…` or `...` marks an
    /// infinite final run of zeros.
    fn from_str(text: &str) -> Result<Self> {
        let (body, infinite) = match text.strip_suffix('…').or_else(|| text.strip_suffix("...")) {
            Some(body) => (body.strip_suffix('0').unwrap_or(body), true),
            None => (text, false),
        };
        let steps = body
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(QError::Parse(format!("unexpected `{other}` in pattern `{text}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut pattern = Self::from_steps(&steps);
        if infinite {
            *pattern.runs.last_mut().expect("nonempty") = 0;
            pattern.terminal_infinite = true;
        }
        Ok(pattern)
    }
}

/// All patterns of `n` trials with exactly `kappa` nonzeros: the weak
/// compositions of `n - kappa` into `kappa + 1` runs, in lexicographic order.
pub fn enumerate_patterns(n: u32, kappa: u32) -> Vec<PathPattern> {
    if kappa > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut runs = vec![0; kappa as usize + 1];
    compositions(n - kappa, 0, &mut runs, &mut out);
    out
}

fn compositions(remaining: u32, index: usize, runs: &mut Vec<u32>, out: &mut Vec<PathPattern>) {
    if index + 1 == runs.len() {
        runs[index] = remaining;
        out.push(PathPattern { runs: runs.clone(), terminal_infinite: false });
        return;
    }
    for a in 0..=remaining {
        runs[index] = a;
        compositions(remaining - a, index + 1, runs, out);
    }
}
