use std::fmt;

use num_traits::Zero;

use crate::error::Result;
use crate::qnum::{Interval, Rational};

/// How both sides of an identity are compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckMode {
    /// Structural equality of exact values.
    Exact,
    /// Enclosures must intersect and each be at most this wide.
    Interval(Rational),
    /// A distance sequence must be certified strictly decreasing.
    Monotone,
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckMode::Exact => f.write_str("exact"),
            CheckMode::Interval(tol) => write!(f, "interval({tol})"),
            CheckMode::Monotone => f.write_str("monotone"),
        }
    }
}

/// Named parameter values of one evaluation point.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Binding(pub Vec<(String, String)>);

impl Binding {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.0.push((name.to_string(), value.to_string()));
        self
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Result of an identity over its grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The first failing binding with the two sides as text.
    Fail { binding: Binding, lhs: String, rhs: String },
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

/// Report for one catalog identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub id: String,
    pub statement: String,
    pub mode: CheckMode,
    pub outcome: Outcome,
    /// Number of bindings evaluated.
    pub bindings: usize,
    /// Widest enclosure seen (interval and monotone modes).
    pub max_width: Option<Rational>,
    /// Grid points outside the identity's domain, with the reason.
    pub skipped: Vec<String>,
    /// Reported but excluded from the default pass/fail gate.
    pub watchlist: bool,
}

/// Accumulates comparisons for one identity.
#[derive(Debug)]
pub struct Checker {
    mode: CheckMode,
    bindings: usize,
    failure: Option<(Binding, String, String)>,
    max_width: Option<Rational>,
    skipped: Vec<String>,
}

impl Checker {
    pub fn new(mode: CheckMode) -> Self {
        Self { mode, bindings: 0, failure: None, max_width: None, skipped: Vec::new() }
    }

    pub fn mode(&self) -> &CheckMode {
        &self.mode
    }

    pub fn skip(&mut self, note: impl Into<String>) {
        self.skipped.push(note.into());
    }

    pub fn skip_all(&mut self, notes: Vec<String>) {
        self.skipped.extend(notes);
    }

    fn fail(&mut self, binding: Binding, lhs: String, rhs: String) {
        if self.failure.is_none() {
            self.failure = Some((binding, lhs, rhs));
        }
    }

    fn widen(&mut self, width: Rational) {
        self.max_width = Some(match self.max_width.take() {
            Some(w) if w >= width => w,
            _ => width,
        });
    }

    /// Records `lhs == rhs` exactly; an evaluation error counts as a failure.
    pub fn exact<T: PartialEq + fmt::Display>(&mut self, binding: Binding, lhs: Result<T>, rhs: Result<T>) {
        self.bindings += 1;
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => {}
            (l, r) => self.fail(binding, show(l), show(r)),
        }
    }

    /// Records that two enclosures intersect and are each at most `tol` wide.
    pub fn interval(&mut self, binding: Binding, lhs: Result<Interval>, rhs: Result<Interval>) {
        self.bindings += 1;
        let tol = match &self.mode {
            CheckMode::Interval(tol) => tol.clone(),
            _ => Rational::zero(),
        };
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                self.widen(l.width());
                self.widen(r.width());
                if !(l.intersects(&r) && l.width() <= tol && r.width() <= tol) {
                    self.fail(binding, l.to_string(), r.to_string());
                }
            }
            (l, r) => self.fail(binding, show(l), show(r)),
        }
    }

    /// Records a boolean property with a description of what was observed.
    pub fn holds(&mut self, binding: Binding, ok: Result<bool>, observed: impl FnOnce() -> String) {
        self.bindings += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.fail(binding, observed(), "property".into()),
            Err(e) => self.fail(binding, format!("error: {e}"), "property".into()),
        }
    }

    pub fn record_width(&mut self, width: Rational) {
        self.widen(width);
    }

    pub fn finish(self, id: &str, statement: &str, watchlist: bool) -> IdentityCheck {
        let outcome = match self.failure {
            None => Outcome::Pass,
            Some((binding, lhs, rhs)) => Outcome::Fail { binding, lhs, rhs },
        };
        IdentityCheck {
            id: id.to_string(),
            statement: statement.to_string(),
            mode: self.mode,
            outcome,
            bindings: self.bindings,
            max_width: self.max_width,
            skipped: self.skipped,
            watchlist,
        }
    }
}

fn show<T: fmt::Display>(value: Result<T>) -> String {
    match value {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}
