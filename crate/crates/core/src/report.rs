//! Pass/fail reports shared by every checker.

use std::fmt;

use crate::exactmath::vector::Vector;

/// A single failed instance of a checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Which identity failed, e.g. `"antisymmetry"` or `"leibniz"`.
    pub kind: String,
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    /// Left side minus right side, flattened.
    pub residual: Vector,
}

/// Outcome of a checker: the first violation in lexicographic order and the
/// total number of violations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub violations: usize,
    pub first: Option<Violation>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            violations: 0,
            first: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// Counts a violation; the witness is only built for the first one.
    pub fn record(&mut self, witness: impl FnOnce() -> Violation) {
        if self.first.is_none() {
            self.first = Some(witness());
        }
        self.violations += 1;
    }

    /// Folds another report into this one, keeping this report's first witness.
    pub fn absorb(&mut self, other: CheckReport) {
        if self.first.is_none() {
            self.first = other.first;
        }
        self.violations += other.violations;
    }

    /// Label tuple of the first violation, if any.
    pub fn first_labels(&self) -> Option<Vec<&str>> {
        self.first
            .as_ref()
            .map(|v| v.labels.iter().map(String::as_str).collect())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first {
            None => write!(f, "{}: pass", self.check),
            Some(v) => write!(
                f,
                "{}: FAIL ({} violation{}), first {} at ({})",
                self.check,
                self.violations,
                if self.violations == 1 { "" } else { "s" },
                v.kind,
                v.labels.join(", ")
            ),
        }
    }
}
