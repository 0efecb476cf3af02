//! Machine-readable verification reports shared by the deck, basis and
//! induced-representation checks.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub suite: String,
    pub subject: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Observations that do not affect `passed`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>, subject: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            subject: subject.into(),
            passed: true,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records a boolean check.
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.push(Check {
            name: name.into(),
            passed,
            measured: None,
            tolerance: None,
            detail: detail.into(),
        });
    }

    /// Records a measured error that passes when `measured < tolerance`.
    pub fn within(&mut self, name: impl Into<String>, measured: f64, tolerance: f64) {
        self.push(Check {
            name: name.into(),
            passed: measured < tolerance,
            measured: Some(measured),
            tolerance: Some(tolerance),
            detail: String::new(),
        });
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Appends the checks and notes of `other`.
    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.subject
        )?;
        for c in &self.checks {
            write!(f, "  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name)?;
            if let (Some(m), Some(t)) = (c.measured, c.tolerance) {
                write!(f, " (err {m:.3e} < {t:.1e})")?;
            }
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note {n}")?;
        }
        Ok(())
    }
}
