use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::{to_text, Rational};

/// One checked equality. Values are exact rationals in `"num/den"` text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Outcome of a cross-check suite. Mismatches are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), cases: Vec::new(), summary: Summary::default() }
    }

    pub fn check(&mut self, input: impl Into<String>, expected: &Rational, actual: &Rational) -> bool {
        let pass = expected == actual;
        self.cases.push(CaseResult {
            input: input.into(),
            expected: to_text(expected),
            actual: to_text(actual),
            pass,
        });
        self.summary.total += 1;
        if pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        pass
    }

    /// Appends another report's cases, prefixing their inputs with its suite name.
    pub fn absorb(&mut self, other: VerificationReport) {
        for case in other.cases {
            self.summary.total += 1;
            if case.pass {
                self.summary.passed += 1;
            } else {
                self.summary.failed += 1;
            }
            self.cases.push(CaseResult { input: format!("{}: {}", other.suite, case.input), ..case });
        }
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {}: {} cases, {} passed, {} failed",
            self.suite, self.summary.total, self.summary.passed, self.summary.failed
        )?;
        for c in self.failures() {
            writeln!(f, "  mismatch {}: expected {}, got {}", c.input, c.expected, c.actual)?;
        }
        Ok(())
    }
}
