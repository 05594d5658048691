//! Verification suites: named checks with timings, aggregated into a report.
//!
//! All randomness derives from [`SuiteConfig::seed`], so a report is a pure
//! function of its configuration.

mod gen;
mod paper;
mod random;

pub use gen::{random_braid, random_pure_braid, random_tile_from, Rng};
pub use paper::paper_suite;
pub use random::random_suite;

use std::time::Instant;

use serde::Serialize;

use crate::homs::CheckStatus;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Longest random braid word.
    pub max_len: usize,
    /// Largest genus for the symplectic checks.
    pub genus: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_len: 16,
            genus: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: CheckStatus,
    pub details: String,
    pub wall_ms: f64,
    /// An inconclusive required check fails the suite.
    pub required: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub overall: CheckStatus,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
            overall: CheckStatus::Pass,
        }
    }

    /// Runs `check`, timing it and recording its outcome.
    pub fn run(&mut self, name: &str, required: bool, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = check();
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        self.push(CheckRecord {
            name: name.to_string(),
            status: outcome.status,
            details: outcome.details,
            wall_ms,
            required,
        });
    }

    pub fn push(&mut self, record: CheckRecord) {
        let fails = match record.status {
            CheckStatus::Fail => true,
            CheckStatus::Inconclusive => record.required,
            CheckStatus::Pass => false,
        };
        if fails {
            self.overall = CheckStatus::Fail;
        }
        self.checks.push(record);
    }

    pub fn passed(&self) -> bool {
        self.overall == CheckStatus::Pass
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(f, "  [{:<12}] {:<34} {:>9.1} ms  {}", c.status, c.name, c.wall_ms, c.details)?;
        }
        write!(f, "overall: {}", self.overall)
    }
}

/// Result of a single check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: CheckStatus,
    pub details: String,
}

impl Outcome {
    pub fn pass(details: impl Into<String>) -> Self {
        Self {
            status: CheckStatus::Pass,
            details: details.into(),
        }
    }

    pub fn fail(details: impl Into<String>) -> Self {
        Self {
            status: CheckStatus::Fail,
            details: details.into(),
        }
    }

    pub fn inconclusive(details: impl Into<String>) -> Self {
        Self {
            status: CheckStatus::Inconclusive,
            details: details.into(),
        }
    }

    /// Pass iff `ok`.
    pub fn from_bool(ok: bool, details: impl Into<String>) -> Self {
        if ok {
            Self::pass(details)
        } else {
            Self::fail(details)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inconclusive_only_fails_when_required() {
        let mut r = VerificationReport::new("t");
        r.run("a", false, || Outcome::inconclusive("?"));
        assert!(r.passed());
        r.run("b", true, || Outcome::inconclusive("?"));
        assert!(!r.passed());
    }

    #[test]
    fn report_json_shape() {
        let mut r = VerificationReport::new("t");
        r.run("a", true, || Outcome::pass("ok"));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["suite"], "t");
        assert_eq!(v["overall"], "pass");
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0]["wall_ms"].is_number());
    }
}
