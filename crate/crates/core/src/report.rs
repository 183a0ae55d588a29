use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// One failed check. `case` is enough to replay it, usually as a
/// function spec or an ideal pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub battery: String,
    pub cases_run: u64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    /// Wall time; left out of JSON so equal inputs give equal bytes.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(battery: impl Into<String>) -> Self {
        Self {
            battery: battery.into(),
            cases_run: 0,
            violations: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(
        &mut self,
        case: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        self.violations.push(Violation {
            case: case.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    /// Runs `check` over every case in parallel. Violations keep the order
    /// of `cases`, so the report does not depend on scheduling.
    pub fn run<C, F>(battery: impl Into<String>, cases: &[C], check: F) -> Self
    where
        C: Sync,
        F: Fn(&C) -> Vec<Violation> + Sync,
    {
        let started = Instant::now();
        let mut report = Self::new(battery);
        let found: Vec<Vec<Violation>> = cases.par_iter().map(&check).collect();
        report.cases_run = cases.len() as u64;
        report.violations = found.into_iter().flatten().collect();
        report.elapsed = started.elapsed();
        report
    }

    /// Folds another report's cases, violations and notes into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.cases_run += other.cases_run;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
        self.elapsed += other.elapsed;
    }
}

/// Builds a one-element violation list when `expected != actual`.
pub fn expect_eq<T: PartialEq + fmt::Display>(
    case: impl FnOnce() -> String,
    expected: T,
    actual: T,
) -> Vec<Violation> {
    if expected == actual {
        Vec::new()
    } else {
        vec![Violation {
            case: case(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }]
    }
}
