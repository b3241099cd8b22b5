//! Report structures for the verification battery.

use std::fmt;

/// Battery size: `Small` finishes within a minute on a desk machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Small,
    Full,
}

impl Scale {
    pub fn as_str(self) -> &'static str {
        match self {
            Scale::Small => "small",
            Scale::Full => "full",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "small" => Some(Scale::Small),
            "full" => Some(Scale::Full),
            _ => None,
        }
    }

    /// Case budget: `small` base counts, multiplied up for `full`.
    pub fn cases(self, small: usize, full: usize) -> usize {
        match self {
            Scale::Small => small,
            Scale::Full => full,
        }
    }
}

/// A reproducer file to emit when a suite fails.
#[derive(Debug, Clone)]
pub struct Reproducer {
    /// Suggested file name, e.g. `ncdet-repro-det-conj-duality.qmat`.
    pub file_name: String,
    /// Canonical document contents.
    pub contents: String,
}

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    pub failure: Option<String>,
    pub reproducer: Option<Reproducer>,
}

impl SuiteReport {
    pub fn pass(name: &'static str, cases: usize) -> Self {
        SuiteReport {
            name,
            cases,
            passed: true,
            failure: None,
            reproducer: None,
        }
    }

    pub fn fail(
        name: &'static str,
        cases: usize,
        message: String,
        reproducer: Option<Reproducer>,
    ) -> Self {
        SuiteReport {
            name,
            cases,
            passed: false,
            failure: Some(message),
            reproducer,
        }
    }
}

/// The whole battery run.
#[derive(Debug, Clone)]
pub struct BatteryReport {
    pub seed: u64,
    pub scale: Scale,
    pub suites: Vec<SuiteReport>,
}

impl BatteryReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.suites.iter().filter(|s| !s.passed).count()
    }
}

impl fmt::Display for BatteryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {} scale {}", self.seed, self.scale.as_str())?;
        for s in &self.suites {
            writeln!(
                f,
                "{} {} ({} cases){}",
                if s.passed { "PASS" } else { "FAIL" },
                s.name,
                s.cases,
                s.failure
                    .as_deref()
                    .map(|m| format!(": {m}"))
                    .unwrap_or_default()
            )?;
        }
        write!(
            f,
            "{}/{} suites passed",
            self.suites.len() - self.failed_count(),
            self.suites.len()
        )
    }
}
