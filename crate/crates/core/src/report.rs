//! Structured pass/fail reporting shared by every checker.

use std::fmt;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub label: String,
    pub passed: bool,
    /// Extra context: first failing order, derived constant, failing triples.
    pub details: Option<String>,
}

impl CheckResult {
    pub fn pass(label: impl Into<String>) -> Self {
        CheckResult {
            label: label.into(),
            passed: true,
            details: None,
        }
    }

    pub fn fail(label: impl Into<String>, details: impl Into<String>) -> Self {
        CheckResult {
            label: label.into(),
            passed: false,
            details: Some(details.into()),
        }
    }

    pub fn with_details(mut self, details: impl Into<String>) -> Self {
        self.details = Some(details.into());
        self
    }
}

/// Pass/fail-per-axiom output of a checker.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub checks: Vec<CheckResult>,
    /// Constants fixed by computation rather than transcription
    /// (dressing sign, semiclassical coefficient, ...).
    pub derived: Vec<(String, String)>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            checks: Vec::new(),
            derived: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn check(&mut self, label: impl Into<String>, ok: bool, details: impl Into<String>) {
        if ok {
            self.checks.push(CheckResult::pass(label));
        } else {
            self.checks.push(CheckResult::fail(label, details));
        }
    }

    pub fn record(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.derived.push((key.into(), value.into()));
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.checks.push(CheckResult {
                label: format!("{}/{}", other.name, c.label),
                ..c
            });
        }
        for (k, v) in other.derived {
            self.derived.push((format!("{}/{}", other.name, k), v));
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {}",
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.name
        )?;
        for c in &self.checks {
            match &c.details {
                Some(d) => writeln!(
                    f,
                    "  {} {} ({d})",
                    if c.passed { "ok  " } else { "FAIL" },
                    c.label
                )?,
                None => writeln!(
                    f,
                    "  {} {}",
                    if c.passed { "ok  " } else { "FAIL" },
                    c.label
                )?,
            }
        }
        for (k, v) in &self.derived {
            writeln!(f, "  derived {k} = {v}")?;
        }
        Ok(())
    }
}
