//! Check-result containers shared by the verification suites and the CLI.
//!
//! Every verification produces a flat list of [`CheckResult`]s carrying both
//! sides of the comparison as exact strings, so a mismatch is diagnosable
//! from the report alone. Reports assemble deterministically: suites sort
//! their checks by id before returning when workers run concurrently.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verified comparison: an identifier, the inputs it was run with, and
/// the two sides of the equality.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub actual: String,
    pub status: CheckStatus,
}

impl CheckResult {
    /// A check that compares an actual value against an expected one.
    pub fn compare<E: ToString, A: ToString>(
        id: impl Into<String>,
        inputs: &[(&str, String)],
        expected: E,
        actual: A,
        equal: bool,
    ) -> Self {
        CheckResult {
            id: id.into(),
            inputs: inputs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            expected: Some(expected.to_string()),
            actual: actual.to_string(),
            status: if equal {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
        }
    }

    /// A check with no independent expectation, pass/fail decided by the caller.
    pub fn assertion(
        id: impl Into<String>,
        inputs: &[(&str, String)],
        actual: impl ToString,
        ok: bool,
    ) -> Self {
        CheckResult {
            id: id.into(),
            inputs: inputs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            expected: None,
            actual: actual.to_string(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// An ordered collection of check results with an optional free-form note.
#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_note(note: impl Into<String>) -> Self {
        Self {
            checks: Vec::new(),
            note: Some(note.into()),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    /// Stable ordering by check id, independent of evaluation order.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().len();
        format!(
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}
