//! Named check results aggregated per suite.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A documented discrepancy in a published statement; never affects the exit status.
    Finding,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        status: Status,
        detail: impl Into<String>,
        witness: impl Into<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            status,
            detail: detail.into(),
            witness: witness.into(),
        });
    }

    /// Record pass/fail from a boolean.
    pub fn check(
        &mut self,
        name: impl Into<String>,
        ok: bool,
        detail: impl Into<String>,
        witness: impl Into<String>,
    ) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(name, status, detail, witness);
    }

    pub fn finding(&mut self, name: impl Into<String>, detail: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Status::Finding, detail, witness);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// True when no check failed; findings do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// One line per check: `status  suite/name  detail [witness]`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "{:<7} {}/{}: {}", c.status, self.suite, c.name, c.detail);
            if !c.witness.is_empty() {
                let _ = write!(out, " [{}]", c.witness);
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} {}: {} checks, {} failed, {} findings, {} ms",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.checks.len(),
            self.failures().count(),
            self.checks.iter().filter(|c| c.status == Status::Finding).count(),
            self.elapsed_ms
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_json() {
        let r = VerificationReport::new("k4");
        assert_eq!(r.to_json(), r#"{"suite":"k4","checks":[],"elapsed_ms":0}"#);
        assert!(r.passed());
    }

    #[test]
    fn findings_do_not_fail() {
        let mut r = VerificationReport::new("spectral");
        r.finding("display", "differs", "");
        assert!(r.passed());
        assert!(r.to_json().contains(r#""status":"finding""#));
        r.check("x", false, "boom", "w");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn round_trips_through_json() {
        let mut r = VerificationReport::new("dga");
        r.check("a", true, "ok", "1,2");
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
