//! Machine-readable verification reports. The structured serialization is
//! line-delimited JSON with a fixed field order and no timing data, so two
//! runs on the same inputs produce byte-identical files; wall times appear
//! only in the rendered human summary.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Outcome of one named check. `witness` carries the payload (certificates,
/// classes, counts) as exact text, never floating point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub module: String,
    pub check: String,
    pub anchor: String,
    pub status: CheckStatus,
    pub witness: Vec<String>,
    #[serde(skip)]
    pub wall_time: Option<Duration>,
}

impl VerificationReport {
    pub fn new(module: &str, check: &str, anchor: &str, status: CheckStatus) -> Self {
        VerificationReport {
            module: module.to_string(),
            check: check.to_string(),
            anchor: anchor.to_string(),
            status,
            witness: Vec::new(),
            wall_time: None,
        }
    }

    pub fn with_witness(mut self, lines: Vec<String>) -> Self {
        self.witness = lines;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// An ordered collection of reports with deterministic rendering.
#[derive(Debug, Clone, Default)]
pub struct ReportSet {
    pub reports: Vec<VerificationReport>,
}

impl ReportSet {
    pub fn push(&mut self, r: VerificationReport) {
        self.reports.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = VerificationReport>) {
        self.reports.extend(rs);
    }

    /// Deterministic order: by module, then check name.
    pub fn sorted(&self) -> Vec<&VerificationReport> {
        let mut v: Vec<&VerificationReport> = self.reports.iter().collect();
        v.sort_by(|a, b| (&a.module, &a.check).cmp(&(&b.module, &b.check)));
        v
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.status == CheckStatus::Pass)
    }

    pub fn any_inconclusive(&self) -> bool {
        self.reports
            .iter()
            .any(|r| r.status == CheckStatus::Inconclusive)
    }

    /// Structured, byte-reproducible serialization: one JSON record per line.
    pub fn to_structured(&self) -> String {
        let mut out = String::new();
        for r in self.sorted() {
            out.push_str(&serde_json::to_string(r).expect("report serialization"));
            out.push('\n');
        }
        out
    }

    /// Human-readable summary, one line per check plus a closing tally.
    pub fn to_summary(&self) -> String {
        let mut out = String::new();
        for r in self.sorted() {
            let time = match r.wall_time {
                Some(d) => format!(" ({:.3}s)", d.as_secs_f64()),
                None => String::new(),
            };
            out.push_str(&format!(
                "[{}] {}::{} anchor={}{}\n",
                r.status, r.module, r.check, r.anchor, time
            ));
        }
        let total = self.reports.len();
        let failed: Vec<&VerificationReport> =
            self.reports.iter().filter(|r| !r.passed()).collect();
        if failed.is_empty() {
            out.push_str(&format!("all {total} checks passed\n"));
        } else {
            out.push_str(&format!("{} of {total} checks failed\n", failed.len()));
        }
        out
    }

    /// Exit status as a pure function of the status multiset.
    pub fn exit_code(&self) -> i32 {
        if self.any_inconclusive() {
            3
        } else if self.all_passed() {
            0
        } else {
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_output_is_deterministic_and_sorted() {
        let mut rs = ReportSet::default();
        rs.push(VerificationReport::new("zmod", "b", "x", CheckStatus::Pass));
        rs.push(VerificationReport::new("amod", "a", "y", CheckStatus::Pass));
        let s1 = rs.to_structured();
        let s2 = rs.to_structured();
        assert_eq!(s1, s2);
        assert!(s1.starts_with("{\"module\":\"amod\""));
    }

    #[test]
    fn exit_codes() {
        let mut rs = ReportSet::default();
        rs.push(VerificationReport::new("m", "a", "x", CheckStatus::Pass));
        assert_eq!(rs.exit_code(), 0);
        rs.push(VerificationReport::new("m", "b", "x", CheckStatus::Fail));
        assert_eq!(rs.exit_code(), 1);
        rs.push(VerificationReport::new("m", "c", "x", CheckStatus::Inconclusive));
        assert_eq!(rs.exit_code(), 3);
    }

    #[test]
    fn summary_mentions_all_passed() {
        let mut rs = ReportSet::default();
        rs.push(VerificationReport::new("m", "a", "x", CheckStatus::Pass));
        assert!(rs.to_summary().contains("all 1 checks passed"));
    }
}
