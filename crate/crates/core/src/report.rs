//! Verification reports with a stable JSON schema.

use serde::{Deserialize, Serialize};

/// One named check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into(), lhs: None, rhs: None }
    }

    /// A check that passes when `failures` is empty; the detail lists up to
    /// five failures.
    pub fn from_failures<T: std::fmt::Debug>(name: impl Into<String>, total: usize, failures: &[T]) -> Self {
        let detail = if failures.is_empty() {
            format!("{total} cases")
        } else {
            let shown: Vec<String> = failures.iter().take(5).map(|f| format!("{f:?}")).collect();
            format!("{} of {} cases failed: {}", failures.len(), total, shown.join("; "))
        };
        Check::new(name, failures.is_empty(), detail)
    }

    pub fn with_sides(mut self, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        self.lhs = Some(lhs.into());
        self.rhs = Some(rhs.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// `{status, suite, q_symbolic, checks}` with checks sorted by name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub status: Status,
    pub suite: String,
    pub q_symbolic: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, q_symbolic: bool) -> Self {
        Report { status: Status::Pass, suite: suite.into(), q_symbolic, checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        if !check.passed {
            self.status = Status::Fail;
        }
        self.checks.push(check);
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn extend<I: IntoIterator<Item = Check>>(&mut self, checks: I) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_checks_and_json_round_trips() {
        let mut r = Report::new("demo", true);
        r.push(Check::new("b", true, "ok"));
        assert!(r.passed());
        r.push(Check::new("a", false, "bad").with_sides("1", "2"));
        assert!(!r.passed());
        assert_eq!(r.checks[0].name, "a");
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"status\":\"fail\""));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
