//! Structured run reports and their text rendering.

use std::fmt::Write as _;

use serde::Serialize;
use taukit_core::check::CheckRecord;

use crate::params::Params;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub left: String,
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl From<CheckRecord> for CheckReport {
    fn from(r: CheckRecord) -> Self {
        Self {
            name: r.name,
            status: if r.passed { Status::Pass } else { Status::Fail },
            left: r.left,
            right: r.right,
            witness: r.witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: Params,
    pub checks: Vec<CheckReport>,
    /// Wall-clock time in microseconds.
    pub elapsed: u64,
    pub version: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "suite {} (taukit {})", self.suite, self.version);
        let _ = writeln!(out, "params {}", params.join(" "));
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(out, "{tag} {}", c.name);
            if c.status == Status::Fail {
                let _ = writeln!(out, "  left:  {}", c.left);
                let _ = writeln!(out, "  right: {}", c.right);
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "  witness: {w}");
            }
        }
        let total = self.checks.len();
        let micros = self.elapsed;
        let _ = writeln!(
            out,
            "{}/{total} checks passed in {}.{:03} ms",
            total - self.failures(),
            micros / 1000,
            micros % 1000
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(passed: bool) -> Report {
        Report {
            suite: "demo".into(),
            params: Params::default(),
            checks: vec![CheckRecord::boolean("c", passed, "a", "b").into()],
            elapsed: 1500,
            version: "0".into(),
        }
    }

    #[test]
    fn status_and_rendering() {
        assert!(report(true).passed());
        let failing = report(false);
        assert!(!failing.passed());
        assert!(failing.to_text().contains("FAIL c\n  left:  a\n  right: b"));
        assert!(failing.to_text().contains("0/1 checks passed in 1.500 ms"));
        let json: serde_json::Value = serde_json::from_str(&failing.to_json()).unwrap();
        assert_eq!(json["checks"][0]["status"], "fail");
        assert!(json["checks"][0].get("witness").is_none());
    }
}
