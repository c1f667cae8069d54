//! Machine-readable suite and script reports.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A bounded search gave up; never a refutation.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strands: Option<usize>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
    pub status: Status,
}

impl SuiteReport {
    /// Sorts cases by id and derives the overall status.
    pub fn new(suite: &str, mut cases: Vec<CaseReport>) -> SuiteReport {
        cases.sort_by(|a, b| a.case.cmp(&b.case));
        let status = overall(cases.iter().map(|c| c.status));
        SuiteReport { suite: suite.to_string(), cases, status }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| c.status != Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&format!("{:<5} {}", c.status.to_string(), c.case));
            if let Some(g) = c.genus {
                out.push_str(&format!(" [g={g}]"));
            }
            if let Some(n) = c.strands {
                out.push_str(&format!(" [n={n}]"));
            }
            if !c.detail.is_empty() {
                out.push_str(&format!("  {}", c.detail));
            }
            out.push('\n');
        }
        out.push_str(&format!("{}: {} ({} cases)\n", self.suite, self.status, self.cases.len()));
        out
    }
}

pub fn overall(statuses: impl Iterator<Item = Status>) -> Status {
    let mut s = Status::Pass;
    for x in statuses {
        match x {
            Status::Fail => return Status::Fail,
            Status::Inconclusive => s = Status::Inconclusive,
            Status::Pass => {}
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let r = SuiteReport::new(
            "x",
            vec![CaseReport {
                case: "b".into(),
                genus: Some(2),
                strands: None,
                status: Status::Pass,
                witness: Some("x1".into()),
                detail: String::new(),
            }],
        );
        let back: SuiteReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
