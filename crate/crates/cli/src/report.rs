//! Suite reports and their text/JSON renderings.

use std::fmt::Write as _;

use quadric_core::Check;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub k: usize,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub exit_status: i32,
}

impl SuiteReport {
    /// Sorts checks by id and derives the counts and exit status.
    pub fn new(suite: impl Into<String>, k: usize, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let failed = checks.iter().filter(|c| !c.passed).count();
        SuiteReport {
            suite: suite.into(),
            k,
            passed: checks.len() - failed,
            failed,
            exit_status: if failed == 0 { 0 } else { 1 },
            checks,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                // Going through `Value` sorts object keys.
                let v = serde_json::to_value(self).expect("report serializes");
                let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
                s.push('\n');
                s
            }
            Format::Text => self.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {} (k={}): {} passed, {} failed", self.suite, self.k, self.passed, self.failed);
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{mark} {}  [{}]", c.id, c.anchor);
            if !c.passed {
                let _ = writeln!(s, "     residue: {}", c.residue);
            }
        }
        s
    }
}
