//! Machine-readable reports shared by the CLI and the verification suite.
//!
//! Exact scalars are carried as strings ("3/2", "1/2+1/2i"), never JSON
//! numbers, so reports round-trip losslessly. Timing is opt-in: reports
//! are byte-identical across runs unless elapsed time is requested.

use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckResult {
    /// Pass if and only if the two sides agree exactly.
    pub fn compare(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        CheckResult {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    pub fn flag(name: impl Into<String>, pass: bool) -> Self {
        CheckResult {
            name: name.into(),
            expected: "true".into(),
            actual: pass.to_string(),
            pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: Vec<CheckResult>,
    /// Structured payload (matrices, lattices, tables) attached to the
    /// report; exact scalars appear as strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: serde_json::Value) -> Self {
        Report {
            command: command.into(),
            inputs,
            results: vec![],
            payload: None,
            elapsed_ms: None,
        }
    }

    pub fn push(&mut self, r: CheckResult) {
        self.results.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = CheckResult>) {
        self.results.extend(rs);
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if self.inputs != serde_json::Value::Null {
            let _ = writeln!(out, "inputs:  {}", self.inputs);
        }
        for r in &self.results {
            let mark = if r.pass { "ok " } else { "FAIL" };
            if r.expected == "true" && (r.actual == "true" || r.actual == "false") {
                let _ = writeln!(out, "  [{mark}] {}", r.name);
            } else {
                let _ = writeln!(
                    out,
                    "  [{mark}] {}: expected {} got {}",
                    r.name, r.expected, r.actual
                );
            }
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.all_pass() { "PASS" } else { "FAIL" }
        );
        out
    }
}
