use std::fmt::Write as _;

use cisgraph::graph::encode_graph6;
use cisgraph::Graph;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

/// Outcome of one verification suite or exploration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub run: usize,
    pub passed: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Informational lines: scan totals, values computed along the way.
    pub notes: Vec<String>,
}

impl SuiteResult {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteResult { suite: suite.into(), run: 0, passed: 0, counterexamples: Vec::new(), notes: Vec::new() }
    }

    /// Records one case; `detail` is only evaluated on failure.
    pub fn check(&mut self, g: &Graph, ok: bool, detail: impl FnOnce() -> String) {
        self.run += 1;
        if ok {
            self.passed += 1;
        } else {
            self.counterexamples.push(Counterexample { graph6: encode_graph6(g), detail: detail() });
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn merge(&mut self, other: SuiteResult) {
        self.run += other.run;
        self.passed += other.passed;
        self.counterexamples.extend(other.counterexamples);
        self.notes.extend(other.notes.into_iter().map(|n| format!("{}: {n}", other.suite)));
    }

    pub fn is_pass(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite={}", self.suite);
        let _ = writeln!(out, "run={}", self.run);
        let _ = writeln!(out, "passed={}", self.passed);
        let _ = writeln!(out, "status={}", if self.is_pass() { "pass" } else { "fail" });
        for note in &self.notes {
            let _ = writeln!(out, "note={note}");
        }
        for c in &self.counterexamples {
            let _ = writeln!(out, "counterexample={} {}", c.graph6, c.detail);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("suite results serialize")
    }
}
