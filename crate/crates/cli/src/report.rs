//! Reports: canonical JSON plus a markdown rendering derived from it.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value as Json;

use hopfcyc::{Check, ValidationReport, Verdict};

#[derive(Clone, Debug, Serialize)]
pub struct Stage {
    pub name: String,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Json>,
    /// Wall time, only with `--timings` since it breaks byte-identical output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

impl Stage {
    pub fn new(name: impl Into<String>) -> Self {
        Stage { name: name.into(), verdict: Verdict::Pass, checks: Vec::new(), values: BTreeMap::new(), millis: None }
    }

    pub fn with_report(mut self, r: ValidationReport) -> Self {
        self.add_report(r);
        self
    }

    pub fn add_report(&mut self, r: ValidationReport) {
        for c in r.checks {
            self.push(c);
        }
    }

    pub fn push(&mut self, c: Check) {
        if c.verdict == Verdict::Fail {
            self.verdict = Verdict::Fail;
        }
        self.checks.push(c);
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.to_string(), serde_json::to_value(v).expect("report values serialize"));
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub verdict: Verdict,
    pub stages: Vec<Stage>,
}

impl Report {
    pub fn new(command: impl Into<String>, subject: impl Into<String>) -> Self {
        Report { command: command.into(), subject: subject.into(), verdict: Verdict::Pass, stages: Vec::new() }
    }

    pub fn push(&mut self, s: Stage) {
        if !s.passed() {
            self.verdict = Verdict::Fail;
        }
        self.stages.push(s);
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} {}: {}\n", self.command, self.subject, verdict(self.verdict));
        for s in &self.stages {
            let _ = writeln!(out, "## {} ({})\n", s.name, verdict(s.verdict));
            if let Some(ms) = s.millis {
                let _ = writeln!(out, "time: {ms} ms\n");
            }
            if !s.values.is_empty() {
                for (k, v) in &s.values {
                    let _ = writeln!(out, "- {k}: `{v}`");
                }
                out.push('\n');
            }
            if !s.checks.is_empty() {
                out.push_str("| check | verdict | detail |\n|---|---|---|\n");
                for c in &s.checks {
                    let _ = writeln!(out, "| {} | {} | {} |", escape(&c.name), verdict(c.verdict), escape(&detail(c)));
                }
                out.push('\n');
            }
        }
        out
    }
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::Unchecked => "unchecked",
    }
}

fn detail(c: &Check) -> String {
    let mut parts = Vec::new();
    if let Some(v) = &c.value {
        parts.push(format!("value {v}"));
    }
    if let Some(w) = &c.witness {
        parts.push(format!("at {:?}: {} vs {}", w.indices, w.lhs, w.rhs));
    }
    if let Some(n) = &c.note {
        parts.push(n.clone());
    }
    parts.join("; ")
}

fn escape(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}
