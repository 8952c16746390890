// SPDX-License-Identifier: Apache-2.0

//! The run report every command produces, in JSON and human-readable form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use whapar::report::Witness;
use whapar::{Check, Rational, Report, Status};

use crate::spec::sha256_hex;

/// Overall outcome of a run; each maps to one exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RunStatus {
    Pass,
    Skipped,
    Fail,
    InputError,
    NotStabilized,
}

impl RunStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            RunStatus::Pass | RunStatus::Skipped => 0,
            RunStatus::Fail => 1,
            RunStatus::InputError => 2,
            RunStatus::NotStabilized => 3,
        }
    }

    fn word(self) -> &'static str {
        match self {
            RunStatus::Pass => "pass",
            RunStatus::Skipped => "skipped",
            RunStatus::Fail => "fail",
            RunStatus::InputError => "input error",
            RunStatus::NotStabilized => "not stabilized",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub summary: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<String>,
    pub seed: u64,
    pub exhaustive: bool,
    pub max_degree: usize,
    pub status: RunStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub facts: BTreeMap<String, Value>,
    pub sections: Vec<Section>,
    /// Wall-clock time; the only field that may differ between runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str, input: &str, seed: u64, exhaustive: bool, max_degree: usize) -> Self {
        RunReport {
            tool: "whapar".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input: input.into(),
            input_sha256: None,
            seed,
            exhaustive,
            max_degree,
            status: RunStatus::Pass,
            message: None,
            facts: BTreeMap::new(),
            sections: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn fact(&mut self, key: &str, value: impl Into<Value>) {
        self.facts.insert(key.to_string(), value.into());
    }

    pub fn section(&mut self, name: &str, report: Report) {
        self.sections.push(Section { name: name.into(), summary: report.summary(), checks: report.checks });
    }

    /// A section holding a single check.
    pub fn single(&mut self, name: &str, check: Check) {
        let mut r = Report::new();
        r.push(check);
        self.section(name, r);
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = (&str, &Check)> {
        self.sections.iter().flat_map(|s| s.checks.iter().filter(|c| c.failed()).map(move |c| (s.name.as_str(), c)))
    }

    /// Sets the status from the checks unless a terminal status was
    /// already recorded.
    pub fn finish(&mut self) {
        if self.status == RunStatus::Pass && self.failed_checks().next().is_some() {
            self.status = RunStatus::Fail;
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// The report without its timing, pretty-printed. Identical inputs and
    /// flags give identical bytes.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = None;
        serde_json::to_string_pretty(&copy).expect("reports serialize") + "\n"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// SHA-256 of [`RunReport::canonical_json`].
    pub fn digest(&self) -> String {
        sha256_hex(self.canonical_json().as_bytes())
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        if let Some(m) = &self.message {
            let _ = writeln!(out, "{m}");
        }
        let _ = writeln!(out, "whapar {} {}", self.command, self.input);
        if let Some(d) = &self.input_sha256 {
            let _ = writeln!(out, "  input sha256 {d}");
        }
        if !self.facts.is_empty() {
            let facts: Vec<String> = self.facts.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
            let _ = writeln!(out, "  {}", facts.join(" "));
        }
        for s in &self.sections {
            let _ = writeln!(out, "  {}: {}", s.name, s.summary);
            for c in &s.checks {
                match &c.status {
                    Status::Pass => {}
                    Status::Fail => {
                        let _ = write!(out, "    FAIL {}.{} ({} of {} cases)", s.name, c.id, c.failures, c.cases);
                        if let Some(w) = &c.witness {
                            let _ = write!(out, " witness {}", witness(w));
                        }
                        if let Some(n) = &c.note {
                            let _ = write!(out, ": {n}");
                        }
                        out.push('\n');
                    }
                    Status::Skipped { reason } => {
                        let _ = writeln!(out, "    SKIP {}.{}: {reason}", s.name, c.id);
                    }
                }
            }
        }
        let _ = writeln!(out, "status: {}", self.status.word());
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn witness(w: &Witness) -> String {
    format!("indices={:?} lhs={} rhs={}", w.indices, vector(&w.lhs), vector(&w.rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn timing_is_excluded_from_the_digest() {
        let mut a = RunReport::new("check", "x.json", 1, false, 6);
        a.single("s", Check::pass("c", 3));
        let mut b = a.clone();
        a.elapsed_ms = Some(5);
        b.elapsed_ms = Some(700);
        assert_eq!(a.digest(), b.digest());
        assert_ne!(a.to_json(), b.to_json());
    }

    #[test]
    fn a_failed_check_fails_the_run() {
        let mut r = RunReport::new("check", "x.json", 1, false, 6);
        r.single("s", Check::fail("c", "boom"));
        r.finish();
        assert_eq!((r.status, r.exit_code()), (RunStatus::Fail, 1));
        assert!(r.to_human().contains("FAIL s.c"));
    }

    #[test]
    fn terminal_statuses_are_kept() {
        let mut r = RunReport::new("hpar", "x.json", 1, false, 6);
        r.status = RunStatus::NotStabilized;
        r.finish();
        assert_eq!(r.exit_code(), 3);
    }
}
