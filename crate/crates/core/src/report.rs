//! Structured pass/fail records produced by every verification routine.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Formula the check is about, in plain text.
    #[serde(rename = "paper_anchor")]
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, anchor: anchor.into(), witness: None }
    }

    pub fn fail(name: impl Into<String>, anchor: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            anchor: anchor.into(),
            witness: Some(witness.into()),
        }
    }

    pub fn skipped(name: impl Into<String>, anchor: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            anchor: anchor.into(),
            witness: Some(reason.into()),
        }
    }

    /// Pass or fail depending on `ok`; the witness closure only runs on failure.
    pub fn from_bool<W: FnOnce() -> String>(
        name: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        witness: W,
    ) -> Self {
        if ok {
            Check::pass(name, anchor)
        } else {
            Check::fail(name, anchor, witness())
        }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub context: BTreeMap<String, String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    pub fn with_context(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.context.insert(key.into(), value.to_string());
        self
    }

    pub fn set_context(&mut self, key: impl Into<String>, value: impl ToString) {
        self.context.insert(key.into(), value.to_string());
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn record<W: FnOnce() -> String>(
        &mut self,
        name: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        witness: W,
    ) -> bool {
        self.checks.push(Check::from_bool(name, anchor, ok, witness));
        ok
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Versioned JSON document. Everything except `elapsed_ms` is a pure
    /// function of the command and bindings.
    pub fn to_json(&self, bindings: &BTreeMap<String, String>, elapsed_ms: Option<u128>) -> serde_json::Value {
        let mut doc = serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "bindings": bindings,
            "context": self.context,
            "checks": self.checks,
            "status": if self.passed() { "pass" } else { "fail" },
        });
        if let Some(ms) = elapsed_ms {
            doc["elapsed_ms"] = serde_json::json!(ms as u64);
        }
        doc
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (k, v) in &self.context {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = writeln!(out, "[{tag}] {}  ({})", c.name, c.anchor);
            if let Some(w) = &c.witness {
                for line in w.lines() {
                    let _ = writeln!(out, "       {line}");
                }
            }
        }
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        );
        out
    }
}
