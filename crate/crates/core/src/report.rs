//! Verification reports: one entry per checked axiom instance.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Entry {
    pub check: String,
    pub indices: Vec<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn pass(&mut self, check: &str, indices: &[usize]) {
        self.entries.push(Entry {
            check: check.to_string(),
            indices: indices.to_vec(),
            pass: true,
            witness: None,
        });
    }

    pub fn fail(&mut self, check: &str, indices: &[usize], witness: impl Into<String>) {
        self.entries.push(Entry {
            check: check.to_string(),
            indices: indices.to_vec(),
            pass: false,
            witness: Some(witness.into()),
        });
    }

    /// Records `ok` as a pass or, with the lazily built witness, a failure.
    pub fn record(&mut self, check: &str, indices: &[usize], ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(check, indices);
        } else {
            self.fail(check, indices, witness());
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn is_clean(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn fail_count(&self) -> usize {
        self.failures().count()
    }

    /// True when some entry of `check` failed.
    pub fn failed(&self, check: &str) -> bool {
        self.failures().any(|e| e.check == check)
    }

    /// True when `check` was evaluated and never failed.
    pub fn passed(&self, check: &str) -> bool {
        self.entries.iter().any(|e| e.check == check) && !self.failed(check)
    }

    pub fn checks(&self) -> Vec<String> {
        let mut out: Vec<String> = self.entries.iter().map(|e| e.check.clone()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Sorts entries by (check, indices) so output is independent of evaluation order.
    pub fn canonicalize(&mut self) {
        self.entries.sort();
    }

    pub fn summary(&self) -> String {
        let total = self.entries.len();
        let fails = self.fail_count();
        if fails == 0 {
            format!("clean: {total} checks passed")
        } else {
            format!("{fails} of {total} checks failed")
        }
    }

    pub fn to_text(&self) -> String {
        let mut sorted = self.clone();
        sorted.canonicalize();
        let mut out = String::new();
        for e in &sorted.entries {
            let idx: Vec<String> = e.indices.iter().map(|i| i.to_string()).collect();
            let status = if e.pass { "pass" } else { "FAIL" };
            let _ = write!(out, "{status} {} ({})", e.check, idx.join(","));
            if let Some(w) = &e.witness {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> String {
        let mut sorted = self.clone();
        sorted.canonicalize();
        let value = serde_json::json!({
            "clean": sorted.is_clean(),
            "summary": sorted.summary(),
            "entries": sorted.entries,
        });
        serde_json::to_string_pretty(&value).expect("report serializes")
    }
}
