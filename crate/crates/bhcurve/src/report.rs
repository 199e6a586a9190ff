//! Structured pass/fail reports shared by the `bh` subcommands.
//!
//! A [`Report`] is a command name, an echo of the parameters, an ordered
//! list of named checks, and a map of artifacts (matrices, node lists,
//! and similar payloads). It serializes to JSON as
//! `{command, params, checks: [{name, status, details}], artifacts}` and
//! renders to plain text with one line per check. All containers are
//! ordered, so identical runs produce byte-identical output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub artifacts: BTreeMap<String, serde_json::Value>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            artifacts: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn check(&mut self, name: &str, passed: bool, details: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: if passed { Status::Pass } else { Status::Fail },
            details: details.into(),
        });
    }

    pub fn artifact(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("artifact must be serializable");
        self.artifacts.insert(key.to_string(), v);
    }

    /// Overall status: the conjunction of all check statuses.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// 0 when every check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("bh {}\n", self.command));
        for (k, v) in &self.params {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            if c.details.is_empty() {
                out.push_str(&format!("[{tag}] {}\n", c.name));
            } else {
                out.push_str(&format!("[{tag}] {}: {}\n", c.name, c.details));
            }
        }
        for (k, v) in &self.artifacts {
            out.push_str(&format!("{k}:\n"));
            out.push_str(&render_value(v, 2));
        }
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let noun = if self.checks.len() == 1 { "check" } else { "checks" };
        if failed == 0 {
            out.push_str(&format!("status: ok ({} {noun})\n", self.checks.len()));
        } else {
            out.push_str(&format!(
                "status: FAILED ({failed} of {} {noun})\n",
                self.checks.len()
            ));
        }
        out
    }
}

/// Plain-text rendering of an artifact. Matrices (arrays of arrays of
/// numbers) become aligned tables with one row per line; arrays of
/// scalars become one entry per line; everything else falls back to
/// compact JSON.
fn render_value(v: &serde_json::Value, indent: usize) -> String {
    let pad = " ".repeat(indent);
    match v {
        serde_json::Value::Array(rows)
            if !rows.is_empty() && rows.iter().all(is_number_row) =>
        {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    r.as_array()
                        .unwrap()
                        .iter()
                        .map(|x| x.to_string())
                        .collect()
                })
                .collect();
            let cols = table.iter().map(Vec::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..cols)
                .map(|j| table.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for row in &table {
                out.push_str(&pad);
                let cells: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(j, cell)| format!("{cell:>w$}", w = widths[j]))
                    .collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
            out
        }
        serde_json::Value::Array(items) => {
            let mut out = String::new();
            for item in items {
                match item {
                    serde_json::Value::String(s) => out.push_str(&format!("{pad}{s}\n")),
                    other => out.push_str(&format!("{pad}{other}\n")),
                }
            }
            out
        }
        serde_json::Value::String(s) => format!("{pad}{s}\n"),
        other => format!("{pad}{other}\n"),
    }
}

fn is_number_row(v: &serde_json::Value) -> bool {
    v.as_array()
        .map(|r| !r.is_empty() && r.iter().all(serde_json::Value::is_number))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("k3");
        r.param("q", 3);
        r.param("d", 4);
        r.check("determinant", true, "det = -9");
        r.check("inertia", true, "(1, 21, 0)");
        r.artifact("gram", vec![vec![-2i64, 1], vec![1, -2]]);
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let parsed = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(parsed, r);
    }

    #[test]
    fn exit_codes_follow_check_statuses() {
        let mut r = sample();
        assert!(r.passed());
        assert_eq!(r.exit_code(), 0);
        r.check("mutated", false, "identity broken");
        assert!(!r.passed());
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn text_rendering_is_stable() {
        let text = sample().to_text();
        let expect = "bh k3\n  d = 4\n  q = 3\n[pass] determinant: det = -9\n[pass] inertia: (1, 21, 0)\ngram:\n  -2  1\n   1 -2\nstatus: ok (2 checks)\n";
        assert_eq!(text, expect);
    }

    #[test]
    fn failures_render_loudly() {
        let mut r = Report::new("curve");
        r.check("defining-form-vanishes", false, "nonzero remainder");
        let text = r.to_text();
        assert!(text.contains("[FAIL] defining-form-vanishes"));
        assert!(text.contains("status: FAILED (1 of 1 check)"));
    }

    #[test]
    fn deterministic_output() {
        let a = sample();
        let b = sample();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(), b.to_text());
    }
}
