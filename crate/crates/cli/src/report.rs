//! Verification cases and the JSON report.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Provenance {
    /// Immediate from the definitions.
    Trivial,
    /// Produced by an independent oracle named alongside.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expected {
    pub value: Value,
    pub provenance: Provenance,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationCase {
    pub suite: String,
    pub input: String,
    pub expected: Expected,
    pub actual: Value,
    pub pass: bool,
    /// Supporting data that is reported but not compared.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub suites: BTreeMap<String, SuiteSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub schema_version: u32,
    pub config_echo: RunConfig,
    pub cases: Vec<VerificationCase>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: RunConfig, cases: Vec<VerificationCase>) -> Self {
        let mut suites: BTreeMap<String, SuiteSummary> = BTreeMap::new();
        for c in &cases {
            let s = suites.entry(c.suite.clone()).or_default();
            if c.pass {
                s.passed += 1;
            } else {
                s.failed += 1;
            }
        }
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
            suites,
        };
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            schema_version: SCHEMA_VERSION,
            config_echo: config,
            cases,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// One line per case, then per-suite totals.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self
            .cases
            .iter()
            .map(|c| c.input.len())
            .max()
            .unwrap_or(5)
            .max(5);
        out.push_str(&format!(
            "{:<5} {:<width$}  {:<24} {:<24} result\n",
            "suite", "input", "expected", "actual"
        ));
        for c in &self.cases {
            out.push_str(&format!(
                "{:<5} {:<width$}  {:<24} {:<24} {}\n",
                c.suite,
                c.input,
                compact(&c.expected.value),
                compact(&c.actual),
                if c.pass { "pass" } else { "FAIL" }
            ));
        }
        for (name, s) in &self.summary.suites {
            out.push_str(&format!(
                "{name}: {} passed, {} failed\n",
                s.passed, s.failed
            ));
        }
        out.push_str(&format!(
            "total: {} passed, {} failed\n",
            self.summary.passed, self.summary.failed
        ));
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
