use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// One computed quantity, compared with an expectation when there is one.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub quantity: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(
        quantity: impl Into<String>,
        computed: impl Serialize,
        expected: impl Serialize,
        pass: bool,
    ) -> Check {
        Check {
            quantity: quantity.into(),
            computed: to_value(computed),
            expected: to_value(expected),
            pass,
        }
    }

    /// A boolean property that must hold.
    pub fn holds(quantity: impl Into<String>, value: bool) -> Check {
        Check::new(quantity, value, true, value)
    }
}

pub(crate) fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// No expectations were given; the value is reported as computed.
    Computed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    /// Compared as ideals or submodules, or as exact integers.
    Exact,
    /// Compared through Hilbert series, annihilators and generator counts.
    InvariantLevel,
}

#[derive(Clone, Debug, Serialize)]
pub struct TaskOutcome {
    pub index: usize,
    pub op: String,
    pub label: String,
    pub status: Status,
    pub evidence: Evidence,
    pub checks: Vec<Check>,
    pub computed: Value,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl TaskOutcome {
    pub fn new(
        op: &str,
        label: String,
        evidence: Evidence,
        checks: Vec<Check>,
        computed: Value,
    ) -> TaskOutcome {
        let status = if checks.is_empty() {
            Status::Computed
        } else if checks.iter().all(|c| c.pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        TaskOutcome {
            index: 0,
            op: op.to_string(),
            label,
            status,
            evidence,
            checks,
            computed,
            warnings: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn with_warnings(mut self, warnings: Vec<String>) -> TaskOutcome {
        self.warnings = warnings;
        self
    }
}

/// Settings every report states up front.
#[derive(Clone, Debug, Serialize)]
pub struct Defaults {
    pub degree_cap: u32,
    /// `default`, `env` or `flag`.
    pub degree_cap_source: String,
    /// Homological window used when a task does not give one.
    pub window: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub ring: String,
    pub defaults: Defaults,
    pub tasks: Vec<TaskOutcome>,
    pub passed: usize,
    pub failed: usize,
    pub computed_only: usize,
}

impl Report {
    pub fn new(
        scenario: String,
        ring: String,
        defaults: Defaults,
        mut tasks: Vec<TaskOutcome>,
    ) -> Report {
        for (i, t) in tasks.iter_mut().enumerate() {
            t.index = i;
        }
        let count = |s| tasks.iter().filter(|t| t.status == s).count();
        let (passed, failed, computed_only) = (
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Computed),
        );
        Report {
            scenario,
            ring,
            defaults,
            tasks,
            passed,
            failed,
            computed_only,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario: {}", self.scenario);
        if !self.ring.is_empty() {
            let _ = writeln!(out, "ring:     {}", self.ring);
        }
        let _ = writeln!(
            out,
            "degree cap {} ({}), window {}",
            self.defaults.degree_cap, self.defaults.degree_cap_source, self.defaults.window
        );
        let width = self.tasks.iter().map(|t| t.label.len()).max().unwrap_or(0);
        for t in &self.tasks {
            let status = match t.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Computed => "----",
            };
            let timing = t
                .timing_ms
                .map(|ms| format!("  {ms:.1} ms"))
                .unwrap_or_default();
            let _ = writeln!(out, "  [{status}] {:<width$}  {}{timing}", t.label, t.op);
            for c in &t.checks {
                let mark = if c.pass { "ok" } else { "MISMATCH" };
                let _ = writeln!(
                    out,
                    "         {:<8} {} = {} (expected {})",
                    mark,
                    c.quantity,
                    compact(&c.computed),
                    compact(&c.expected)
                );
            }
            for w in &t.warnings {
                let _ = writeln!(out, "         warning: {w}");
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} computed without expectations",
            self.passed, self.failed, self.computed_only
        );
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
