use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::report::{Status, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputRecord {
    pub role: String,
    /// File path, or `builtin:NAME`.
    pub source: String,
    pub sha256: String,
}

impl InputRecord {
    pub fn new(role: &str, source: impl Into<String>, content: &[u8]) -> Self {
        Self { role: role.into(), source: source.into(), sha256: hex::encode(Sha256::digest(content)) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// `results` holds only deterministic data; the wall-clock duration sits
/// beside it.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputRecord>,
    pub results: Results,
    pub warnings: Vec<String>,
    pub duration_ms: u64,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Results {
    pub checks: Vec<CheckResult>,
    pub values: Map<String, Value>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            inputs: Vec::new(),
            results: Results::default(),
            warnings: Vec::new(),
            duration_ms: 0,
        }
    }

    pub fn check(&mut self, name: &str, verdict: Verdict) -> &mut Self {
        self.results.checks.push(CheckResult { name: name.into(), verdict });
        self
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.results.values.insert(key.into(), serde_json::to_value(v).expect("serializable value"));
        self
    }

    pub fn warn(&mut self, w: impl Into<String>) -> &mut Self {
        self.warnings.push(w.into());
        self
    }

    pub fn set_duration(&mut self, d: Duration) {
        self.duration_ms = u64::try_from(d.as_millis()).unwrap_or(u64::MAX);
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.results.checks.iter().find(|c| c.name == name).map(|c| &c.verdict)
    }

    /// Every verdict other than "assumed" passed.
    pub fn passed(&self) -> bool {
        self.results.checks.iter().all(|c| matches!(c.verdict.status, Status::Pass | Status::Assumed))
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Text rendering of a report's JSON form.
pub fn render_human(report: &Value) -> String {
    let mut out = String::new();
    let s = |v: &Value| v.as_str().unwrap_or_default().to_string();
    let _ = writeln!(out, "{}", s(&report["command"]));
    for i in report["inputs"].as_array().into_iter().flatten() {
        let hash = s(&i["sha256"]);
        let _ = writeln!(out, "  {:<9} {} ({})", s(&i["role"]), s(&i["source"]), &hash[..hash.len().min(12)]);
    }
    for c in report["results"]["checks"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "  [{:<7}] {}: {}", s(&c["status"]), s(&c["name"]), s(&c["reason"]));
    }
    if let Some(values) = report["results"]["values"].as_object() {
        for (k, v) in values {
            let text = v.to_string();
            if text.chars().count() > 100 {
                let _ = writeln!(out, "  {k}: {}...", text.chars().take(97).collect::<String>());
            } else {
                let _ = writeln!(out, "  {k}: {text}");
            }
        }
    }
    for w in report["warnings"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "  warning: {}", s(w));
    }
    let _ = writeln!(out, "  ({} ms)", report["duration_ms"]);
    out
}
