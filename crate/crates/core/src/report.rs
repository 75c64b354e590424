//! Structured verification reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Could not be decided under the configured cap.
    Abstain,
    /// Not run because a hypothesis check did not hold.
    Skipped,
    /// A hypothesis that does not hold for this instance.
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Hypothesis,
    Conclusion,
    Check,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub phase: Phase,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default)]
    pub observed: BTreeMap<String, Value>,
}

impl CheckRecord {
    fn new(name: &str, status: Status) -> Self {
        CheckRecord {
            name: name.to_string(),
            phase: Phase::Check,
            status,
            witness: None,
            note: None,
            observed: BTreeMap::new(),
        }
    }

    pub fn pass(name: &str) -> Self {
        Self::new(name, Status::Pass)
    }

    /// A failure always names a concrete witness.
    pub fn fail(name: &str, witness: impl Into<String>) -> Self {
        let mut r = Self::new(name, Status::Fail);
        r.witness = Some(witness.into());
        r
    }

    /// An abstention always explains which cap was hit.
    pub fn abstain(name: &str, cap_note: impl Into<String>) -> Self {
        let mut r = Self::new(name, Status::Abstain);
        r.note = Some(cap_note.into());
        r
    }

    pub fn skipped(name: &str, reason: impl Into<String>) -> Self {
        let mut r = Self::new(name, Status::Skipped);
        r.note = Some(reason.into());
        r
    }

    pub fn not_applicable(name: &str, witness: impl Into<String>) -> Self {
        let mut r = Self::new(name, Status::NotApplicable);
        r.witness = Some(witness.into());
        r
    }

    /// `pass` when `ok`, otherwise `fail` with the lazily built witness.
    pub fn from_bool(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    pub fn phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.observed.insert(key.to_string(), value.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub kind: String,
    #[serde(default)]
    pub instance: String,
    #[serde(default)]
    pub config: Value,
    pub checks: Vec<CheckRecord>,
    /// Wall time of the run. Kept out of the serialized form so that reports
    /// are a pure function of their configuration.
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl ScenarioReport {
    pub fn new(kind: &str, instance: &str) -> Self {
        ScenarioReport {
            kind: kind.to_string(),
            instance: instance.to_string(),
            config: Value::Null,
            checks: Vec::new(),
            elapsed: None,
        }
    }

    pub fn push(&mut self, check: CheckRecord) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: ScenarioReport) {
        self.checks.extend(other.checks);
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    /// Overall status: fail dominates, then abstain, otherwise pass.
    pub fn status(&self) -> Status {
        if self.any_fail() {
            Status::Fail
        } else if self.count(Status::Abstain) > 0 {
            Status::Abstain
        } else {
            Status::Pass
        }
    }
}

/// An ordered collection of scenario reports.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub scenarios: Vec<ScenarioReport>,
}

impl BatchReport {
    pub fn status(&self) -> Status {
        let statuses: Vec<Status> = self.scenarios.iter().map(|s| s.status()).collect();
        if statuses.contains(&Status::Fail) {
            Status::Fail
        } else if statuses.contains(&Status::Abstain) {
            Status::Abstain
        } else {
            Status::Pass
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other:?} (expected json or text)")),
        }
    }
}

/// Stable serialization. JSON output has sorted keys at every level.
pub fn emit_report(batch: &BatchReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let value = serde_json::to_value(batch).expect("reports serialize");
            let mut s = serde_json::to_string_pretty(&sort_keys(value)).expect("values serialize");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => emit_text(batch).into_bytes(),
    }
}

fn sort_keys(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let sorted: BTreeMap<String, Value> =
                map.into_iter().map(|(k, v)| (k, sort_keys(v))).collect();
            Value::Object(sorted.into_iter().collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sort_keys).collect()),
        other => other,
    }
}

fn status_tag(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Abstain => "ABSTAIN",
        Status::Skipped => "SKIP",
        Status::NotApplicable => "N/A",
    }
}

fn emit_text(batch: &BatchReport) -> String {
    let mut out = String::new();
    for s in &batch.scenarios {
        let _ = writeln!(
            out,
            "== {} [{}] {}",
            s.kind,
            s.instance,
            status_tag(s.status())
        );
        for c in &s.checks {
            let _ = write!(out, "  [{}] {}", status_tag(c.status), c.name);
            for (k, v) in &c.observed {
                let _ = write!(out, " {k}={v}");
            }
            if let Some(w) = &c.witness {
                let _ = write!(out, " witness: {w}");
            }
            if let Some(n) = &c.note {
                let _ = write!(out, " ({n})");
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_batch_has_skeleton() {
        let out = String::from_utf8(emit_report(&BatchReport::default(), Format::Json)).unwrap();
        assert_eq!(out, "{\n  \"scenarios\": []\n}\n");
    }

    #[test]
    fn json_is_deterministic_and_sorted() {
        let mut r = ScenarioReport::new("demo", "x");
        r.push(CheckRecord::pass("a").with("zeta", 1).with("alpha", 2));
        r.push(CheckRecord::fail("b", "element 3"));
        r.elapsed = Some(Duration::from_millis(7));
        let batch = BatchReport {
            scenarios: vec![r.clone()],
        };
        let mut r2 = r;
        r2.elapsed = Some(Duration::from_millis(99));
        let batch2 = BatchReport {
            scenarios: vec![r2],
        };
        let a = emit_report(&batch, Format::Json);
        assert_eq!(a, emit_report(&batch2, Format::Json));
        let s = String::from_utf8(a).unwrap();
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert_eq!(batch.status(), Status::Fail);
    }
}
