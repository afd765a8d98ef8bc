//! Check results and deterministic report serialization.
//!
//! Reports must be byte-identical across runs with the same configuration,
//! so JSON emission goes through a canonical printer: object keys sorted,
//! floats in fixed scientific notation with 17 significant digits, no
//! whitespace variation, no timestamps.

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

/// Outcome of one named check: the largest residual seen across its trials,
/// an optional witness (the full input tuple attaining that residual, kept
/// replayable on its own), and the verdict.
///
/// For identity checks, `pass` means `max_abs <= tolerance` (tolerance 0 in
/// exact mode). A few checks judge something else — a recorded measurement,
/// a sufficiency contract, the existence of a counterexample — and say so
/// in `note`.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub name: String,
    pub trials: u64,
    pub max_abs: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl ResidualReport {
    /// Judge a residual against a tolerance.
    pub fn judged(name: impl Into<String>, max_abs: f64, trials: u64, tol: f64) -> Self {
        let max_abs = sanitize(max_abs);
        ResidualReport {
            name: name.into(),
            trials,
            max_abs,
            pass: max_abs <= tol,
            note: None,
            witness: None,
        }
    }

    /// A recorded quantity that no tolerance applies to.
    pub fn measured(name: impl Into<String>, max_abs: f64, trials: u64, note: impl Into<String>) -> Self {
        ResidualReport {
            name: name.into(),
            trials,
            max_abs: sanitize(max_abs),
            pass: true,
            note: Some(note.into()),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Option<Value>) -> Self {
        self.witness = witness;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

fn sanitize(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        f64::MAX
    }
}

/// Tracks the running maximum of a residual across trials together with the
/// witness that attained it (first trial wins ties, which keeps reports
/// deterministic under any evaluation order).
#[derive(Debug, Clone)]
pub struct MaxTracker {
    pub max_abs: f64,
    pub trials: u64,
    pub witness: Option<Value>,
}

impl MaxTracker {
    pub fn new() -> Self {
        MaxTracker {
            max_abs: 0.0,
            trials: 0,
            witness: None,
        }
    }

    /// Record one trial; `witness` is built lazily, only when this trial
    /// strictly improves the maximum (or is the very first).
    pub fn record(&mut self, residual: f64, witness: impl FnOnce() -> Value) {
        let residual = sanitize(residual);
        if self.trials == 0 || residual > self.max_abs {
            self.max_abs = residual;
            self.witness = Some(witness());
        }
        self.trials += 1;
    }

    /// Turn the tracked maximum into a judged report. The witness is kept
    /// only when the check fails (or `keep_witness` forces it).
    pub fn judged(&self, name: impl Into<String>, tol: f64, keep_witness: bool) -> ResidualReport {
        let pass = self.max_abs <= tol;
        let mut r = ResidualReport::judged(name, self.max_abs, self.trials, tol);
        r.pass = pass;
        if !pass || keep_witness {
            r.witness = self.witness.clone();
        }
        r
    }
}

impl Default for MaxTracker {
    fn default() -> Self {
        Self::new()
    }
}

/// A full verification run: the echoed configuration and every check.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub tool: String,
    pub config: Value,
    pub checks: Vec<ResidualReport>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(config: Value, checks: Vec<ResidualReport>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        VerificationReport {
            tool: "nambu3".into(),
            config,
            checks,
            pass,
        }
    }

    pub fn check(&self, name: &str) -> Option<&ResidualReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Canonical JSON: sorted keys, fixed float formatting, byte-stable.
    pub fn to_canonical_json(&self) -> Result<String> {
        let v = serde_json::to_value(self)
            .map_err(|e| Error::Input(format!("report serialization failed: {e}")))?;
        let mut out = String::new();
        write_canonical(&v, &mut out);
        out.push('\n');
        Ok(out)
    }

    /// Human-readable summary: one PASS/FAIL line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let name_w = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0)
            .max(5);
        for c in &self.checks {
            out.push_str(&format!(
                "{}  {:name_w$}  trials {:>6}  max residual {:.3e}{}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.trials,
                c.max_abs,
                c.note.as_deref().map(|n| format!("  [{n}]")).unwrap_or_default(),
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.pass { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// Canonical JSON printer. serde_json's default map is ordered (BTreeMap),
/// so objects already iterate in sorted key order; this printer adds the
/// fixed float format on top.
pub fn write_canonical(v: &Value, out: &mut String) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else {
                // 17 significant digits: 1 leading + 16 after the point.
                let f = n.as_f64().unwrap_or(0.0);
                let f = if f == 0.0 { 0.0 } else { f }; // normalize -0.0
                out.push_str(&format!("{f:.16e}"));
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("string serialization cannot fail"));
        }
        Value::Array(items) => {
            out.push('[');
            for (idx, item) in items.iter().enumerate() {
                if idx > 0 {
                    out.push(',');
                }
                write_canonical(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            out.push('{');
            for (idx, (k, val)) in map.iter().enumerate() {
                if idx > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(k).expect("string serialization cannot fail"));
                out.push(':');
                write_canonical(val, out);
            }
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn judged_pass_iff_within_tolerance() {
        assert!(ResidualReport::judged("x", 0.0, 10, 0.0).pass);
        assert!(!ResidualReport::judged("x", 1.0, 10, 0.0).pass);
        assert!(ResidualReport::judged("x", 1e-12, 5, 1e-9).pass);
    }

    #[test]
    fn tracker_keeps_first_maximal_witness() {
        let mut t = MaxTracker::new();
        t.record(1.0, || json!({"trial": 0}));
        t.record(1.0, || json!({"trial": 1}));
        t.record(0.5, || json!({"trial": 2}));
        assert_eq!(t.trials, 3);
        assert_eq!(t.max_abs, 1.0);
        assert_eq!(t.witness, Some(json!({"trial": 0})));
        let r = t.judged("check", 0.0, false);
        assert!(!r.pass);
        assert!(r.witness.is_some(), "failing checks carry their witness");
        let ok = t.judged("check", 2.0, false);
        assert!(ok.pass);
        assert!(ok.witness.is_none(), "passing checks drop the witness");
    }

    #[test]
    fn canonical_json_sorts_keys_and_fixes_floats() {
        let rep = VerificationReport::new(
            json!({"zeta": 1, "alpha": {"b": 2, "a": 0.5}}),
            vec![ResidualReport::judged("only", 0.0, 3, 0.0)],
        );
        let s = rep.to_canonical_json().unwrap();
        // keys inside objects appear in sorted order
        let zeta = s.find("\"zeta\"").unwrap();
        let alpha = s.find("\"alpha\"").unwrap();
        assert!(alpha < zeta);
        // floats carry 17 significant digits
        assert!(s.contains("5.0000000000000000e-1"), "got: {s}");
        assert!(s.contains("0.0000000000000000e0"), "got: {s}");
        // byte stability
        assert_eq!(s, rep.to_canonical_json().unwrap());
    }

    #[test]
    fn overall_pass_requires_every_check() {
        let rep = VerificationReport::new(
            json!({}),
            vec![
                ResidualReport::judged("a", 0.0, 1, 0.0),
                ResidualReport::judged("b", 2.0, 1, 0.0),
            ],
        );
        assert!(!rep.pass);
        assert!(rep.to_text().contains("FAIL  b"));
        assert!(rep.to_text().ends_with("overall: FAIL\n"));
    }
}
