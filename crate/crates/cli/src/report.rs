//! One report model rendered two ways, so the human and JSON outputs carry
//! the same content by construction.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

use reidemeister::reidemeister::ReidemeisterVerdict;

/// Verdict fields every report carries (possibly `null`), followed by
/// command-specific details in insertion order and nested sub-reports.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub headline: String,
    pub verdict: Option<String>,
    pub reason: Option<String>,
    pub char_poly: Option<String>,
    pub fix_dim: Option<usize>,
    pub nilradical_dim: Option<usize>,
    pub codim: Option<usize>,
    pub invariant_factors: Option<Vec<String>>,
    pub citations: Vec<String>,
    #[serde(serialize_with = "ordered_map")]
    pub details: Vec<(String, Value)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub items: Vec<Report>,
    /// A self-check inside the command failed; the process exits 1.
    #[serde(skip)]
    pub failed: bool,
}

fn ordered_map<S: Serializer>(details: &[(String, Value)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(details.len()))?;
    for (k, v) in details {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

impl Report {
    pub fn new(command: &str, headline: impl Into<String>) -> Self {
        Report {
            command: command.to_string(),
            headline: headline.into(),
            ..Report::default()
        }
    }

    /// A report whose headline and evidence come from a verdict.
    pub fn from_verdict(command: &str, v: &ReidemeisterVerdict) -> Self {
        let e = &v.evidence;
        let mut r = Report::new(command, v.headline());
        r.verdict = Some(v.kind.to_string());
        r.reason = Some(v.reason.to_string());
        r.char_poly = e.char_poly.clone();
        r.fix_dim = e.fix_dim;
        r.nilradical_dim = e.nilradical_dim;
        r.codim = e.codim;
        r.invariant_factors = e
            .invariant_factors
            .as_ref()
            .map(|fs| fs.iter().map(ToString::to_string).collect());
        r.citations = e.citations.clone();
        if let Some(det) = &e.det {
            r.detail("det", det.as_str());
        }
        if let Some(detail) = &e.detail {
            r.detail("detail", detail.as_str());
        }
        r
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.details.push((key.to_string(), value.into()));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        self.write_human(&mut out, 0);
        out
    }

    fn write_human(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        out.push_str(&format!("{pad}{}\n", self.headline));
        let mut line = |key: &str, value: String| out.push_str(&format!("{pad}  {key}: {value}\n"));
        if let Some(v) = &self.verdict {
            line("verdict", v.clone());
        }
        if let Some(v) = &self.reason {
            line("reason", v.clone());
        }
        if let Some(v) = &self.char_poly {
            line("char_poly", v.clone());
        }
        if let Some(v) = self.fix_dim {
            line("fix_dim", v.to_string());
        }
        if let Some(v) = self.nilradical_dim {
            line("nilradical_dim", v.to_string());
        }
        if let Some(v) = self.codim {
            line("codim", v.to_string());
        }
        if let Some(v) = &self.invariant_factors {
            line("invariant_factors", format!("[{}]", v.join(", ")));
        }
        for (k, v) in &self.details {
            line(k, human_value(v));
        }
        if !self.citations.is_empty() {
            out.push_str(&format!("{pad}  citations:\n"));
            for c in &self.citations {
                out.push_str(&format!("{pad}    - {c}\n"));
            }
        }
        for item in &self.items {
            item.write_human(out, depth + 1);
        }
    }
}

/// Strings print bare, arrays as `[a, b]`, everything else as JSON.
pub fn human_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!(
            "[{}]",
            xs.iter().map(human_value).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_and_json_carry_the_same_fields() {
        let mut r = Report::new("demo", "R = 1");
        r.verdict = Some("One".into());
        r.fix_dim = Some(0);
        r.invariant_factors = Some(vec!["1".into(), "3".into()]);
        r.citations = vec!["a criterion".into()];
        r.detail("det", "-3").detail("sizes", vec![1, 2]);
        let human = r.to_human();
        assert!(human.starts_with("R = 1\n"));
        assert!(human.contains("  verdict: One\n"));
        assert!(human.contains("  invariant_factors: [1, 3]\n"));
        assert!(human.contains("  sizes: [1, 2]\n"));
        assert!(human.contains("    - a criterion\n"));
        let json: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["verdict"], "One");
        assert_eq!(json["reason"], Value::Null);
        assert_eq!(json["details"]["det"], "-3");
        assert!(json.get("items").is_none());
    }
}
