//! Report plumbing: every command produces one JSON value; text output is a
//! rendering of the same value.

use colombeau::Error;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

pub struct Outcome {
    pub report: Value,
    /// False only for a failing selftest.
    pub ok: bool,
}

impl Outcome {
    pub fn of(report: impl Serialize) -> Outcome {
        Outcome { report: serde_json::to_value(report).expect("report serializes"), ok: true }
    }
}

pub fn error_report(e: &Error) -> Value {
    let detail = match e {
        Error::Syntax { offset, expected } => json!({ "offset": offset, "expected": expected }),
        other => json!({ "message": other.to_string() }),
    };
    json!({ "error": e.to_string(), "kind": e.kind(), "detail": detail })
}

/// `key: value` lines; strings print bare, everything else as compact JSON.
/// An `eval` report prints just its value.
pub fn render_human(report: &Value) -> String {
    let Value::Object(map) = report else {
        return format!("{report}\n");
    };
    if map.get("command") == Some(&Value::from("eval")) {
        if let Some(Value::String(v)) = map.get("value") {
            return format!("{v}\n");
        }
    }
    if let Some(Value::Array(lines)) = map.get("lines") {
        return lines.iter().filter_map(Value::as_str).map(|l| format!("{l}\n")).collect();
    }
    map.iter()
        .filter(|(k, _)| k.as_str() != "command")
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}: {s}\n"),
            other => format!("{k}: {other}\n"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_rendering() {
        let r = json!({ "command": "norm", "valuation": "2", "exact": true });
        assert_eq!(render_human(&r), "valuation: 2\nexact: true\n");
        let r = json!({ "command": "eval", "input": "1", "value": "1" });
        assert_eq!(render_human(&r), "1\n");
    }

    #[test]
    fn syntax_error_detail() {
        let e = Error::Syntax { offset: 4, expected: vec!["number".into()] };
        let r = error_report(&e);
        assert_eq!(r["kind"], "syntax");
        assert_eq!(r["detail"]["offset"], 4);
    }
}
