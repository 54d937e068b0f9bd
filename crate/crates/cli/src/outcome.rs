use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// The single document printed by every invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandOutcome {
    pub schema_version: u32,
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

/// A failed command: the exit code, a message, and whatever partial result
/// explains the failure.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    pub payload: Value,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
            payload: Value::Null,
        }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PRECONDITION,
            message: message.into(),
            payload: Value::Null,
        }
    }

    pub fn disagreement(message: impl Into<String>, payload: Value) -> Self {
        CliError {
            code: EXIT_DISAGREEMENT,
            message: message.into(),
            payload,
        }
    }
}

impl From<matchcover::Error> for CliError {
    fn from(e: matchcover::Error) -> Self {
        use matchcover::{Error, GraphError};
        let code = match &e {
            Error::Parse(_) => EXIT_USAGE,
            Error::Graph(
                GraphError::UnknownLabel(_)
                | GraphError::UnknownEdge(_)
                | GraphError::UnknownVertex(_),
            ) => EXIT_USAGE,
            _ => EXIT_PRECONDITION,
        };
        CliError {
            code,
            message: e.to_string(),
            payload: Value::Null,
        }
    }
}

impl From<matchcover::ParseError> for CliError {
    fn from(e: matchcover::ParseError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<matchcover::GraphError> for CliError {
    fn from(e: matchcover::GraphError) -> Self {
        matchcover::Error::from(e).into()
    }
}

impl CommandOutcome {
    pub fn ok(command: &str, payload: Value, diagnostics: Vec<String>) -> Self {
        CommandOutcome {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            status: Status::Ok,
            payload,
            diagnostics,
        }
    }

    pub fn error(command: &str, err: &CliError) -> Self {
        CommandOutcome {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            status: Status::Error,
            payload: err.payload.clone(),
            diagnostics: vec![err.message.clone()],
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("outcome serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let status = match self.status {
            Status::Ok => "ok",
            Status::Error => "error",
        };
        let _ = writeln!(out, "{} [{status}]", self.command);
        for d in &self.diagnostics {
            let _ = writeln!(out, "! {d}");
        }
        render(&mut out, &self.payload, 1);
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(out, item, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(out, item, depth + 1);
                    }
                }
            }
        }
        Value::String(s) => {
            for line in s.lines() {
                let _ = writeln!(out, "{pad}{line}");
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_round_trips() {
        let o = CommandOutcome::ok(
            "classify",
            json!({"a": [1, 2], "b": {"c": "x"}}),
            vec!["note".into()],
        );
        let back: CommandOutcome = serde_json::from_str(&o.to_json()).unwrap();
        assert_eq!(back, o);
    }

    #[test]
    fn human_rendering_nests() {
        let o = CommandOutcome::ok(
            "dm",
            json!({"ell": 1, "parts": [{"a": ["x"]}], "file": "l1\nl2"}),
            vec![],
        );
        let text = o.to_human();
        assert!(text.starts_with("dm [ok]\n"));
        assert!(text.contains("  ell: 1\n"));
        assert!(text.contains("      a: [x]\n"));
        assert!(text.contains("    l2\n"));
    }
}
