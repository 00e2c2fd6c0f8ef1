use std::fmt::Write as _;

use quatnull_core::Error;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Error,
    NotFound,
    PossiblyIncomplete,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub status: Status,
    pub operation: &'static str,
    pub provenance: &'static str,
    pub payload: Value,
}

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
/// `selfcheck` with a failing suite.
pub const EXIT_CHECK_FAILED: i32 = 1;

impl Report {
    pub fn ok(operation: &'static str, provenance: &'static str, payload: Value) -> Self {
        Report {
            status: Status::Ok,
            operation,
            provenance,
            payload,
        }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    /// A kernel error as a report, with the exit code it maps to.
    /// A missing root is a domain answer; bad arguments are usage errors.
    pub fn from_error(operation: &'static str, provenance: &'static str, e: &Error) -> (Self, i32) {
        let (status, code) = match e {
            Error::RootNotFound { .. } => (Status::NotFound, EXIT_OK),
            Error::Internal(_) => (Status::Error, EXIT_INTERNAL),
            _ => (Status::Error, EXIT_USAGE),
        };
        let payload = serde_json::json!({ "message": e.to_string() });
        (
            Report {
                status,
                operation,
                provenance,
                payload,
            },
            code,
        )
    }

    pub fn render_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            (
                "status".into(),
                to_plain(&serde_json::to_value(self.status).unwrap()),
            ),
            ("operation".into(), self.operation.into()),
            ("provenance".into(), self.provenance.into()),
        ];
        if let Value::Object(map) = &self.payload {
            flatten("", map, &mut rows);
        } else {
            rows.push(("result".into(), to_plain(&self.payload)));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}

fn flatten(prefix: &str, map: &Map<String, Value>, rows: &mut Vec<(String, String)>) {
    for (k, v) in map {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        match v {
            Value::Object(inner) => flatten(&key, inner, rows),
            Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
                for (n, item) in items.iter().enumerate() {
                    let key = format!("{key}[{n}]");
                    match item {
                        Value::Object(inner) => flatten(&key, inner, rows),
                        other => rows.push((key, to_plain(other))),
                    }
                }
                if items.is_empty() {
                    rows.push((key, "(none)".into()));
                }
            }
            other => rows.push((key, to_plain(other))),
        }
    }
}

fn to_plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "(none)".into(),
        Value::Array(items) => items.iter().map(to_plain).collect::<Vec<_>>().join(", "),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
