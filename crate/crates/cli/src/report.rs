use std::fmt;

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Eliminated,
    NotFound,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Eliminated => "eliminated",
            Status::NotFound => "not_found",
            Status::Error => "error",
        }
    }
}

/// One JSON document per invocation. Keys come out sorted because
/// `serde_json::Map` is ordered.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, status: Status) -> Self {
        let inputs = match inputs {
            Value::Object(m) => m,
            Value::Null => Map::new(),
            other => Map::from_iter([("value".to_string(), other)]),
        };
        Report { command: command.to_string(), inputs, results, status }
    }

    pub fn failure(command: &str, err: &CliError) -> Self {
        Report::new(command, Value::Null, json!({ "error": err.to_string(), "kind": err.kind() }), Status::Error)
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "status": self.status.as_str(),
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("JSON values serialize")
    }

    /// 0 for every status except `error`, which signals a mathematical mismatch.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Error => 1,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad flags or arguments.
    Usage(String),
    /// Unreadable or unparsable input files.
    Io(String),
    /// The input was read but fails a mathematical check.
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Math(_) => "math",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Math(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}
