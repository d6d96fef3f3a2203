use std::fmt::Write as _;
use std::process::ExitCode;

use gemkit::io::IoError;
use gemkit::{GraphError, InvariantError, MoveError};
use serde::Serialize;
use serde_json::Value;

/// What a command produced: a JSON document, a human-readable rendering of
/// it, and whether every checked identity held.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub consistent: bool,
}

impl Report {
    pub fn new(json: impl Serialize, text: String) -> Self {
        Report {
            json: serde_json::to_value(json).expect("serializable"),
            text,
            consistent: true,
        }
    }

    pub fn checked(mut self, consistent: bool) -> Self {
        self.consistent = consistent;
        self
    }

    pub fn emit(&self, json: bool) -> ExitCode {
        if json {
            println!(
                "{}",
                serde_json::to_string_pretty(&self.json).expect("serializable")
            );
        } else {
            print!("{}", self.text);
        }
        if self.consistent {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }
}

/// Accumulates `key: value` lines.
#[derive(Default)]
pub struct Text(String);

impl Text {
    pub fn line(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        writeln!(self.0, "{key}: {value}").unwrap();
        self
    }

    pub fn raw(&mut self, s: impl std::fmt::Display) -> &mut Self {
        writeln!(self.0, "{s}").unwrap();
        self
    }

    pub fn finish(&mut self) -> String {
        std::mem::take(&mut self.0)
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments, unreadable or unparsable input (exit 2).
    Usage(String),
    /// Input that parses but is not a valid gem, or does not meet a
    /// command's requirements (exit 3).
    Validation(String),
}

impl Failure {
    pub fn emit(&self, json: bool) -> ExitCode {
        let (kind, message, code) = match self {
            Failure::Usage(m) => ("usage", m, 2),
            Failure::Validation(m) => ("validation", m, 3),
        };
        if json {
            let doc = serde_json::json!({ "error": { "kind": kind, "message": message } });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        eprintln!("error: {message}");
        ExitCode::from(code)
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Validation(_) => Failure::Validation(e.to_string()),
            IoError::Invariant(inner) => inner.into(),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::InvalidBoundaryCount(_) | InvariantError::NegativeRank { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Validation(e.to_string()),
        }
    }
}

impl From<MoveError> for Failure {
    fn from(e: MoveError) -> Self {
        match e {
            MoveError::NoSuchEdge { .. } | MoveError::InvalidColor { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Validation(e.to_string()),
        }
    }
}
