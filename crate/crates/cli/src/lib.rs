//! File formats, rendering and command drivers behind the `minspan` binary.

pub mod codefile;
pub mod commands;
pub mod lti;
pub mod ltifile;
pub mod render;

use std::fmt;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A check ran and failed (`verify`, `profile --oracle`).
    pub const CHECK_FAILED: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const DEPENDENT: i32 = 3;
    pub const CAP: i32 = 4;
    pub const NOT_MINIMAL: i32 = 5;
}

/// Error with a line number, from either file format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError { code: exit::PARSE, message: e.to_string() }
    }
}

impl From<minspan_core::Error> for CliError {
    fn from(e: minspan_core::Error) -> Self {
        use minspan_core::Error as E;
        let code = match e {
            E::DependentRows | E::RankDeficient => exit::DEPENDENT,
            E::StateCapExceeded { .. } | E::EnumerationCapExceeded { .. } => exit::CAP,
            E::NotMinimal(_) => exit::NOT_MINIMAL,
            _ => exit::PARSE,
        };
        CliError { code, message: e.to_string() }
    }
}

/// Result of a command: text for humans, JSON for scripts, and an exit code.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    pub code: i32,
}

impl Output {
    pub fn ok(text: String, json: serde_json::Value) -> Self {
        Output { text, json, code: exit::OK }
    }
}
