//! Per-input results in both output formats, and the exit-status contract.

use std::fmt::Write as _;

use equicoh::Error;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// The outcome of running one subcommand on one input.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    pub fn new(code: i32, text: impl Into<String>, json: Value) -> Self {
        Outcome {
            code,
            text: text.into(),
            json,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json");
                s.push('\n');
                s
            }
        }
    }

    pub fn io(path: &str, err: &std::io::Error) -> Self {
        Outcome::new(
            EXIT_USAGE,
            format!("error[io]: {path}: {err}"),
            json!({"error": {"code": "io", "message": format!("{path}: {err}")}}),
        )
    }
}

/// Semantic failures exit 1; malformed input and exceeded limits exit 2.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Schema(_) | Error::CutoffExceeded { .. } => EXIT_USAGE,
        _ => EXIT_SEMANTIC,
    }
}

impl From<Error> for Outcome {
    fn from(err: Error) -> Self {
        let code = exit_code(&err);
        let (text, report) = match &err {
            Error::Invalid(report) => (format!("invalid input\n{report}"), Some(report)),
            _ => (format!("error[{}]: {err}", err.code()), None),
        };
        let mut body = json!({"code": err.code(), "message": err.to_string()});
        if let Some(r) = report {
            body["violations"] = serde_json::to_value(r).expect("json");
        }
        Outcome::new(code, text, json!({ "error": body }))
    }
}

/// A text table with columns padded to a common width.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let ncols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let line: Vec<String> = (0..ncols)
            .map(|i| format!("{:>width$}", row[i], width = widths[i]))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}
