use thiserror::Error;

use crate::report::ValidationReport;

/// Errors raised by the library. Findings about a graph's consistency are not
/// errors; they are collected in a [`ValidationReport`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("coefficient domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("class does not match the fixed components: {0}")]
    Addressing(String),

    #[error("unresolved self-intersection for surface `{0}`")]
    UnresolvedSelfIntersection(String),

    #[error("degree {degree} exceeds the configured cutoff {cutoff}")]
    CutoffExceeded { degree: u32, cutoff: u32 },

    #[error("input failed validation with {} finding(s)", .0.len())]
    Invalid(ValidationReport),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code used in JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Schema(_) => "schema",
            Error::Input(_) => "input",
            Error::DomainMismatch(_) => "domain-mismatch",
            Error::Degenerate(_) => "degenerate",
            Error::Addressing(_) => "addressing",
            Error::UnresolvedSelfIntersection(_) => "unresolved-self-intersection",
            Error::CutoffExceeded { .. } => "cutoff-exceeded",
            Error::Invalid(_) => "invalid",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn from_json(err: serde_json::Error) -> Self {
        use serde_json::error::Category;
        match err.classify() {
            Category::Data => Error::Schema(err.to_string()),
            Category::Io | Category::Syntax | Category::Eof => Error::Parse {
                line: err.line(),
                column: err.column(),
                message: err.to_string(),
            },
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
