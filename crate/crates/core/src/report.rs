use std::fmt;

use serde::{Deserialize, Serialize};

/// One violated consistency condition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub code: String,
    pub message: String,
    #[serde(rename = "component-ids")]
    pub component_ids: Vec<String>,
}

/// Findings of a validation pass, kept in canonical order. Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, code: &str, message: impl Into<String>, ids: &[&str]) {
        let mut component_ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
        component_ids.sort();
        let v = Violation {
            code: code.to_string(),
            message: message.into(),
            component_ids,
        };
        let at = self.violations.binary_search(&v).unwrap_or_else(|i| i);
        if self.violations.get(at) != Some(&v) {
            self.violations.insert(at, v);
        }
    }

    /// Merge another report, prefixing each message with `context`.
    pub fn extend_with_context(&mut self, other: &ValidationReport, context: &str) {
        for v in &other.violations {
            let ids: Vec<&str> = v.component_ids.iter().map(String::as_str).collect();
            self.push(&v.code, format!("{context}: {}", v.message), &ids);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has_code(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("valid");
        }
        for v in &self.violations {
            writeln!(f, "[{}] {} ({})", v.code, v.message, v.component_ids.join(", "))?;
        }
        Ok(())
    }
}
