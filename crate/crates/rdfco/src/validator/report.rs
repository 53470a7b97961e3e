use std::fmt;

use super::config::ValidationConfig;
use crate::model::{Element, Severity};
use crate::rdf::Term;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    /// Id of the row as written, before sugar was expanded.
    pub constraint_id: String,
    pub element: Element,
    pub focus: Term,
    pub severity: Severity,
    pub detail: String,
}

impl Violation {
    pub fn type_name(&self) -> &'static str {
        self.element.name()
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} {} at {}: {}",
            self.severity.name(),
            self.constraint_id,
            self.element,
            self.focus,
            self.detail
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SeverityCounts {
    pub info: usize,
    pub warning: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub config: ValidationConfig,
    /// Sorted by constraint id, then focus.
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// No violation at or above the severity floor.
    pub fn conforms(&self) -> bool {
        self.violations
            .iter()
            .all(|v| v.severity < self.config.severity_floor)
    }

    pub fn counts(&self) -> SeverityCounts {
        let mut c = SeverityCounts::default();
        for v in &self.violations {
            match v.severity {
                Severity::Info => c.info += 1,
                Severity::Warning => c.warning += 1,
                Severity::Error => c.error += 1,
            }
        }
        c
    }

    pub fn for_constraint<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations
            .iter()
            .filter(move |v| v.constraint_id == id)
    }
}
