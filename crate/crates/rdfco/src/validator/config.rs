use thiserror::Error;

use crate::model::{ModelError, Severity};
use crate::rdf::ParseError;

/// Round cap for every fixpoint computation.
pub const FIXPOINT_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationConfig {
    /// Closed world: absent triples are false.
    pub cwa: bool,
    /// Unique names: distinct IRIs denote distinct individuals.
    pub una: bool,
    /// Materialise inferences before checking.
    pub infer: bool,
    pub fixpoint_cap: usize,
    /// Findings below this severity are reported but do not break conformance.
    pub severity_floor: Severity,
    /// Inference rules to run; `None` runs all of them.
    pub rules: Option<Vec<String>>,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        ValidationConfig {
            cwa: true,
            una: true,
            infer: false,
            fixpoint_cap: FIXPOINT_LIMIT,
            severity_floor: Severity::Info,
            rules: None,
        }
    }
}

impl ValidationConfig {
    pub fn check(&self) -> Result<(), ValidationError> {
        if !self.una && !self.infer {
            return Err(ValidationError::Config(
                "una=false requires infer=true".into(),
            ));
        }
        if self.fixpoint_cap == 0 {
            return Err(ValidationError::Config(
                "fixpoint cap must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum ValidationError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("FIXPOINT_LIMIT: no fixpoint after {rounds} rounds")]
    FixpointLimit { rounds: usize },
    #[error("unknown inference rule '{0}'")]
    UnknownRule(String),
}
