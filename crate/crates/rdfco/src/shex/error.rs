use thiserror::Error;

use crate::model::ModelError;

#[derive(Debug, Error)]
pub enum ShexError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown token '{token}'")]
    UnknownToken { line: usize, token: String },
    #[error("line {line}: undeclared prefix '{prefix}'")]
    UndeclaredPrefix { line: usize, prefix: String },
    #[error("unresolved shape reference <{0}>")]
    Unresolved(String),
    #[error("UNSUPPORTED_FEATURE: {0}")]
    UnsupportedFeature(String),
    #[error("NEGATION_CYCLE: shapes {0:?} depend on themselves through negation")]
    NegationCycle(Vec<String>),
    #[error("FIXPOINT_LIMIT: no fixpoint after {0} rounds")]
    FixpointLimit(usize),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Validation(#[from] crate::validator::ValidationError),
}
