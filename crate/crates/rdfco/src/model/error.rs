use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown element '{name}'")]
    UnknownElement { line: usize, name: String },
    #[error("line {line}: undeclared prefix '{prefix}'")]
    UndeclaredPrefix { line: usize, prefix: String },
    #[error("MISSING_VALUE: constraint '{id}' ({element}) needs {expected}")]
    MissingValue {
        id: String,
        element: String,
        expected: String,
    },
    #[error("constraint '{id}': invalid value: {message}")]
    InvalidValue { id: String, message: String },
    #[error("constraint '{id}': {message}")]
    MalformedRow { id: String, message: String },
    #[error("duplicate constraint id '{0}'")]
    DuplicateId(String),
    #[error("UNRESOLVED_LABEL: constraint '{id}' refers to undefined '@{label}'")]
    UnresolvedLabel { id: String, label: String },
    #[error("NEGATION_CYCLE: definitions {} depend on themselves through negation", .ids.join(", "))]
    NegationCycle { ids: Vec<String> },
    #[error("NOT_DL_EXPRESSIBLE: element {element} has no description logic form")]
    NotDlExpressible { element: String },
}

impl ModelError {
    /// Stable error code for reports.
    pub fn code(&self) -> &'static str {
        match self {
            ModelError::Syntax { .. } => "SYNTAX",
            ModelError::UnknownElement { .. } => "UNKNOWN_ELEMENT",
            ModelError::UndeclaredPrefix { .. } => "UNDECLARED_PREFIX",
            ModelError::MissingValue { .. } => "MISSING_VALUE",
            ModelError::InvalidValue { .. } => "INVALID_VALUE",
            ModelError::MalformedRow { .. } => "MALFORMED_ROW",
            ModelError::DuplicateId(_) => "DUPLICATE_ID",
            ModelError::UnresolvedLabel { .. } => "UNRESOLVED_LABEL",
            ModelError::NegationCycle { .. } => "NEGATION_CYCLE",
            ModelError::NotDlExpressible { .. } => "NOT_DL_EXPRESSIBLE",
        }
    }
}
