use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: undeclared prefix '{prefix}'")]
    UndeclaredPrefix { line: usize, prefix: String },
    #[error("line {line}: unterminated statement")]
    Unterminated { line: usize },
    #[error("line {line}: nesting deeper than {limit}")]
    TooDeep { line: usize, limit: usize },
    #[error("line {line}: invalid IRI <{iri}>")]
    InvalidIri { line: usize, iri: String },
    #[error("line {line}: unsupported syntax: {what}")]
    Unsupported { line: usize, what: String },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::UndeclaredPrefix { line, .. }
            | ParseError::Unterminated { line }
            | ParseError::TooDeep { line, .. }
            | ParseError::InvalidIri { line, .. }
            | ParseError::Unsupported { line, .. } => *line,
        }
    }
}
