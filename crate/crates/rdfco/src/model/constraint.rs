use std::fmt;

use super::{Element, ModelError};
use crate::rdf::Term;

/// What a row's context, or one of its class operands, denotes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassRef {
    Named(String),
    /// Label of a DEFINE row in the same set.
    Defined(String),
    Nominals(Vec<Term>),
    Datatype(String),
    Top,
    Bottom,
    /// The focus node itself; only meaningful as a quantifier filler.
    SelfRef,
    /// Any IRI node.
    IriKind,
}

/// One step of a property path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub iri: String,
    pub inverse: bool,
}

/// A property, its inverse, or a chain of steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PropertyRef {
    pub steps: Vec<Step>,
}

impl PropertyRef {
    pub fn iri(iri: impl Into<String>) -> Self {
        PropertyRef {
            steps: vec![Step {
                iri: iri.into(),
                inverse: false,
            }],
        }
    }

    pub fn inverse_of(iri: impl Into<String>) -> Self {
        PropertyRef {
            steps: vec![Step {
                iri: iri.into(),
                inverse: true,
            }],
        }
    }

    pub fn is_simple(&self) -> bool {
        self.steps.len() == 1
    }

    /// The single step of a non-chain reference.
    pub fn single(&self) -> Option<&Step> {
        if self.steps.len() == 1 {
            self.steps.first()
        } else {
            None
        }
    }

    pub fn inverted(&self) -> PropertyRef {
        PropertyRef {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step {
                    iri: s.iri.clone(),
                    inverse: !s.inverse,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Define,
    Assert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContextKind {
    Class,
    Property,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl Severity {
    pub fn name(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }

    pub fn parse(s: &str) -> Option<Severity> {
        match s.to_ascii_lowercase().as_str() {
            "info" => Some(Severity::Info),
            "warning" => Some(Severity::Warning),
            "error" => Some(Severity::Error),
            _ => None,
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Value-space comparison operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompareOp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

impl CompareOp {
    pub fn parse(s: &str) -> Option<CompareOp> {
        Some(match s {
            "<" => CompareOp::Lt,
            "<=" | "≤" => CompareOp::Le,
            ">" => CompareOp::Gt,
            ">=" | "≥" => CompareOp::Ge,
            "=" | "==" => CompareOp::Eq,
            "!=" | "≠" => CompareOp::Ne,
            _ => return None,
        })
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CompareOp::Lt => "<",
            CompareOp::Le => "<=",
            CompareOp::Gt => ">",
            CompareOp::Ge => ">=",
            CompareOp::Eq => "=",
            CompareOp::Ne => "!=",
        }
    }

    pub fn holds(self, ord: std::cmp::Ordering) -> bool {
        use std::cmp::Ordering::*;
        match self {
            CompareOp::Lt => ord == Less,
            CompareOp::Le => ord != Greater,
            CompareOp::Gt => ord == Greater,
            CompareOp::Ge => ord != Less,
            CompareOp::Eq => ord == Equal,
            CompareOp::Ne => ord != Equal,
        }
    }
}

/// The scalar in a row's `value` field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConstraintValue {
    Int(i64),
    /// Quoted string or bare word: regexes, operators, tags.
    Text(String),
    Term(Term),
    /// `name=value` pairs in written order.
    Facets(Vec<(String, String)>),
}

impl ConstraintValue {
    pub fn as_int(&self) -> Option<i64> {
        match self {
            ConstraintValue::Int(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            ConstraintValue::Text(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericConstraint {
    pub id: String,
    pub mode: Mode,
    pub context_kind: ContextKind,
    pub context: ClassRef,
    pub left: Vec<PropertyRef>,
    pub right: Vec<PropertyRef>,
    pub classes: Vec<ClassRef>,
    pub element: Element,
    pub value: Option<ConstraintValue>,
    pub severity: Severity,
}

impl GenericConstraint {
    /// A row with empty operand lists and the element's default severity.
    pub fn new(
        id: impl Into<String>,
        mode: Mode,
        context_kind: ContextKind,
        context: ClassRef,
        element: Element,
    ) -> Self {
        GenericConstraint {
            id: id.into(),
            mode,
            context_kind,
            context,
            left: Vec::new(),
            right: Vec::new(),
            classes: Vec::new(),
            element,
            value: None,
            severity: element.default_severity(),
        }
    }

    pub fn with_left(mut self, left: Vec<PropertyRef>) -> Self {
        self.left = left;
        self
    }

    pub fn with_right(mut self, right: Vec<PropertyRef>) -> Self {
        self.right = right;
        self
    }

    pub fn with_classes(mut self, classes: Vec<ClassRef>) -> Self {
        self.classes = classes;
        self
    }

    pub fn with_value(mut self, value: ConstraintValue) -> Self {
        self.value = Some(value);
        self
    }

    pub fn with_severity(mut self, severity: Severity) -> Self {
        self.severity = severity;
        self
    }

    /// First class operand, `TOP` when absent.
    pub fn filler(&self) -> ClassRef {
        self.classes.first().cloned().unwrap_or(ClassRef::Top)
    }

    /// Structural checks that do not need the rest of the set.
    pub fn validate(&self) -> Result<(), ModelError> {
        let malformed = |message: &str| ModelError::MalformedRow {
            id: self.id.clone(),
            message: message.into(),
        };
        let missing = |expected: &str| ModelError::MissingValue {
            id: self.id.clone(),
            element: self.element.name().into(),
            expected: expected.into(),
        };
        let invalid = |message: String| ModelError::InvalidValue {
            id: self.id.clone(),
            message,
        };
        if self.id.is_empty() {
            return Err(malformed("empty id"));
        }
        match self.context_kind {
            ContextKind::Class if !self.left.is_empty() || !self.right.is_empty() => {
                return Err(malformed("class rows take no properties"))
            }
            ContextKind::Property if self.left.is_empty() => {
                return Err(malformed("property rows need at least one left property"))
            }
            _ => {}
        }
        if self.mode == Mode::Define {
            if self.context != ClassRef::Defined(self.id.clone()) {
                return Err(malformed("a DEFINE row's context must be its own label"));
            }
            if !self.element.definable() {
                return Err(malformed("element cannot define a class"));
            }
        }
        if self.element.needs_count() {
            match &self.value {
                Some(ConstraintValue::Int(n)) if *n >= 0 => {}
                Some(_) => return Err(invalid("expected a non-negative integer".into())),
                None => return Err(missing("an integer")),
            }
        }
        match self.element {
            Element::Pattern | Element::NegPattern => match &self.value {
                Some(ConstraintValue::Text(re)) => {
                    regex::Regex::new(re)
                        .map_err(|e| invalid(format!("bad regular expression: {e}")))?;
                }
                Some(_) => return Err(invalid("expected a quoted regular expression".into())),
                None => return Err(missing("a regular expression")),
            },
            Element::Compare => match &self.value {
                Some(ConstraintValue::Text(op)) if CompareOp::parse(op).is_some() => {}
                Some(_) => return Err(invalid("expected one of < <= > >= = !=".into())),
                None => return Err(missing("a comparison operator")),
            },
            Element::FacetRange | Element::NegFacetRange => match &self.value {
                Some(ConstraintValue::Facets(f)) if !f.is_empty() => {}
                Some(_) => return Err(invalid("expected a facet list".into())),
                None => return Err(missing("a facet list")),
            },
            Element::DefaultValue
            | Element::MathOp
            | Element::LangTag
            | Element::ListOp
            | Element::CardShortcut
                if self.value.is_none() =>
            {
                return Err(missing("a value"));
            }
            _ => {}
        }
        Ok(())
    }
}

/// Rows plus the prefixes they were written with.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    pub prefixes: Vec<(String, String)>,
    pub rows: Vec<GenericConstraint>,
}

impl ConstraintSet {
    pub fn new(rows: Vec<GenericConstraint>) -> Self {
        ConstraintSet {
            prefixes: Vec::new(),
            rows,
        }
    }

    pub fn get(&self, id: &str) -> Option<&GenericConstraint> {
        self.rows.iter().find(|r| r.id == id)
    }

    /// Appends `other`, keeping the first spelling of each prefix.
    pub fn merge(&mut self, other: ConstraintSet) -> Result<(), ModelError> {
        for row in &other.rows {
            if self.get(&row.id).is_some() {
                return Err(ModelError::DuplicateId(row.id.clone()));
            }
        }
        for p in other.prefixes {
            if !self.prefixes.iter().any(|(l, _)| *l == p.0) {
                self.prefixes.push(p);
            }
        }
        self.rows.extend(other.rows);
        Ok(())
    }
}
