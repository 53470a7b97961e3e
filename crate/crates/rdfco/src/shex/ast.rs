use crate::rdf::Term;

/// A named shape; `expr` is `None` for `S { }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub name: String,
    pub expr: Option<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Triple(TripleConstraint),
    /// `a , b`: every part.
    Group(Vec<Expr>),
    /// `a | b`: exactly one branch.
    Choice(Vec<Expr>),
    /// `& S`: the node also matches `S`.
    Include(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleConstraint {
    pub predicate: String,
    /// `^p`: count subjects pointing at the node.
    pub inverse: bool,
    pub value: ValueSpec,
    pub min: u32,
    /// `None` is unbounded.
    pub max: Option<u32>,
    /// `!p v`: no such triple.
    pub negated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueSpec {
    /// `.` or `{}`.
    Any,
    /// `IRI`.
    IriKind,
    Datatype(String),
    /// A non-datatype IRI: the value must be typed with it.
    Class(String),
    Values(Vec<Term>),
    ShapeRef(String),
}

impl Expr {
    /// Shapes this expression mentions by `&` or `@`.
    pub fn references(&self) -> Vec<&str> {
        match self {
            Expr::Triple(tc) => match &tc.value {
                ValueSpec::ShapeRef(s) => vec![s.as_str()],
                _ => Vec::new(),
            },
            Expr::Group(xs) | Expr::Choice(xs) => xs.iter().flat_map(Expr::references).collect(),
            Expr::Include(s) => vec![s.as_str()],
        }
    }
}
