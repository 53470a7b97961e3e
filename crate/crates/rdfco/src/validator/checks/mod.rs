//! Per-element checks, looked up by element in a [`CheckRegistry`].

use std::collections::HashMap;
use std::sync::Arc;

use super::env::{NodeSet, Scope};
use crate::model::dl;
use crate::model::{Element, GenericConstraint, PropertyRef};
use crate::rdf::Term;

mod boolean;
mod individual;
mod literal;
mod property;
mod quantifier;
mod structure;
mod values;

pub use structure::{read_list, ListError};

/// One offending node found by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub focus: Term,
    pub detail: String,
    /// Set when the finding belongs to a different element than the row,
    /// e.g. an unparsable literal met by a range check.
    pub element: Option<Element>,
}

impl Finding {
    pub fn new(focus: Term, detail: impl Into<String>) -> Self {
        Finding {
            focus,
            detail: detail.into(),
            element: None,
        }
    }

    pub fn as_element(mut self, element: Element) -> Self {
        self.element = Some(element);
        self
    }
}

pub trait ElementCheck: Send + Sync {
    fn name(&self) -> &'static str;

    fn elements(&self) -> &'static [Element];

    /// Whether rows of this check denote a class.
    fn definable(&self) -> bool {
        false
    }

    /// Membership of `x` in the class a definable row denotes.
    fn holds(&self, _row: &GenericConstraint, _scope: &Scope, _x: &Term) -> bool {
        false
    }

    /// Reason `x` fails `holds`, used in reports.
    fn explain(&self, row: &GenericConstraint, _scope: &Scope, _x: &Term) -> String {
        format!("does not satisfy {}", describe(row))
    }

    fn extension(&self, row: &GenericConstraint, scope: &Scope) -> Option<NodeSet> {
        if !self.definable() {
            return None;
        }
        Some(
            scope
                .domain
                .iter()
                .filter(|x| self.holds(row, scope, x))
                .cloned()
                .collect(),
        )
    }

    /// Findings for an ASSERT row. Definable checks default to reporting
    /// each context node outside the row's class.
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        if !self.definable() {
            return Vec::new();
        }
        scope
            .context(row)
            .iter()
            .filter(|x| !self.holds(row, scope, x))
            .map(|x| Finding::new(x.clone(), self.explain(row, scope, x)))
            .collect()
    }
}

#[derive(Clone)]
pub struct CheckRegistry {
    by_element: HashMap<Element, Arc<dyn ElementCheck>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry {
            by_element: HashMap::new(),
        }
    }

    /// Registers `check` for every element it claims, replacing earlier ones.
    pub fn register(&mut self, check: Arc<dyn ElementCheck>) {
        for &e in check.elements() {
            self.by_element.insert(e, check.clone());
        }
    }

    pub fn get(&self, element: Element) -> Option<&dyn ElementCheck> {
        self.by_element.get(&element).map(|c| c.as_ref())
    }

    /// Every built-in check.
    pub fn standard() -> Self {
        let mut r = CheckRegistry::empty();
        boolean::register(&mut r);
        quantifier::register(&mut r);
        property::register(&mut r);
        literal::register(&mut r);
        values::register(&mut r);
        structure::register(&mut r);
        individual::register(&mut r);
        r
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.by_element.keys().copied()
    }
}

pub(crate) fn describe(row: &GenericConstraint) -> String {
    let mut s = row.element.name().to_string();
    if !row.left.is_empty() {
        s.push(' ');
        s.push_str(&props(&row.left));
    }
    if !row.classes.is_empty() {
        s.push(' ');
        s.push_str(
            &row.classes
                .iter()
                .map(dl::class)
                .collect::<Vec<_>>()
                .join(", "),
        );
    }
    s
}

pub(crate) fn props(ps: &[PropertyRef]) -> String {
    ps.iter().map(dl::property).collect::<Vec<_>>().join(", ")
}

pub(crate) fn short(t: &Term) -> String {
    match t {
        Term::Iri(i) => dl::local_name(i).to_string(),
        other => other.to_string(),
    }
}

/// Fillers of every left property at `x`.
pub(crate) fn left_fillers(row: &GenericConstraint, scope: &Scope, x: &Term) -> NodeSet {
    let mut out = NodeSet::new();
    for p in &row.left {
        out.extend(scope.successors(x, p));
    }
    out
}
