use std::sync::Arc;

use super::{describe, CheckRegistry, ElementCheck};
use crate::model::{dl, ClassRef, ConstraintValue, Element, GenericConstraint, PropertyRef};
use crate::rdf::Term;
use crate::validator::env::Scope;

pub(super) fn register(r: &mut CheckRegistry) {
    r.register(Arc::new(Exists));
    r.register(Arc::new(ForAll));
    r.register(Arc::new(Cardinality));
}

/// Qualified fillers of `p` at `x`.
fn qualified(scope: &Scope, x: &Term, p: &PropertyRef, classes: &[ClassRef]) -> usize {
    scope
        .successors(x, p)
        .iter()
        .filter(|y| scope.filler_member(x, y, classes))
        .count()
}

fn filler_text(row: &GenericConstraint) -> String {
    if row.classes.is_empty() {
        String::new()
    } else {
        format!(
            " in {}",
            row.classes
                .iter()
                .map(dl::class)
                .collect::<Vec<_>>()
                .join(" ⊓ ")
        )
    }
}

/// `∃p.C`, `∃p.{a}`, `∃p.Self`; several left properties must all hold.
struct Exists;

impl Exists {
    fn holds_for(row: &GenericConstraint, scope: &Scope, x: &Term, p: &PropertyRef) -> bool {
        let succ = scope.successors(x, p);
        if let Some(ConstraintValue::Term(a)) = &row.value {
            if !succ.contains(&scope.rep(a)) {
                return false;
            }
        }
        succ.iter().any(|y| scope.filler_member(x, y, &row.classes))
    }
}

impl ElementCheck for Exists {
    fn name(&self) -> &'static str {
        "exists"
    }
    fn elements(&self) -> &'static [Element] {
        &[
            Element::Exists,
            Element::Required,
            Element::ValueRestriction,
        ]
    }
    fn definable(&self) -> bool {
        true
    }
    fn holds(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> bool {
        row.left.iter().all(|p| Self::holds_for(row, scope, x, p))
    }
    fn explain(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> String {
        let missing: Vec<&PropertyRef> = row
            .left
            .iter()
            .filter(|p| !Self::holds_for(row, scope, x, p))
            .collect();
        let what = match &row.value {
            Some(ConstraintValue::Term(a)) => format!(" with value {}", super::short(a)),
            _ => filler_text(row),
        };
        let names: Vec<String> = missing.into_iter().map(dl::property).collect();
        format!("no value for {}{}", names.join(", "), what)
    }
}

/// `∀p.C`, vacuous without edges.
struct ForAll;

impl ElementCheck for ForAll {
    fn name(&self) -> &'static str {
        "forall"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::ForAll]
    }
    fn definable(&self) -> bool {
        true
    }
    fn holds(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> bool {
        row.left.iter().all(|p| {
            scope
                .successors(x, p)
                .iter()
                .all(|y| scope.filler_member(x, y, &row.classes))
        })
    }
    fn explain(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> String {
        let bad: Vec<String> = row
            .left
            .iter()
            .flat_map(|p| scope.successors(x, p))
            .filter(|y| !scope.filler_member(x, y, &row.classes))
            .map(|y| super::short(&y))
            .collect();
        format!("value(s) {} outside{}", bad.join(", "), filler_text(row))
    }
}

/// `≥n`, `≤n` and `=n`, counting distinct fillers of the first left property.
struct Cardinality;

impl Cardinality {
    fn bounds(row: &GenericConstraint) -> (usize, Option<usize>) {
        let n = row
            .value
            .as_ref()
            .and_then(ConstraintValue::as_int)
            .unwrap_or(1)
            .max(0) as usize;
        match row.element {
            Element::MinCard => (n, None),
            Element::MaxCard => (0, Some(n)),
            Element::ExactCard => (n, Some(n)),
            // Repeatable
            _ => (1, None),
        }
    }

    fn count(row: &GenericConstraint, scope: &Scope, x: &Term) -> usize {
        row.left
            .first()
            .map_or(0, |p| qualified(scope, x, p, &row.classes))
    }
}

impl ElementCheck for Cardinality {
    fn name(&self) -> &'static str {
        "cardinality"
    }
    fn elements(&self) -> &'static [Element] {
        &[
            Element::MinCard,
            Element::MaxCard,
            Element::ExactCard,
            Element::Repeatable,
        ]
    }
    fn definable(&self) -> bool {
        true
    }
    fn holds(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> bool {
        let (min, max) = Self::bounds(row);
        let k = Self::count(row, scope, x);
        k >= min && max.is_none_or(|m| k <= m)
    }
    fn explain(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> String {
        let (min, max) = Self::bounds(row);
        let k = Self::count(row, scope, x);
        let need = match max {
            Some(m) if m == min => format!("exactly {m}"),
            Some(m) if k > m => format!("at most {m}"),
            _ => format!("at least {min}"),
        };
        format!(
            "has {k} value(s) for {}, needs {need} ({})",
            super::props(&row.left[..1.min(row.left.len())]),
            describe(row)
        )
    }
}
