use std::sync::Arc;

use super::{CheckRegistry, ElementCheck};
use crate::model::{dl, Element, GenericConstraint};
use crate::rdf::Term;
use crate::validator::env::Scope;

pub(super) fn register(r: &mut CheckRegistry) {
    r.register(Arc::new(Intersection));
    r.register(Arc::new(Union));
    r.register(Arc::new(Negation));
    r.register(Arc::new(Xor));
    r.register(Arc::new(Subclass));
}

struct Intersection;

impl ElementCheck for Intersection {
    fn name(&self) -> &'static str {
        "intersection"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::Intersection]
    }
    fn definable(&self) -> bool {
        true
    }
    fn holds(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> bool {
        if row.classes.is_empty() {
            return x.is_node();
        }
        scope.member_all(x, &row.classes)
    }
}

struct Union;

impl ElementCheck for Union {
    fn name(&self) -> &'static str {
        "union"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::Union]
    }
    fn definable(&self) -> bool {
        true
    }
    fn holds(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> bool {
        scope.member_any(x, &row.classes)
    }
}

struct Negation;

impl ElementCheck for Negation {
    fn name(&self) -> &'static str {
        "negation"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::Negation]
    }
    fn definable(&self) -> bool {
        true
    }
    fn holds(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> bool {
        !scope.member_any(x, &row.classes)
    }
    fn explain(&self, row: &GenericConstraint, _scope: &Scope, _x: &Term) -> String {
        format!("is in excluded class {}", dl::class(&row.filler()))
    }
}

/// Exactly one operand.
struct Xor;

impl ElementCheck for Xor {
    fn name(&self) -> &'static str {
        "xor"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::Xor]
    }
    fn definable(&self) -> bool {
        true
    }
    fn holds(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> bool {
        row.classes.iter().filter(|c| scope.member(x, c)).count() == 1
    }
    fn explain(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> String {
        let hit: Vec<String> = row
            .classes
            .iter()
            .filter(|c| scope.member(x, c))
            .map(dl::class)
            .collect();
        if hit.is_empty() {
            format!("matches none of {} alternatives", row.classes.len())
        } else {
            format!(
                "matches {} alternatives ({}), expected exactly one",
                hit.len(),
                hit.join(", ")
            )
        }
    }
}

struct Subclass;

impl ElementCheck for Subclass {
    fn name(&self) -> &'static str {
        "subclass"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::SubclassOf]
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<super::Finding> {
        scope
            .context(row)
            .iter()
            .filter_map(|x| {
                let missing: Vec<String> = row
                    .classes
                    .iter()
                    .filter(|c| !scope.member(x, c))
                    .map(dl::class)
                    .collect();
                (!missing.is_empty()).then(|| {
                    super::Finding::new(
                        x.clone(),
                        format!("not an instance of {}", missing.join(", ")),
                    )
                })
            })
            .collect()
    }
}
