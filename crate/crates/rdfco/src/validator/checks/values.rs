use std::collections::BTreeSet;
use std::sync::Arc;

use super::{left_fillers, short, CheckRegistry, ElementCheck, Finding};
use crate::model::{dl, ClassRef, ContextKind, Element, GenericConstraint, PropertyRef};
use crate::rdf::vocab::SKOS_IN_SCHEME;
use crate::rdf::Term;
use crate::validator::env::Scope;

pub(super) fn register(r: &mut CheckRegistry) {
    r.register(Arc::new(Enumeration));
    r.register(Arc::new(Vocab));
}

/// Allowed and excluded value lists.
struct Enumeration;

impl Enumeration {
    fn ok(row: &GenericConstraint, scope: &Scope, y: &Term) -> bool {
        let listed = scope.member_any(y, &row.classes);
        match row.element {
            Element::AllowedValues => listed,
            _ => !listed,
        }
    }

    fn values(row: &GenericConstraint, scope: &Scope, x: &Term) -> Vec<Term> {
        match row.context_kind {
            ContextKind::Class => vec![x.clone()],
            ContextKind::Property => left_fillers(row, scope, x).into_iter().collect(),
        }
    }

    fn listing(row: &GenericConstraint) -> String {
        row.classes
            .iter()
            .map(dl::class)
            .collect::<Vec<_>>()
            .join(" ⊔ ")
    }
}

impl ElementCheck for Enumeration {
    fn name(&self) -> &'static str {
        "enumeration"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::AllowedValues, Element::NotAllowedValues]
    }
    fn definable(&self) -> bool {
        true
    }
    fn holds(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> bool {
        Self::values(row, scope, x)
            .iter()
            .all(|y| Self::ok(row, scope, y))
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            for y in Self::values(row, scope, x) {
                if !Self::ok(row, scope, &y) {
                    let msg = match row.element {
                        Element::AllowedValues => {
                            format!("value {} not among {}", short(&y), Self::listing(row))
                        }
                        _ => format!("value {} is excluded by {}", short(&y), Self::listing(row)),
                    };
                    out.push(Finding::new(x.clone(), msg));
                }
            }
        }
        out
    }
}

/// Fillers must belong only to listed concept schemes.
struct Vocab;

impl ElementCheck for Vocab {
    fn name(&self) -> &'static str {
        "vocabulary-membership"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::VocabMembership]
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let scheme_prop = row
            .right
            .first()
            .cloned()
            .unwrap_or_else(|| PropertyRef::iri(SKOS_IN_SCHEME));
        let allowed: BTreeSet<Term> = row
            .classes
            .iter()
            .flat_map(|c| match c {
                ClassRef::Named(i) => vec![Term::iri(i.clone())],
                ClassRef::Nominals(ts) => ts.clone(),
                _ => Vec::new(),
            })
            .map(|t| scope.rep(&t))
            .collect();
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            for y in left_fillers(row, scope, x) {
                let schemes = scope.successors(&y, &scheme_prop);
                if schemes.is_empty() {
                    out.push(Finding::new(
                        x.clone(),
                        format!("{} belongs to no concept scheme", short(&y)),
                    ));
                }
                for s in schemes.iter().filter(|s| !allowed.contains(s)) {
                    out.push(Finding::new(
                        x.clone(),
                        format!(
                            "{} is in {}, which is not an allowed vocabulary",
                            short(&y),
                            short(s)
                        ),
                    ));
                }
            }
        }
        out
    }
}
