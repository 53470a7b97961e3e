//! Statements about named individuals.

use std::sync::Arc;

use super::{short, CheckRegistry, ElementCheck, Finding};
use crate::model::{dl, ClassRef, ConstraintValue, Element, GenericConstraint};
use crate::rdf::vocab::OWL_SAME_AS;
use crate::rdf::Term;
use crate::validator::env::Scope;

pub(super) fn register(r: &mut CheckRegistry) {
    r.register(Arc::new(Identity));
    r.register(Arc::new(Assertion));
}

fn nominals(c: &ClassRef) -> Vec<Term> {
    match c {
        ClassRef::Nominals(ts) => ts.clone(),
        ClassRef::Named(i) => vec![Term::iri(i.clone())],
        _ => Vec::new(),
    }
}

/// Same individual by name, by partition, or by an explicit `owl:sameAs`.
fn same(scope: &Scope, a: &Term, b: &Term) -> bool {
    let sa = Term::iri(OWL_SAME_AS);
    a == b
        || scope.partition.same(a, b)
        || scope.materialized.has(a, &sa, b)
        || scope.materialized.has(b, &sa, a)
}

struct Identity;

impl ElementCheck for Identity {
    fn name(&self) -> &'static str {
        "identity"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::IndividualEq, Element::IndividualNeq]
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let want_same = row.element == Element::IndividualEq;
        let mut out = Vec::new();
        for a in nominals(&row.context) {
            for b in row.classes.iter().flat_map(nominals) {
                if same(scope, &a, &b) != want_same {
                    let msg = if want_same {
                        format!(
                            "{} and {} are not known to be the same individual",
                            short(&a),
                            short(&b)
                        )
                    } else {
                        format!("{} and {} denote the same individual", short(&a), short(&b))
                    };
                    // named individuals are reported as written, not by representative
                    out.push(Finding::new(a.clone(), msg));
                }
            }
        }
        out
    }
}

/// Positive and negative property assertions on named individuals.
struct Assertion;

impl ElementCheck for Assertion {
    fn name(&self) -> &'static str {
        "assertion"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::AssertionEq, Element::AssertionNeq]
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let objects: Vec<Term> = match &row.value {
            Some(ConstraintValue::Term(t)) => vec![t.clone()],
            _ => row.classes.first().map(nominals).unwrap_or_default(),
        };
        let positive = row.element == Element::AssertionEq;
        let mut out = Vec::new();
        for a in nominals(&row.context) {
            let subject = scope.rep(&a);
            for p in &row.left {
                let succ = scope.successors(&subject, p);
                for o in &objects {
                    let present = succ.contains(&scope.rep(o));
                    if present != positive {
                        let msg = if positive {
                            format!(
                                "{} {} {} is not stated",
                                short(&a),
                                dl::property(p),
                                short(o)
                            )
                        } else {
                            format!(
                                "{} {} {} is stated but excluded",
                                short(&a),
                                dl::property(p),
                                short(o)
                            )
                        };
                        out.push(Finding::new(a.clone(), msg));
                    }
                }
            }
        }
        out
    }
}
