//! Property axioms checked against the closed graph.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::{props, short, CheckRegistry, ElementCheck, Finding};
use crate::model::{dl, ClassRef, Element, GenericConstraint, PropertyRef};
use crate::rdf::Term;
use crate::validator::env::Scope;

pub(super) fn register(r: &mut CheckRegistry) {
    r.register(Arc::new(Domain));
    r.register(Arc::new(Range));
    r.register(Arc::new(Inverse));
    r.register(Arc::new(Asymmetric));
    r.register(Arc::new(Irreflexive));
    r.register(Arc::new(Functional));
    r.register(Arc::new(InverseFunctional));
    r.register(Arc::new(Key));
    r.register(Arc::new(Disjoint));
    r.register(Arc::new(Subproperty));
    r.register(Arc::new(Conditional));
}

/// `TOP` admits every subject, literal or not.
fn in_context(row: &GenericConstraint, scope: &Scope, t: &Term) -> bool {
    row.context == ClassRef::Top || scope.member(t, &row.context)
}

fn first(row: &GenericConstraint) -> &PropertyRef {
    &row.left[0]
}

/// The second property of a binary axiom: `right[0]`, else `left[1]`.
fn second(row: &GenericConstraint) -> Option<&PropertyRef> {
    row.right.first().or_else(|| row.left.get(1))
}

macro_rules! check_meta {
    ($name:literal, $($e:ident),+) => {
        fn name(&self) -> &'static str {
            $name
        }
        fn elements(&self) -> &'static [Element] {
            &[$(Element::$e),+]
        }
    };
}

struct Domain;

impl ElementCheck for Domain {
    check_meta!("domain", Domain);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let subjects: BTreeSet<Term> = row
            .left
            .iter()
            .flat_map(|p| scope.pairs(p))
            .map(|(x, _)| x)
            .collect();
        subjects
            .into_iter()
            .filter(|x| in_context(row, scope, x) && !scope.member_all(x, &row.classes))
            .map(|x| {
                Finding::new(
                    x,
                    format!(
                        "uses {} but is not in {}",
                        props(&row.left),
                        dl::class(&row.filler())
                    ),
                )
            })
            .collect()
    }
}

/// `⊤ ⊑ ∀p.C`; with a narrower context, only context members may point
/// into `C` (`∃p.C ⊑ context`).
struct Range;

impl ElementCheck for Range {
    check_meta!("range", Range);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let mut out = Vec::new();
        for p in &row.left {
            for (x, y) in scope.pairs(p) {
                if row.context == ClassRef::Top {
                    if !scope.filler_member(&x, &y, &row.classes) {
                        out.push(Finding::new(
                            x,
                            format!(
                                "value {} of {} is not in {}",
                                short(&y),
                                dl::property(p),
                                dl::class(&row.filler())
                            ),
                        ));
                    }
                } else if scope.filler_member(&x, &y, &row.classes)
                    && !scope.member(&x, &row.context)
                {
                    out.push(Finding::new(
                        x,
                        format!(
                            "links by {} to {} in {} but is not in {}",
                            dl::property(p),
                            short(&y),
                            dl::class(&row.filler()),
                            dl::class(&row.context)
                        ),
                    ));
                }
            }
        }
        out
    }
}

struct Inverse;

impl ElementCheck for Inverse {
    check_meta!("inverse", Inverse);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let p = first(row);
        let Some(q) = second(row) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for (a, b) in [(p, q), (q, p)] {
            for (x, y) in scope.pairs(a) {
                if in_context(row, scope, &x) && !scope.successors(&y, b).contains(&x) {
                    out.push(Finding::new(
                        x.clone(),
                        format!(
                            "{} {} {} lacks {} {} {}",
                            short(&x),
                            dl::property(a),
                            short(&y),
                            short(&y),
                            dl::property(b),
                            short(&x)
                        ),
                    ));
                }
            }
        }
        out
    }
}

struct Asymmetric;

impl ElementCheck for Asymmetric {
    check_meta!("asymmetric", Asymmetric);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let p = first(row);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (x, y) in scope.pairs(p) {
            if !(in_context(row, scope, &x) || in_context(row, scope, &y)) {
                continue;
            }
            if scope.successors(&y, p).contains(&x) {
                let pair = if x <= y {
                    (x.clone(), y.clone())
                } else {
                    (y.clone(), x.clone())
                };
                if seen.insert(pair.clone()) {
                    out.push(Finding::new(
                        pair.0.clone(),
                        format!(
                            "{} and {} are linked by {} in both directions",
                            short(&pair.0),
                            short(&pair.1),
                            dl::property(p)
                        ),
                    ));
                }
            }
        }
        out
    }
}

struct Irreflexive;

impl ElementCheck for Irreflexive {
    check_meta!("irreflexive", Irreflexive);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let p = first(row);
        scope
            .pairs(p)
            .into_iter()
            .filter(|(x, y)| x == y && in_context(row, scope, x))
            .map(|(x, _)| Finding::new(x, format!("linked to itself by {}", dl::property(p))))
            .collect()
    }
}

struct Functional;

impl ElementCheck for Functional {
    check_meta!("functional", Functional);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let p = first(row);
        let mut by_subject: BTreeMap<Term, BTreeSet<Term>> = BTreeMap::new();
        for (x, y) in scope.pairs(p) {
            by_subject.entry(x).or_default().insert(y);
        }
        by_subject
            .into_iter()
            .filter(|(x, ys)| ys.len() > 1 && in_context(row, scope, x))
            .map(|(x, ys)| {
                let vals: Vec<String> = ys.iter().map(short).collect();
                Finding::new(
                    x,
                    format!(
                        "{} distinct values for functional {}: {}",
                        ys.len(),
                        dl::property(p),
                        vals.join(", ")
                    ),
                )
            })
            .collect()
    }
}

struct InverseFunctional;

impl ElementCheck for InverseFunctional {
    check_meta!("inverse-functional", InverseFunctional);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let p = first(row);
        let mut by_object: BTreeMap<Term, BTreeSet<Term>> = BTreeMap::new();
        for (x, y) in scope.pairs(p) {
            by_object.entry(y).or_default().insert(x);
        }
        by_object
            .into_iter()
            .filter(|(_, xs)| xs.len() > 1)
            .filter(|(_, xs)| xs.iter().any(|x| in_context(row, scope, x)))
            .map(|(y, xs)| {
                let subs: Vec<String> = xs.iter().map(short).collect();
                Finding::new(
                    y.clone(),
                    format!(
                        "{} is the {} value of {} distinct subjects: {}",
                        short(&y),
                        dl::property(p),
                        xs.len(),
                        subs.join(", ")
                    ),
                )
            })
            .collect()
    }
}

/// Two context instances agreeing on a value of every key property.
struct Key;

impl ElementCheck for Key {
    check_meta!("key", KeyFor);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let members: Vec<Term> = scope.context(row).iter().cloned().collect();
        let keys: Vec<Vec<BTreeSet<Term>>> = members
            .iter()
            .map(|x| row.left.iter().map(|p| scope.successors(x, p)).collect())
            .collect();
        let mut out = Vec::new();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let shared = keys[i]
                    .iter()
                    .zip(&keys[j])
                    .all(|(a, b)| a.intersection(b).next().is_some());
                if shared && !row.left.is_empty() {
                    out.push(Finding::new(
                        members[i].clone(),
                        format!(
                            "shares key {} with {}",
                            props(&row.left),
                            short(&members[j])
                        ),
                    ));
                }
            }
        }
        out
    }
}

struct Disjoint;

impl ElementCheck for Disjoint {
    check_meta!("property-disjoint", PropertyDisjoint);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let p = first(row);
        let Some(q) = second(row) else {
            return Vec::new();
        };
        scope
            .pairs(p)
            .into_iter()
            .filter(|(x, y)| in_context(row, scope, x) && scope.successors(x, q).contains(y))
            .map(|(x, y)| {
                Finding::new(
                    x,
                    format!(
                        "linked to {} by both {} and {}",
                        short(&y),
                        dl::property(p),
                        dl::property(q)
                    ),
                )
            })
            .collect()
    }
}

/// Left properties, read as one chain, must imply `right[0]`.
struct Subproperty;

impl ElementCheck for Subproperty {
    check_meta!("subproperty", SubpropertyOf);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let Some(sup) = row.right.first() else {
            return Vec::new();
        };
        let chain = PropertyRef {
            steps: row.left.iter().flat_map(|p| p.steps.clone()).collect(),
        };
        scope
            .pairs(&chain)
            .into_iter()
            .filter(|(x, y)| in_context(row, scope, x) && !scope.successors(x, sup).contains(y))
            .map(|(x, y)| {
                Finding::new(
                    x,
                    format!(
                        "{} to {} without {}",
                        dl::property(&chain),
                        short(&y),
                        dl::property(sup)
                    ),
                )
            })
            .collect()
    }
}

/// A left edge demands a right edge into the filler.
struct Conditional;

impl ElementCheck for Conditional {
    check_meta!("conditional", Conditional);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let subjects: BTreeSet<Term> = row
            .left
            .iter()
            .flat_map(|p| scope.pairs(p))
            .map(|(x, _)| x)
            .collect();
        subjects
            .into_iter()
            .filter(|x| in_context(row, scope, x))
            .filter(|x| {
                !row.right.iter().all(|q| {
                    scope
                        .successors(x, q)
                        .iter()
                        .any(|y| scope.filler_member(x, y, &row.classes))
                })
            })
            .map(|x| {
                Finding::new(
                    x,
                    format!("has {} but lacks {}", props(&row.left), props(&row.right)),
                )
            })
            .collect()
    }
}
