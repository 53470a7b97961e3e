//! Lists, aggregates, arithmetic and vocabulary hygiene.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use super::{left_fillers, props, short, CheckRegistry, ElementCheck, Finding};
use crate::model::{dl, ClassRef, ConstraintValue, Element, GenericConstraint, PropertyRef};
use crate::rdf::vocab::{OWL, RDF, RDFS, RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, XSD};
use crate::rdf::{value_of, Graph, Term, Value};
use crate::validator::env::Scope;

pub(super) fn register(r: &mut CheckRegistry) {
    r.register(Arc::new(Ordered));
    r.register(Arc::new(ListOp));
    r.register(Arc::new(CountAgg));
    r.register(Arc::new(MathOp));
    r.register(Arc::new(ValidTerms));
    r.register(Arc::new(NotRedundant));
    r.register(Arc::new(Recommended));
    r.register(Arc::new(VocabularyOnly));
    r.register(Arc::new(HttpScheme));
    r.register(Arc::new(Provenance));
    r.register(Arc::new(DefaultValue));
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("list cell {0} has no rdf:first")]
    MissingFirst(String),
    #[error("list cell {0} has several rdf:first values")]
    MultipleFirst(String),
    #[error("list cell {0} has no rdf:rest")]
    MissingRest(String),
    #[error("list cell {0} has several rdf:rest values")]
    MultipleRest(String),
    #[error("list revisits cell {0}")]
    Cycle(String),
    #[error("{0} is not a list")]
    NotAList(String),
}

/// Members of the `rdf:List` starting at `head`, in order.
pub fn read_list(g: &Graph, head: &Term) -> Result<Vec<Term>, ListError> {
    let (first, rest, nil) = (
        Term::iri(RDF_FIRST),
        Term::iri(RDF_REST),
        Term::iri(RDF_NIL),
    );
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut cell = head.clone();
    while cell != nil {
        if cell.is_literal() {
            return Err(ListError::NotAList(cell.to_string()));
        }
        if !seen.insert(cell.clone()) {
            return Err(ListError::Cycle(cell.to_string()));
        }
        let firsts: Vec<&Term> = g.objects(&cell, &first).collect();
        let rests: Vec<&Term> = g.objects(&cell, &rest).collect();
        match firsts.len() {
            0 => return Err(ListError::MissingFirst(cell.to_string())),
            1 => out.push(firsts[0].clone()),
            _ => return Err(ListError::MultipleFirst(cell.to_string())),
        }
        cell = match rests.len() {
            0 => return Err(ListError::MissingRest(cell.to_string())),
            1 => rests[0].clone(),
            _ => return Err(ListError::MultipleRest(cell.to_string())),
        };
    }
    Ok(out)
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

/// Values must be well-formed lists whose members fall in the filler.
struct Ordered;

impl ElementCheck for Ordered {
    check_meta!("ordered", Ordered);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            for y in left_fillers(row, scope, x) {
                match read_list(scope.graph, &y) {
                    Err(e) => out.push(Finding::new(x.clone(), format!("malformed list: {e}"))),
                    Ok(items) => {
                        for item in items.iter().filter(|i| !scope.member_all(i, &row.classes)) {
                            out.push(Finding::new(
                                x.clone(),
                                format!(
                                    "list member {} is not in {}",
                                    short(item),
                                    dl::class(&row.filler())
                                ),
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

enum ListQuery {
    Get(usize),
    Size(usize),
}

fn list_query(row: &GenericConstraint) -> Option<ListQuery> {
    let text = row.value.as_ref().and_then(ConstraintValue::as_text)?;
    let mut words = text.split_whitespace();
    let (op, n) = (words.next()?, words.next()?.parse().ok()?);
    match op {
        "get" => Some(ListQuery::Get(n)),
        "size" => Some(ListQuery::Size(n)),
        _ => None,
    }
}

/// Positional access: `get N` (zero-based) must land in the filler,
/// `size N` fixes the length.
struct ListOp;

impl ElementCheck for ListOp {
    check_meta!("list-op", ListOp);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let Some(query) = list_query(row) else {
            return scope
                .context(row)
                .iter()
                .map(|x| {
                    Finding::new(
                        x.clone(),
                        "unknown list operation; expected `get N` or `size N`",
                    )
                })
                .collect();
        };
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            for y in left_fillers(row, scope, x) {
                let items = match read_list(scope.graph, &y) {
                    Ok(items) => items,
                    Err(e) => {
                        out.push(Finding::new(x.clone(), format!("malformed list: {e}")));
                        continue;
                    }
                };
                match query {
                    ListQuery::Get(i) => match items.get(i) {
                        None => out.push(Finding::new(
                            x.clone(),
                            format!("list has no element at index {i}"),
                        )),
                        Some(item) if !scope.member_all(item, &row.classes) => {
                            out.push(Finding::new(
                                x.clone(),
                                format!(
                                    "element {i} is {}, not in {}",
                                    short(item),
                                    dl::class(&row.filler())
                                ),
                            ))
                        }
                        Some(_) => {}
                    },
                    ListQuery::Size(n) if items.len() != n => out.push(Finding::new(
                        x.clone(),
                        format!("list has {} elements, expected {n}", items.len()),
                    )),
                    ListQuery::Size(_) => {}
                }
            }
        }
        out
    }
}

fn as_f64(v: &Value) -> Option<f64> {
    match v {
        Value::Integer(i) => Some(*i as f64),
        Value::Decimal(d) | Value::Double(d) => Some(*d),
        _ => None,
    }
}

fn numbers(scope: &Scope, x: &Term, p: &PropertyRef) -> Vec<Option<f64>> {
    scope
        .successors(x, p)
        .iter()
        .map(|t| {
            t.as_literal()
                .and_then(|l| value_of(l).ok())
                .as_ref()
                .and_then(as_f64)
        })
        .collect()
}

/// The left value must equal the number of right fillers.
struct CountAgg;

impl ElementCheck for CountAgg {
    check_meta!("count", CountAgg);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let (Some(p), Some(q)) = (row.left.first(), row.right.first()) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            let count = scope
                .successors(x, q)
                .iter()
                .filter(|y| scope.filler_member(x, y, &row.classes))
                .count();
            let held = numbers(scope, x, p);
            if held.is_empty() {
                out.push(Finding::new(
                    x.clone(),
                    format!(
                        "no {} value to hold the count {count} of {}",
                        dl::property(p),
                        dl::property(q)
                    ),
                ));
            }
            for v in held {
                if v != Some(count as f64) {
                    let shown = v.map_or("a non-number".to_string(), |v| v.to_string());
                    out.push(Finding::new(
                        x.clone(),
                        format!(
                            "{} is {shown} but {} has {count} value(s)",
                            dl::property(p),
                            dl::property(q)
                        ),
                    ));
                }
            }
        }
        out
    }
}

/// `left = right[0] op right[1] op ...` on single numeric values.
struct MathOp;

type BinOp = fn(f64, f64) -> f64;

impl MathOp {
    fn op(row: &GenericConstraint) -> Option<(&'static str, BinOp)> {
        let text = row.value.as_ref().and_then(ConstraintValue::as_text)?;
        Some(match text {
            "multiplication" | "*" => ("*", |a, b| a * b),
            "addition" | "+" => ("+", |a, b| a + b),
            "subtraction" | "-" => ("-", |a, b| a - b),
            "division" | "/" => ("/", |a, b| a / b),
            _ => return None,
        })
    }
}

impl ElementCheck for MathOp {
    check_meta!("math", MathOp);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let Some(target) = row.left.first() else {
            return Vec::new();
        };
        let Some((sym, f)) = Self::op(row) else {
            return scope
                .context(row)
                .iter()
                .map(|x| Finding::new(x.clone(), "unknown arithmetic operator"))
                .collect();
        };
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            let mut operands = Vec::new();
            let mut ambiguous = None;
            for p in std::iter::once(target).chain(&row.right) {
                let vals = numbers(scope, x, p);
                match vals.as_slice() {
                    [] => break,
                    [Some(v)] => operands.push(*v),
                    [None] => {
                        ambiguous = Some(format!("{} is not numeric", dl::property(p)));
                        break;
                    }
                    _ => {
                        ambiguous = Some(format!("{} has {} values", dl::property(p), vals.len()));
                        break;
                    }
                }
            }
            if let Some(msg) = ambiguous {
                out.push(Finding::new(x.clone(), msg));
                continue;
            }
            if operands.len() != row.right.len() + 1 || operands.len() < 2 {
                continue;
            }
            let expected = operands[2..].iter().fold(operands[1], |acc, v| f(acc, *v));
            let actual = operands[0];
            if (expected - actual).abs() > 1e-9 * expected.abs().max(1.0) {
                let names: Vec<String> = row.right.iter().map(dl::property).collect();
                out.push(Finding::new(
                    x.clone(),
                    format!(
                        "{} is {actual} but {} = {expected}",
                        dl::property(target),
                        names.join(&format!(" {sym} "))
                    ),
                ));
            }
        }
        out
    }
}

/// Allowed (default) or forbidden (value `false`) classes and properties.
struct ValidTerms;

impl ElementCheck for ValidTerms {
    check_meta!("valid-terms", ValidClasses, ValidProperties);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let forbidden = matches!(
            row.value.as_ref().and_then(ConstraintValue::as_text),
            Some("false")
        );
        let rdf_type = Term::iri(RDF_TYPE);
        let listed: BTreeSet<String> = match row.element {
            Element::ValidClasses => row
                .classes
                .iter()
                .filter_map(|c| match c {
                    ClassRef::Named(i) => Some(i.clone()),
                    _ => None,
                })
                .collect(),
            _ => row
                .left
                .iter()
                .filter_map(|p| p.single().map(|s| s.iri.clone()))
                .collect(),
        };
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            let used: BTreeSet<String> = match row.element {
                Element::ValidClasses => scope
                    .graph
                    .objects(x, &rdf_type)
                    .filter_map(|t| t.as_iri().map(String::from))
                    .collect(),
                _ => scope
                    .graph
                    .with_subject(x)
                    .filter(|t| forbidden || t.predicate != rdf_type)
                    .filter_map(|t| t.predicate.as_iri().map(String::from))
                    .collect(),
            };
            let kind = if row.element == Element::ValidClasses {
                "class"
            } else {
                "property"
            };
            for u in used.iter().filter(|u| listed.contains(*u) == forbidden) {
                let why = if forbidden {
                    "is not allowed here"
                } else {
                    "is not among the valid ones"
                };
                out.push(Finding::new(
                    x.clone(),
                    format!("{kind} {} {why}", dl::local_name(u)),
                ));
            }
        }
        out
    }
}

/// A super-property value repeated under one of its sub-properties.
struct NotRedundant;

impl ElementCheck for NotRedundant {
    check_meta!("not-redundant", NotRedundant);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            let sup = left_fillers(row, scope, x);
            for q in &row.right {
                for v in scope.successors(x, q).intersection(&sup) {
                    out.push(Finding::new(
                        x.clone(),
                        format!(
                            "{} {} repeats the {} value",
                            props(&row.left),
                            short(v),
                            dl::property(q)
                        ),
                    ));
                }
            }
        }
        out
    }
}

struct Recommended;

impl ElementCheck for Recommended {
    check_meta!("recommended", Recommended);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            for p in &row.left {
                if scope.successors(x, p).is_empty() {
                    out.push(Finding::new(
                        x.clone(),
                        format!("recommended property {} is missing", dl::property(p)),
                    ));
                }
            }
        }
        out
    }
}

/// Predicates and classes must come from known namespaces.
struct VocabularyOnly;

impl ElementCheck for VocabularyOnly {
    check_meta!("vocabulary-only", VocabularyOnly);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let mut namespaces: Vec<String> = [RDF, RDFS, OWL, XSD]
            .iter()
            .map(|s| s.to_string())
            .collect();
        if let Some(ConstraintValue::Text(t)) = &row.value {
            namespaces.extend(t.split_whitespace().map(String::from));
        }
        if let Some(ConstraintValue::Term(Term::Iri(i))) = &row.value {
            namespaces.push(i.clone());
        }
        let known = |iri: &str| namespaces.iter().any(|ns| iri.starts_with(ns.as_str()));
        let rdf_type = Term::iri(RDF_TYPE);
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            let mut unknown = BTreeSet::new();
            for t in scope.graph.with_subject(x) {
                if let Some(p) = t.predicate.as_iri().filter(|p| !known(p)) {
                    unknown.insert(p.to_string());
                }
                if t.predicate == rdf_type {
                    if let Some(c) = t.object.as_iri().filter(|c| !known(c)) {
                        unknown.insert(c.to_string());
                    }
                }
            }
            for u in unknown {
                out.push(Finding::new(
                    x.clone(),
                    format!("<{u}> is outside the declared vocabularies"),
                ));
            }
        }
        out
    }
}

struct HttpScheme;

impl ElementCheck for HttpScheme {
    check_meta!("http-scheme", HttpUriScheme);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        scope
            .context(row)
            .iter()
            .filter_map(|x| {
                let iri = x.as_iri()?;
                let lower = iri.to_ascii_lowercase();
                (!(lower.starts_with("http://") || lower.starts_with("https://"))).then(|| {
                    Finding::new(
                        x.clone(),
                        format!("<{iri}> does not use the http or https scheme"),
                    )
                })
            })
            .collect()
    }
}

const PROVENANCE_DEFAULTS: &[&str] = &[
    "http://www.w3.org/ns/prov#wasGeneratedBy",
    "http://www.w3.org/ns/prov#wasAttributedTo",
    "http://www.w3.org/ns/prov#wasDerivedFrom",
    "http://purl.org/dc/terms/source",
    "http://purl.org/dc/terms/provenance",
];

/// Context instances need at least one provenance statement.
struct Provenance;

impl ElementCheck for Provenance {
    check_meta!("provenance", Provenance);
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let listed: Vec<PropertyRef> = match (&row.value, row.left.is_empty()) {
            (Some(ConstraintValue::Text(t)), _) => {
                t.split_whitespace().map(PropertyRef::iri).collect()
            }
            (_, false) => row.left.clone(),
            _ => PROVENANCE_DEFAULTS
                .iter()
                .map(|p| PropertyRef::iri(*p))
                .collect(),
        };
        scope
            .context(row)
            .iter()
            .filter(|x| listed.iter().all(|p| scope.successors(x, p).is_empty()))
            .map(|x| Finding::new(x.clone(), "no provenance statement"))
            .collect()
    }
}

/// Defaults are filled in by inference; nothing to check.
struct DefaultValue;

impl ElementCheck for DefaultValue {
    check_meta!("default-value", DefaultValue);
}
