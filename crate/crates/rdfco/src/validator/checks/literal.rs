//! Tests on literal values and lexical forms.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use regex::Regex;

use super::{left_fillers, short, CheckRegistry, ElementCheck, Finding};
use crate::model::{
    dl, ClassRef, CompareOp, ConstraintValue, ContextKind, Element, GenericConstraint,
};
use crate::rdf::value::{is_known_datatype, parse_value, Value};
use crate::rdf::Term;
use crate::validator::env::Scope;

pub(super) fn register(r: &mut CheckRegistry) {
    r.register(Arc::new(ValueTest));
    r.register(Arc::new(Compare));
    r.register(Arc::new(LangCard));
    r.register(Arc::new(Whitespace));
    r.register(Arc::new(HtmlFree));
}

pub(crate) fn regex(src: &str) -> Option<Regex> {
    static CACHE: OnceLock<Mutex<HashMap<String, Option<Regex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut map = cache.lock().unwrap_or_else(|e| e.into_inner());
    map.entry(src.to_string())
        .or_insert_with(|| Regex::new(src).ok())
        .clone()
}

/// Why a value failed: a message and, if different from the row's, the
/// element the failure belongs to.
type Failure = (String, Option<Element>);

fn fail<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err((msg.into(), None))
}

/// Datatype a literal is read in: the row's first datatype class if any.
fn base_datatype<'a>(row: &'a GenericConstraint, lit_dt: &'a str) -> &'a str {
    match row.classes.first() {
        Some(ClassRef::Datatype(dt)) => dt,
        _ => lit_dt,
    }
}

fn parse_in(row: &GenericConstraint, t: &Term) -> Result<Option<Value>, Failure> {
    let Some(lit) = t.as_literal() else {
        return fail(format!("{} is not a literal", short(t)));
    };
    let dt = base_datatype(row, lit.datatype());
    if !is_known_datatype(dt) {
        return Ok(None);
    }
    parse_value(lit.lexical(), dt).map(Some).map_err(|_| {
        (
            format!(
                "\"{}\" is not a valid {}",
                lit.lexical(),
                dl::local_name(dt)
            ),
            Some(Element::ValueValidForDatatype),
        )
    })
}

fn text_of(t: &Term) -> Option<&str> {
    match t {
        Term::Iri(i) => Some(i),
        Term::Literal(l) => Some(l.lexical()),
        Term::Blank(_) => None,
    }
}

fn facets_hold(
    row: &GenericConstraint,
    t: &Term,
    facets: &[(String, String)],
) -> Result<bool, Failure> {
    let value = parse_in(row, t)?;
    let lexical = t.as_literal().map(|l| l.lexical()).unwrap_or_default();
    let dt = base_datatype(
        row,
        t.as_literal().map(|l| l.datatype()).unwrap_or_default(),
    )
    .to_string();
    for (name, bound) in facets {
        let ok = match name.as_str() {
            "minInclusive" | "maxInclusive" | "minExclusive" | "maxExclusive" => {
                let Some(v) = &value else { return Ok(false) };
                let b = parse_value(bound, &dt).map_err(|_| {
                    (
                        format!(
                            "facet {name}={bound} is not a valid {}",
                            dl::local_name(&dt)
                        ),
                        None,
                    )
                })?;
                match v.compare(&b) {
                    None => false,
                    Some(ord) => match name.as_str() {
                        "minInclusive" => ord != Ordering::Less,
                        "maxInclusive" => ord != Ordering::Greater,
                        "minExclusive" => ord == Ordering::Greater,
                        _ => ord == Ordering::Less,
                    },
                }
            }
            "length" | "minLength" | "maxLength" => {
                let n: usize = bound
                    .parse()
                    .map_err(|_| (format!("facet {name}={bound} is not a count"), None))?;
                let len = lexical.chars().count();
                match name.as_str() {
                    "length" => len == n,
                    "minLength" => len >= n,
                    _ => len <= n,
                }
            }
            "pattern" => regex(bound).is_some_and(|re| re.is_match(lexical)),
            _ => true,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn facet_text(facets: &[(String, String)]) -> String {
    facets
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// RFC 4647 basic filtering.
fn lang_matches(tag: &str, range: &str) -> bool {
    let (tag, range) = (tag.to_ascii_lowercase(), range.to_ascii_lowercase());
    range == "*" || tag == range || tag.starts_with(&format!("{range}-"))
}

/// Single-value tests usable both as classes and as property checks.
struct ValueTest;

impl ValueTest {
    fn test(row: &GenericConstraint, t: &Term) -> Result<(), Failure> {
        match row.element {
            Element::Pattern | Element::NegPattern => {
                let src = row
                    .value
                    .as_ref()
                    .and_then(ConstraintValue::as_text)
                    .unwrap_or_default();
                let Some(text) = text_of(t) else {
                    return fail(format!("{} has no lexical form", short(t)));
                };
                let Some(re) = regex(src) else {
                    return fail(format!("invalid pattern {src}"));
                };
                let matched = re.is_match(text);
                match (row.element, matched) {
                    (Element::Pattern, false) => fail(format!("\"{text}\" does not match {src}")),
                    (Element::NegPattern, true) => {
                        fail(format!("\"{text}\" matches excluded pattern {src}"))
                    }
                    _ => Ok(()),
                }
            }
            Element::FacetRange | Element::NegFacetRange => {
                let Some(ConstraintValue::Facets(f)) = &row.value else {
                    return Ok(());
                };
                let inside = facets_hold(row, t, f)?;
                match (row.element, inside) {
                    (Element::FacetRange, false) => {
                        fail(format!("{} outside [{}]", short(t), facet_text(f)))
                    }
                    (Element::NegFacetRange, true) => {
                        fail(format!("{} inside excluded [{}]", short(t), facet_text(f)))
                    }
                    _ => Ok(()),
                }
            }
            Element::StringLength => {
                let n = row
                    .value
                    .as_ref()
                    .and_then(ConstraintValue::as_int)
                    .unwrap_or(0) as usize;
                let Some(lit) = t.as_literal() else {
                    return fail(format!("{} is not a literal", short(t)));
                };
                let len = lit.lexical().chars().count();
                if len == n {
                    Ok(())
                } else {
                    fail(format!(
                        "\"{}\" has length {len}, expected {n}",
                        lit.lexical()
                    ))
                }
            }
            Element::LangTag => {
                let ranges = row
                    .value
                    .as_ref()
                    .and_then(ConstraintValue::as_text)
                    .unwrap_or_default();
                let Some(lit) = t.as_literal() else {
                    return fail(format!("{} is not a literal", short(t)));
                };
                match lit.language() {
                    Some(tag)
                        if ranges
                            .split([' ', ','])
                            .filter(|r| !r.is_empty())
                            .any(|r| lang_matches(tag, r)) =>
                    {
                        Ok(())
                    }
                    Some(tag) => fail(format!(
                        "{} has language {tag}, allowed: {ranges}",
                        short(t)
                    )),
                    None => fail(format!(
                        "{} has no language tag, allowed: {ranges}",
                        short(t)
                    )),
                }
            }
            // ValueValidForDatatype
            _ => parse_in(row, t).map(|_| ()),
        }
    }
}

impl ElementCheck for ValueTest {
    fn name(&self) -> &'static str {
        "literal-value"
    }
    fn elements(&self) -> &'static [Element] {
        &[
            Element::Pattern,
            Element::NegPattern,
            Element::FacetRange,
            Element::NegFacetRange,
            Element::StringLength,
            Element::LangTag,
            Element::ValueValidForDatatype,
        ]
    }
    fn definable(&self) -> bool {
        true
    }
    fn holds(&self, row: &GenericConstraint, scope: &Scope, x: &Term) -> bool {
        match row.context_kind {
            ContextKind::Class => Self::test(row, x).is_ok(),
            ContextKind::Property => left_fillers(row, scope, x)
                .iter()
                .all(|y| Self::test(row, y).is_ok()),
        }
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            let values = match row.context_kind {
                ContextKind::Class => vec![x.clone()],
                ContextKind::Property => left_fillers(row, scope, x).into_iter().collect(),
            };
            for y in values {
                if let Err((msg, element)) = Self::test(row, &y) {
                    let f = Finding::new(x.clone(), msg);
                    out.push(match element {
                        Some(e) if e != row.element => f.as_element(e),
                        _ => f,
                    });
                }
            }
        }
        out
    }
}

/// Ordering between the values of two properties of the same node.
struct Compare;

impl ElementCheck for Compare {
    fn name(&self) -> &'static str {
        "compare"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::Compare]
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let op = row
            .value
            .as_ref()
            .and_then(ConstraintValue::as_text)
            .and_then(CompareOp::parse)
            .unwrap_or(CompareOp::Eq);
        let (Some(lp), Some(rp)) = (row.left.first(), row.right.first()) else {
            return Vec::new();
        };
        let same = lp == rp;
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            let ls = scope.successors(x, lp);
            let rs = scope.successors(x, rp);
            let mut problem = None;
            'pairs: for l in &ls {
                for r in &rs {
                    if same && l == r {
                        continue;
                    }
                    let lv = l.as_literal().and_then(|v| crate::rdf::value_of(v).ok());
                    let rv = r.as_literal().and_then(|v| crate::rdf::value_of(v).ok());
                    let ord = match (lv, rv) {
                        (Some(a), Some(b)) => a.compare(&b),
                        _ => None,
                    };
                    match ord {
                        Some(o) if op.holds(o) => {}
                        Some(_) => {
                            problem = Some(format!(
                                "{} {} {} does not hold for {} {} {}",
                                dl::property(lp),
                                op.symbol(),
                                dl::property(rp),
                                short(l),
                                op.symbol(),
                                short(r)
                            ));
                            break 'pairs;
                        }
                        None => {
                            problem =
                                Some(format!("{} and {} are not comparable", short(l), short(r)));
                            break 'pairs;
                        }
                    }
                }
            }
            if let Some(msg) = problem {
                out.push(Finding::new(x.clone(), msg));
            }
        }
        out
    }
}

/// Each language used must occur exactly `n` times.
struct LangCard;

impl ElementCheck for LangCard {
    fn name(&self) -> &'static str {
        "lang-card"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::LangTagCard]
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let n = row
            .value
            .as_ref()
            .and_then(ConstraintValue::as_int)
            .unwrap_or(1) as usize;
        let mut out = Vec::new();
        for x in scope.context(row).iter() {
            let mut counts: BTreeMap<String, usize> = BTreeMap::new();
            for y in left_fillers(row, scope, x) {
                if let Some(tag) = y.as_literal().and_then(|l| l.language()) {
                    *counts.entry(tag.to_string()).or_default() += 1;
                }
            }
            let bad: Vec<String> = counts
                .iter()
                .filter(|(_, &c)| c != n)
                .map(|(t, c)| format!("{c}×@{t}"))
                .collect();
            if !bad.is_empty() {
                out.push(Finding::new(
                    x.clone(),
                    format!("{} per language expected, found {}", n, bad.join(", ")),
                ));
            }
        }
        out
    }
}

fn per_literal(
    row: &GenericConstraint,
    scope: &Scope,
    bad: impl Fn(&str) -> Option<String>,
) -> Vec<Finding> {
    let mut out = Vec::new();
    for x in scope.context(row).iter() {
        let values = match row.context_kind {
            ContextKind::Class => vec![x.clone()],
            ContextKind::Property => left_fillers(row, scope, x).into_iter().collect(),
        };
        for y in values {
            if let Some(msg) = y.as_literal().and_then(|l| bad(l.lexical())) {
                out.push(Finding::new(x.clone(), msg));
            }
        }
    }
    out
}

struct Whitespace;

impl ElementCheck for Whitespace {
    fn name(&self) -> &'static str {
        "whitespace"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::Whitespace]
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let internal =
            row.value.as_ref().and_then(ConstraintValue::as_text) == Some("none-internal");
        per_literal(row, scope, |s| {
            if s.starts_with(char::is_whitespace) || s.ends_with(char::is_whitespace) {
                Some(format!("\"{s}\" has leading or trailing whitespace"))
            } else if internal && s.contains(char::is_whitespace) {
                Some(format!("\"{s}\" contains whitespace"))
            } else {
                None
            }
        })
    }
}

struct HtmlFree;

impl ElementCheck for HtmlFree {
    fn name(&self) -> &'static str {
        "html-free"
    }
    fn elements(&self) -> &'static [Element] {
        &[Element::HtmlFree]
    }
    fn check(&self, row: &GenericConstraint, scope: &Scope) -> Vec<Finding> {
        let tag = regex(r"<[A-Za-z][^>]*>").expect("static pattern");
        per_literal(row, scope, |s| {
            tag.find(s)
                .map(|m| format!("\"{s}\" contains markup {}", m.as_str()))
        })
    }
}
