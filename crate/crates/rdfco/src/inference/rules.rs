//! Named forward-chaining rules. Each rule reports the triples it derives
//! using at least one triple of `delta`, reading the rest from `full`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::schema::Schema;
use crate::model::{PropertyRef, Step};
use crate::rdf::vocab::{OWL_SAME_AS, RDF_TYPE};
use crate::rdf::{Graph, Term, Triple};

pub trait InferenceRule: Send + Sync {
    fn name(&self) -> &'static str;

    /// Rules that equate individuals; off under unique names.
    fn merges(&self) -> bool {
        false
    }

    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>);
}

#[derive(Clone)]
pub struct RuleRegistry {
    rules: Vec<Arc<dyn InferenceRule>>,
}

impl RuleRegistry {
    pub fn standard() -> Self {
        RuleRegistry {
            rules: vec![
                Arc::new(Subclass),
                Arc::new(Subproperty),
                Arc::new(Equivalence),
                Arc::new(Domain),
                Arc::new(Range),
                Arc::new(Inverse),
                Arc::new(Symmetric),
                Arc::new(Transitive),
                Arc::new(Reflexive),
                Arc::new(Functional),
                Arc::new(InverseFunctional),
                Arc::new(Key),
                Arc::new(SameAs),
            ],
        }
    }

    pub fn register(&mut self, rule: Arc<dyn InferenceRule>) {
        self.rules.retain(|r| r.name() != rule.name());
        self.rules.push(rule);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.rules.iter().map(|r| r.name())
    }

    pub fn get(&self, name: &str) -> Option<&Arc<dyn InferenceRule>> {
        self.rules.iter().find(|r| r.name() == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn InferenceRule>> {
        self.rules.iter()
    }
}

fn pred(step: &Step) -> Term {
    Term::iri(step.iri.clone())
}

/// Pairs linked by one step.
fn step_pairs(g: &Graph, step: &Step) -> Vec<(Term, Term)> {
    g.with_predicate(&pred(step))
        .map(|t| {
            if step.inverse {
                (t.object.clone(), t.subject.clone())
            } else {
                (t.subject.clone(), t.object.clone())
            }
        })
        .collect()
}

fn step_next(g: &Graph, step: &Step, x: &Term) -> Vec<Term> {
    if step.inverse {
        g.subjects(&pred(step), x).cloned().collect()
    } else {
        g.objects(x, &pred(step)).cloned().collect()
    }
}

fn step_prev(g: &Graph, step: &Step, y: &Term) -> Vec<Term> {
    if step.inverse {
        g.objects(y, &pred(step)).cloned().collect()
    } else {
        g.subjects(&pred(step), y).cloned().collect()
    }
}

/// Pairs linked by the whole path where some edge comes from `delta`.
pub(crate) fn chain_pairs(full: &Graph, delta: &Graph, p: &PropertyRef) -> BTreeSet<(Term, Term)> {
    let steps = &p.steps;
    let mut out = BTreeSet::new();
    for (i, step) in steps.iter().enumerate() {
        for (a, b) in step_pairs(delta, step) {
            let mut starts = BTreeSet::from([a]);
            for s in steps[..i].iter().rev() {
                starts = starts.iter().flat_map(|x| step_prev(full, s, x)).collect();
            }
            let mut ends = BTreeSet::from([b]);
            for s in &steps[i + 1..] {
                ends = ends.iter().flat_map(|x| step_next(full, s, x)).collect();
            }
            for x in &starts {
                for y in &ends {
                    out.insert((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

/// Asserts `x p y` for a single-step property, if it can be written.
fn emit(out: &mut Vec<Triple>, p: &PropertyRef, x: &Term, y: &Term) {
    let Some(step) = p.single() else { return };
    let (s, o) = if step.inverse { (y, x) } else { (x, y) };
    if s.is_node() {
        out.push(Triple::new(s.clone(), pred(step), o.clone()));
    }
}

fn emit_type(out: &mut Vec<Triple>, x: &Term, class: &str) {
    if x.is_node() {
        out.push(Triple::new(
            x.clone(),
            Term::iri(RDF_TYPE),
            Term::iri(class),
        ));
    }
}

fn emit_same(out: &mut Vec<Triple>, a: &Term, b: &Term) {
    if a != b && a.is_node() && b.is_node() {
        out.push(Triple::new(a.clone(), Term::iri(OWL_SAME_AS), b.clone()));
        out.push(Triple::new(b.clone(), Term::iri(OWL_SAME_AS), a.clone()));
    }
}

fn typed<'a>(g: &'a Graph, class: &str) -> impl Iterator<Item = (Term, Term)> + 'a {
    let ty = Term::iri(RDF_TYPE);
    let c = Term::iri(class);
    g.with_predicate(&ty)
        .filter(move |t| t.object == c)
        .map(|t| (t.subject.clone(), t.object.clone()))
}

fn subclass_step(out: &mut Vec<Triple>, delta: &Graph, sub: &str, sup: &str) {
    for (x, _) in typed(delta, sub) {
        emit_type(out, &x, sup);
    }
}

fn subproperty_step(
    out: &mut Vec<Triple>,
    full: &Graph,
    delta: &Graph,
    sub: &PropertyRef,
    sup: &PropertyRef,
) {
    for (x, y) in chain_pairs(full, delta, sub) {
        emit(out, sup, &x, &y);
    }
}

struct Subclass;

impl InferenceRule for Subclass {
    fn name(&self) -> &'static str {
        "subclass"
    }
    fn fire(&self, schema: &Schema, _full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for (a, b) in &schema.subclass {
            subclass_step(out, delta, a, b);
        }
    }
}

struct Subproperty;

impl InferenceRule for Subproperty {
    fn name(&self) -> &'static str {
        "subproperty"
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for (sub, sup) in &schema.subproperty {
            subproperty_step(out, full, delta, sub, sup);
        }
    }
}

struct Equivalence;

impl InferenceRule for Equivalence {
    fn name(&self) -> &'static str {
        "equivalence"
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for (a, b) in &schema.class_equiv {
            subclass_step(out, delta, a, b);
            subclass_step(out, delta, b, a);
        }
        for (p, q) in &schema.property_equiv {
            subproperty_step(out, full, delta, p, q);
            subproperty_step(out, full, delta, q, p);
        }
    }
}

struct Domain;

impl InferenceRule for Domain {
    fn name(&self) -> &'static str {
        "domain"
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for (p, c) in &schema.domain {
            for (x, _) in chain_pairs(full, delta, p) {
                emit_type(out, &x, c);
            }
        }
    }
}

struct Range;

impl InferenceRule for Range {
    fn name(&self) -> &'static str {
        "range"
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for (p, c) in &schema.range {
            for (_, y) in chain_pairs(full, delta, p) {
                emit_type(out, &y, c);
            }
        }
        let ty = Term::iri(RDF_TYPE);
        for (p, r, c) in &schema.specific_range {
            let rt = Term::iri(r.clone());
            for (x, y) in chain_pairs(full, delta, p) {
                if full.has(&y, &ty, &rt) {
                    emit_type(out, &x, c);
                }
            }
            // new typing of an existing target
            let inv = p.inverted();
            for (y, _) in typed(delta, r) {
                for x in successors(full, &y, &inv) {
                    emit_type(out, &x, c);
                }
            }
        }
    }
}

pub(crate) fn successors(g: &Graph, x: &Term, p: &PropertyRef) -> BTreeSet<Term> {
    let mut cur = BTreeSet::from([x.clone()]);
    for s in &p.steps {
        cur = cur.iter().flat_map(|n| step_next(g, s, n)).collect();
    }
    cur
}

struct Inverse;

impl InferenceRule for Inverse {
    fn name(&self) -> &'static str {
        "inverse"
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for (p, q) in &schema.inverse {
            for (x, y) in chain_pairs(full, delta, p) {
                emit(out, q, &y, &x);
            }
            for (x, y) in chain_pairs(full, delta, q) {
                emit(out, p, &y, &x);
            }
        }
    }
}

struct Symmetric;

impl InferenceRule for Symmetric {
    fn name(&self) -> &'static str {
        "symmetric"
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for p in &schema.symmetric {
            for (x, y) in chain_pairs(full, delta, p) {
                emit(out, p, &y, &x);
            }
        }
    }
}

struct Transitive;

impl InferenceRule for Transitive {
    fn name(&self) -> &'static str {
        "transitive"
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for p in &schema.transitive {
            let pp = PropertyRef {
                steps: [p.steps.clone(), p.steps.clone()].concat(),
            };
            subproperty_step(out, full, delta, &pp, p);
        }
    }
}

/// `x p x` for every node.
struct Reflexive;

impl InferenceRule for Reflexive {
    fn name(&self) -> &'static str {
        "reflexive"
    }
    fn fire(&self, schema: &Schema, _full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        if schema.reflexive.is_empty() {
            return;
        }
        for x in delta.nodes() {
            for p in &schema.reflexive {
                emit(out, p, &x, &x);
            }
        }
    }
}

struct Functional;

impl InferenceRule for Functional {
    fn name(&self) -> &'static str {
        "functional"
    }
    fn merges(&self) -> bool {
        true
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for p in &schema.functional {
            for (x, y) in chain_pairs(full, delta, p) {
                for z in successors(full, &x, p) {
                    emit_same(out, &y, &z);
                }
            }
        }
    }
}

struct InverseFunctional;

impl InferenceRule for InverseFunctional {
    fn name(&self) -> &'static str {
        "inverse-functional"
    }
    fn merges(&self) -> bool {
        true
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        for p in &schema.inverse_functional {
            let inv = p.inverted();
            for (x, y) in chain_pairs(full, delta, p) {
                for w in successors(full, &y, &inv) {
                    emit_same(out, &x, &w);
                }
            }
        }
    }
}

/// Context members agreeing on some value of every key property.
struct Key;

impl InferenceRule for Key {
    fn name(&self) -> &'static str {
        "key"
    }
    fn merges(&self) -> bool {
        true
    }
    fn fire(&self, schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        if schema.keys.is_empty() {
            return;
        }
        let touched = delta.terms();
        for (class, props) in &schema.keys {
            if props.is_empty() {
                continue;
            }
            let members: BTreeSet<Term> = match class {
                Some(c) => typed(full, c).map(|(x, _)| x).collect(),
                None => full.nodes(),
            };
            let values: BTreeMap<&Term, Vec<BTreeSet<Term>>> = members
                .iter()
                .map(|x| (x, props.iter().map(|p| successors(full, x, p)).collect()))
                .collect();
            for a in members.iter().filter(|a| touched.contains(*a)) {
                for b in &members {
                    if a == b {
                        continue;
                    }
                    let shared = values[a]
                        .iter()
                        .zip(&values[b])
                        .all(|(va, vb)| va.intersection(vb).next().is_some());
                    if shared {
                        emit_same(out, a, b);
                    }
                }
            }
        }
    }
}

/// Symmetry and transitivity of `owl:sameAs`.
struct SameAs;

impl InferenceRule for SameAs {
    fn name(&self) -> &'static str {
        "same-as"
    }
    fn merges(&self) -> bool {
        true
    }
    fn fire(&self, _schema: &Schema, full: &Graph, delta: &Graph, out: &mut Vec<Triple>) {
        let same = Term::iri(OWL_SAME_AS);
        for t in delta.with_predicate(&same) {
            let (x, y) = (&t.subject, &t.object);
            emit_same(out, x, y);
            for z in full.objects(y, &same) {
                emit_same(out, x, z);
            }
            for w in full.subjects(&same, x) {
                emit_same(out, w, y);
            }
        }
    }
}
