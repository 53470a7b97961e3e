//! Random graphs, random class trees and a brute-force set-algebra oracle,
//! shared by the crate's property tests and the acceptance target.
#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use rdfco::model::{
    parse_rcf, resolve, ClassRef, ConstraintSet, ConstraintValue, ContextKind, Element,
    GenericConstraint, Mode, PropertyRef, ResolvedSet,
};
use rdfco::rdf::vocab::RDF_TYPE;
use rdfco::rdf::{Graph, Term, Triple};

pub const EX: &str = "http://example.org/";
pub const INDIVIDUALS: usize = 8;
pub const CLASSES: [&str; 2] = ["A", "B"];
pub const PROPERTIES: [&str; 2] = ["p", "q"];

pub fn ex(local: &str) -> String {
    format!("{EX}{local}")
}

/// Individual `i`; the last one is a blank node.
pub fn individual(i: usize) -> Term {
    if i + 1 == INDIVIDUALS {
        Term::blank("b")
    } else {
        Term::iri(ex(&format!("n{i}")))
    }
}

fn literal(i: usize) -> Term {
    Term::string(format!("l{i}"))
}

#[derive(Clone, Debug)]
enum Object {
    Node(usize),
    Literal(usize),
}

#[derive(Clone, Debug)]
enum Edge {
    Typed(usize, usize),
    Link(usize, usize, Object),
}

fn edge() -> impl Strategy<Value = Edge> {
    let object = prop_oneof![
        4 => (0..INDIVIDUALS).prop_map(Object::Node),
        1 => (0..2usize).prop_map(Object::Literal),
    ];
    prop_oneof![
        1 => (0..INDIVIDUALS, 0..CLASSES.len()).prop_map(|(s, c)| Edge::Typed(s, c)),
        3 => (0..INDIVIDUALS, 0..PROPERTIES.len(), object).prop_map(|(s, p, o)| Edge::Link(s, p, o)),
    ]
}

fn to_triple(e: Edge) -> Triple {
    match e {
        Edge::Typed(s, c) => Triple::new(
            individual(s),
            Term::iri(RDF_TYPE),
            Term::iri(ex(CLASSES[c])),
        ),
        Edge::Link(s, p, o) => {
            let o = match o {
                Object::Node(i) => individual(i),
                Object::Literal(i) => literal(i),
            };
            Triple::new(individual(s), Term::iri(ex(PROPERTIES[p])), o)
        }
    }
}

/// At most 10 node terms (8 individuals, 2 classes) and 25 triples.
pub fn small_graph() -> impl Strategy<Value = Graph> {
    prop::collection::vec(edge(), 0..=25).prop_map(|es| es.into_iter().map(to_triple).collect())
}

/// A graph and a second one containing it.
pub fn nested_graphs() -> impl Strategy<Value = (Graph, Graph)> {
    (
        prop::collection::vec(edge(), 0..=15),
        prop::collection::vec(edge(), 0..=10),
    )
        .prop_map(|(a, b)| {
            let small: Graph = a.iter().cloned().map(to_triple).collect();
            let big: Graph = a.into_iter().chain(b).map(to_triple).collect();
            (small, big)
        })
}

#[derive(Clone, Copy, Debug)]
pub struct Prop {
    pub index: usize,
    pub inverse: bool,
}

impl Prop {
    fn reference(self) -> PropertyRef {
        let iri = ex(PROPERTIES[self.index]);
        if self.inverse {
            PropertyRef::inverse_of(iri)
        } else {
            PropertyRef::iri(iri)
        }
    }
}

/// Class expressions; a quantifier without a filler is unqualified.
#[derive(Clone, Debug)]
pub enum Cls {
    Top,
    Named(usize),
    And(Vec<Cls>),
    Or(Vec<Cls>),
    Not(Box<Cls>),
    Exists(Prop, Option<Box<Cls>>),
    ForAll(Prop, Option<Box<Cls>>),
    Min(i64, Prop, Option<Box<Cls>>),
    Max(i64, Prop, Option<Box<Cls>>),
}

fn prop_ref() -> impl Strategy<Value = Prop> {
    (0..PROPERTIES.len(), prop::bool::weighted(0.25))
        .prop_map(|(index, inverse)| Prop { index, inverse })
}

/// Trees of depth at most 3 over ⊓ ⊔ ¬ ∃ ∀ ≥ ≤.
pub fn class_tree() -> impl Strategy<Value = Cls> {
    let leaf = prop_oneof![1 => Just(Cls::Top), 3 => (0..CLASSES.len()).prop_map(Cls::Named)];
    leaf.prop_recursive(3, 24, 3, |inner| {
        let filler = prop::option::weighted(0.7, inner.clone().prop_map(Box::new));
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..=3).prop_map(Cls::And),
            prop::collection::vec(inner.clone(), 1..=3).prop_map(Cls::Or),
            inner.clone().prop_map(|c| Cls::Not(Box::new(c))),
            (prop_ref(), filler.clone()).prop_map(|(p, f)| Cls::Exists(p, f)),
            (prop_ref(), filler.clone()).prop_map(|(p, f)| Cls::ForAll(p, f)),
            (0..=3i64, prop_ref(), filler.clone()).prop_map(|(n, p, f)| Cls::Min(n, p, f)),
            (0..=2i64, prop_ref(), filler).prop_map(|(n, p, f)| Cls::Max(n, p, f)),
        ]
    })
}

/// DEFINE rows for `c`; returns the class naming the whole tree.
pub fn compile(c: &Cls) -> (ClassRef, ResolvedSet) {
    let mut rows = Vec::new();
    let root = lower(c, &mut rows);
    (
        root,
        resolve(ConstraintSet::new(rows)).expect("generated rows resolve"),
    )
}

fn lower(c: &Cls, rows: &mut Vec<GenericConstraint>) -> ClassRef {
    let boolean = |rows: &mut Vec<GenericConstraint>, el: Element, classes: Vec<ClassRef>| {
        let id = format!("c{}", rows.len());
        rows.push(
            GenericConstraint::new(
                &id,
                Mode::Define,
                ContextKind::Class,
                ClassRef::Defined(id.clone()),
                el,
            )
            .with_classes(classes),
        );
        ClassRef::Defined(id)
    };
    let quant = |rows: &mut Vec<GenericConstraint>,
                 el: Element,
                 p: Prop,
                 f: &Option<Box<Cls>>,
                 n: Option<i64>| {
        let classes = f.as_ref().map(|f| vec![lower(f, rows)]).unwrap_or_default();
        let id = format!("c{}", rows.len());
        let mut row = GenericConstraint::new(
            &id,
            Mode::Define,
            ContextKind::Property,
            ClassRef::Defined(id.clone()),
            el,
        )
        .with_left(vec![p.reference()])
        .with_classes(classes);
        if let Some(n) = n {
            row = row.with_value(ConstraintValue::Int(n));
        }
        rows.push(row);
        ClassRef::Defined(id)
    };
    match c {
        Cls::Top => ClassRef::Top,
        Cls::Named(i) => ClassRef::Named(ex(CLASSES[*i])),
        Cls::And(cs) => {
            let parts = cs.iter().map(|c| lower(c, rows)).collect();
            boolean(rows, Element::Intersection, parts)
        }
        Cls::Or(cs) => {
            let parts = cs.iter().map(|c| lower(c, rows)).collect();
            boolean(rows, Element::Union, parts)
        }
        Cls::Not(c) => {
            let part = lower(c, rows);
            boolean(rows, Element::Negation, vec![part])
        }
        Cls::Exists(p, f) => quant(rows, Element::Exists, *p, f, None),
        Cls::ForAll(p, f) => quant(rows, Element::ForAll, *p, f, None),
        Cls::Min(n, p, f) => quant(rows, Element::MinCard, *p, f, Some(*n)),
        Cls::Max(n, p, f) => quant(rows, Element::MaxCard, *p, f, Some(*n)),
    }
}

/// Set-algebra evaluation straight off the triple list. The universe is
/// every subject or object term; `⊤` holds for the non-literal ones.
pub struct Oracle {
    triples: Vec<(Term, Term, Term)>,
    universe: BTreeSet<Term>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let triples: Vec<_> = g
            .iter()
            .map(|t| (t.subject.clone(), t.predicate.clone(), t.object.clone()))
            .collect();
        let universe = triples
            .iter()
            .flat_map(|(s, _, o)| [s.clone(), o.clone()])
            .collect();
        Oracle { triples, universe }
    }

    fn neighbours(&self, x: &Term, p: Prop) -> BTreeSet<Term> {
        let pred = Term::iri(ex(PROPERTIES[p.index]));
        let mut out = BTreeSet::new();
        for (s, q, o) in &self.triples {
            if *q != pred {
                continue;
            }
            if !p.inverse && s == x {
                out.insert(o.clone());
            }
            if p.inverse && o == x {
                out.insert(s.clone());
            }
        }
        out
    }

    fn filler(&self, f: &Option<Box<Cls>>) -> BTreeSet<Term> {
        match f {
            Some(c) => self.eval(c),
            None => self.universe.clone(),
        }
    }

    fn count(&self, x: &Term, p: Prop, f: &Option<Box<Cls>>) -> i64 {
        let fill = self.filler(f);
        self.neighbours(x, p).intersection(&fill).count() as i64
    }

    pub fn eval(&self, c: &Cls) -> BTreeSet<Term> {
        let all = || self.universe.iter().cloned();
        match c {
            Cls::Top => all().filter(|t| !matches!(t, Term::Literal(_))).collect(),
            Cls::Named(i) => {
                let class = Term::iri(ex(CLASSES[*i]));
                let ty = Term::iri(RDF_TYPE);
                self.triples
                    .iter()
                    .filter(|(_, p, o)| *p == ty && *o == class)
                    .map(|(s, _, _)| s.clone())
                    .collect()
            }
            Cls::And(cs) => {
                let mut acc: BTreeSet<Term> = all().collect();
                for c in cs {
                    let e = self.eval(c);
                    acc.retain(|t| e.contains(t));
                }
                acc
            }
            Cls::Or(cs) => cs.iter().flat_map(|c| self.eval(c)).collect(),
            Cls::Not(c) => {
                let e = self.eval(c);
                all().filter(|t| !e.contains(t)).collect()
            }
            Cls::Exists(p, f) => {
                let fill = self.filler(f);
                all()
                    .filter(|x| self.neighbours(x, *p).iter().any(|y| fill.contains(y)))
                    .collect()
            }
            Cls::ForAll(p, f) => {
                let fill = self.filler(f);
                all()
                    .filter(|x| self.neighbours(x, *p).iter().all(|y| fill.contains(y)))
                    .collect()
            }
            Cls::Min(n, p, f) => all().filter(|x| self.count(x, *p, f) >= *n).collect(),
            Cls::Max(n, p, f) => all().filter(|x| self.count(x, *p, f) <= *n).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Axiom {
    Subclass(usize, usize),
    Subproperty(usize, usize),
    Equivalent(usize, usize),
    Domain(usize, usize),
    Range(usize, usize),
    Inverse(usize, usize),
    Symmetric(usize),
    Transitive(usize),
    Functional(usize),
    Default(usize, usize, usize),
}

impl Axiom {
    /// Rules whose conclusions only grow with their premises.
    pub fn is_monotone(&self) -> bool {
        !matches!(self, Axiom::Functional(_) | Axiom::Default(..))
    }

    fn rcf(&self, i: usize) -> String {
        let c = |k: usize| format!("ex:{}", CLASSES[k]);
        let p = |k: usize| format!("ex:{}", PROPERTIES[k]);
        let prop = |left: String, right: &str, classes: &str, el: &str| {
            format!(
                "constraint ax{i} {{ mode: assert; contextKind: property; context: TOP; left: {left}; right: {right}; classes: {classes}; element: {el}; value: - }}\n"
            )
        };
        match *self {
            Axiom::Subclass(a, b) => format!(
                "constraint ax{i} {{ mode: assert; contextKind: class; context: {}; left: -; right: -; classes: {}; element: subClassOf; value: - }}\n",
                c(a),
                c(b)
            ),
            Axiom::Subproperty(a, b) => prop(p(a), &p(b), "-", "subPropertyOf"),
            Axiom::Equivalent(a, b) => prop(p(a), &p(b), "-", "propertyEquiv"),
            Axiom::Domain(a, k) => prop(p(a), "-", &c(k), "domain"),
            Axiom::Range(a, k) => prop(p(a), "-", &c(k), "range"),
            Axiom::Inverse(a, b) => prop(p(a), &p(b), "-", "inverse"),
            Axiom::Symmetric(a) => prop(p(a), "-", "-", "symmetric"),
            Axiom::Transitive(a) => prop(p(a), "-", "-", "transitive"),
            Axiom::Functional(a) => prop(p(a), "-", "-", "functional"),
            Axiom::Default(k, a, v) => format!(
                "constraint ax{i} {{ mode: assert; contextKind: property; context: {}; left: {}; right: -; classes: -; element: defaultValue; value: ex:n{v} }}\n",
                c(k),
                p(a)
            ),
        }
    }
}

pub fn axiom() -> impl Strategy<Value = Axiom> {
    let c = || 0..CLASSES.len();
    let p = || 0..PROPERTIES.len();
    prop_oneof![
        (c(), c()).prop_map(|(a, b)| Axiom::Subclass(a, b)),
        (p(), p()).prop_map(|(a, b)| Axiom::Subproperty(a, b)),
        (p(), p()).prop_map(|(a, b)| Axiom::Equivalent(a, b)),
        (p(), c()).prop_map(|(a, b)| Axiom::Domain(a, b)),
        (p(), c()).prop_map(|(a, b)| Axiom::Range(a, b)),
        (p(), p()).prop_map(|(a, b)| Axiom::Inverse(a, b)),
        p().prop_map(Axiom::Symmetric),
        p().prop_map(Axiom::Transitive),
        p().prop_map(Axiom::Functional),
        (c(), p(), 0..INDIVIDUALS - 1).prop_map(|(k, a, v)| Axiom::Default(k, a, v)),
    ]
}

pub fn schema(axioms: &[Axiom]) -> ResolvedSet {
    let mut src = format!("@prefix ex: <{EX}>\n");
    for (i, a) in axioms.iter().enumerate() {
        src.push_str(&a.rcf(i));
    }
    resolve(parse_rcf(&src).expect("generated schema parses")).expect("generated schema resolves")
}

pub fn is_subgraph(small: &Graph, big: &Graph) -> bool {
    small.iter().all(|t| big.contains(t))
}
