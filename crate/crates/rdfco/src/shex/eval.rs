//! Direct shape evaluation, independent of the constraint compiler.

use std::collections::{BTreeMap, HashMap};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use petgraph::visit::EdgeRef;

use super::ast::{Expr, Shape, TripleConstraint, ValueSpec};
use super::error::ShexError;
use crate::rdf::vocab::RDF_TYPE;
use crate::rdf::{Graph, Term};
use crate::validator::{datatype_member, NodeSet};

/// Nodes matching each shape, by least fixpoint within each stratum.
pub fn evaluate(
    shapes: &[Shape],
    graph: &Graph,
    cap: usize,
) -> Result<BTreeMap<String, NodeSet>, ShexError> {
    let index: HashMap<&str, usize> = shapes
        .iter()
        .enumerate()
        .map(|(i, s)| (s.name.as_str(), i))
        .collect();
    let mut deps: DiGraph<usize, bool> = DiGraph::new();
    let nodes: Vec<_> = (0..shapes.len()).map(|i| deps.add_node(i)).collect();
    for (i, s) in shapes.iter().enumerate() {
        if let Some(e) = &s.expr {
            let mut edges = Vec::new();
            dependencies(e, false, &mut edges);
            for (name, negative) in edges {
                let &j = index
                    .get(name)
                    .ok_or_else(|| ShexError::Unresolved(name.to_string()))?;
                deps.add_edge(nodes[i], nodes[j], negative);
            }
        }
    }

    let candidates = graph.nodes();
    let mut typing: Vec<NodeSet> = vec![NodeSet::new(); shapes.len()];
    for scc in tarjan_scc(&deps) {
        let members: Vec<usize> = scc.iter().map(|n| deps[*n]).collect();
        for &n in &scc {
            for e in deps.edges(n) {
                if *e.weight() && scc.contains(&e.target()) {
                    let mut names: Vec<String> =
                        members.iter().map(|&m| shapes[m].name.clone()).collect();
                    names.sort();
                    return Err(ShexError::NegationCycle(names));
                }
            }
        }
        let mut rounds = 0;
        loop {
            rounds += 1;
            if rounds > cap {
                return Err(ShexError::FixpointLimit(cap));
            }
            let ev = Evaluator {
                graph,
                index: &index,
                typing: &typing,
            };
            let next: Vec<(usize, NodeSet)> = members
                .iter()
                .map(|&m| {
                    (
                        m,
                        candidates
                            .iter()
                            .filter(|x| ev.matches_shape(&shapes[m], x))
                            .cloned()
                            .collect(),
                    )
                })
                .collect();
            let mut changed = false;
            for (m, set) in next {
                if typing[m] != set {
                    typing[m] = set;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
    Ok(shapes
        .iter()
        .zip(typing)
        .map(|(s, t)| (s.name.clone(), t))
        .collect())
}

/// Shape references with their polarity: anything under a choice, a
/// negation or an upper bound is negative.
fn dependencies<'a>(e: &'a Expr, negative: bool, out: &mut Vec<(&'a str, bool)>) {
    match e {
        Expr::Triple(tc) => {
            if let ValueSpec::ShapeRef(s) = &tc.value {
                if tc.negated || tc.max.is_some() {
                    out.push((s, true));
                } else if tc.min > 0 {
                    out.push((s, negative));
                }
            }
        }
        Expr::Group(parts) => parts.iter().for_each(|p| dependencies(p, negative, out)),
        Expr::Choice(parts) => parts.iter().for_each(|p| dependencies(p, true, out)),
        Expr::Include(s) => out.push((s, negative)),
    }
}

struct Evaluator<'a> {
    graph: &'a Graph,
    index: &'a HashMap<&'a str, usize>,
    typing: &'a [NodeSet],
}

impl Evaluator<'_> {
    fn matches_shape(&self, shape: &Shape, x: &Term) -> bool {
        x.is_node() && shape.expr.as_ref().is_none_or(|e| self.matches(e, x))
    }

    fn matches(&self, e: &Expr, x: &Term) -> bool {
        match e {
            Expr::Triple(tc) => self.triple(tc, x),
            Expr::Group(parts) => parts.iter().all(|p| self.matches(p, x)),
            Expr::Choice(parts) => parts.iter().filter(|p| self.matches(p, x)).count() == 1,
            Expr::Include(s) => self.typing[self.index[s.as_str()]].contains(x),
        }
    }

    fn triple(&self, tc: &TripleConstraint, x: &Term) -> bool {
        let p = Term::iri(&tc.predicate);
        let neighbours: NodeSet = if tc.inverse {
            self.graph.subjects(&p, x).cloned().collect()
        } else {
            self.graph.objects(x, &p).cloned().collect()
        };
        let count = neighbours
            .iter()
            .filter(|y| self.value_ok(&tc.value, y))
            .count();
        if tc.negated {
            return count == 0;
        }
        count >= tc.min as usize && tc.max.is_none_or(|m| count <= m as usize)
    }

    fn value_ok(&self, v: &ValueSpec, y: &Term) -> bool {
        match v {
            ValueSpec::Any => true,
            ValueSpec::IriKind => matches!(y, Term::Iri(_)),
            ValueSpec::Datatype(d) => y.as_literal().is_some_and(|l| datatype_member(l, d)),
            ValueSpec::Class(c) => {
                y.is_node() && self.graph.has(y, &Term::iri(RDF_TYPE), &Term::iri(c))
            }
            ValueSpec::Values(vs) => vs.contains(y),
            ValueSpec::ShapeRef(s) => self.typing[self.index[s.as_str()]].contains(y),
        }
    }
}
