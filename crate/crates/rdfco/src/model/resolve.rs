use std::collections::HashMap;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use super::constraint::*;
use super::ModelError;

/// A constraint set whose labels are known to resolve, with its DEFINE rows
/// grouped into strata for evaluation.
#[derive(Clone, Debug)]
pub struct ResolvedSet {
    set: ConstraintSet,
    index: HashMap<String, usize>,
    strata: Vec<Vec<usize>>,
    recursive: Vec<bool>,
    cyclic: bool,
}

impl ResolvedSet {
    pub fn rows(&self) -> &[GenericConstraint] {
        &self.set.rows
    }

    pub fn set(&self) -> &ConstraintSet {
        &self.set
    }

    pub fn get(&self, id: &str) -> Option<&GenericConstraint> {
        self.index.get(id).map(|&i| &self.set.rows[i])
    }

    /// DEFINE row positions, dependencies first. Rows in one stratum are
    /// mutually recursive and only positively so.
    pub fn strata(&self) -> &[Vec<usize>] {
        &self.strata
    }

    pub fn stratum_is_recursive(&self, i: usize) -> bool {
        self.recursive[i]
    }

    /// True when some definition refers back to itself.
    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn asserts(&self) -> impl Iterator<Item = &GenericConstraint> {
        self.set.rows.iter().filter(|r| r.mode == Mode::Assert)
    }
}

/// Labels a row mentions, with whether each occurs under negation.
pub fn references(row: &GenericConstraint) -> Vec<(&str, bool)> {
    let negative = row.element.negative_operands();
    let mut out: Vec<(&str, bool)> = Vec::new();
    if row.mode == Mode::Assert {
        if let ClassRef::Defined(l) = &row.context {
            out.push((l, false));
        }
    }
    for c in &row.classes {
        if let ClassRef::Defined(l) = c {
            out.push((l, negative));
        }
    }
    out
}

pub fn resolve(set: ConstraintSet) -> Result<ResolvedSet, ModelError> {
    let mut index = HashMap::new();
    for (i, r) in set.rows.iter().enumerate() {
        r.validate()?;
        if index.insert(r.id.clone(), i).is_some() {
            return Err(ModelError::DuplicateId(r.id.clone()));
        }
    }
    let mut g: DiGraph<usize, bool> = DiGraph::new();
    let mut node = HashMap::new();
    for (i, r) in set.rows.iter().enumerate() {
        if r.mode == Mode::Define {
            node.insert(i, g.add_node(i));
        }
    }
    for (i, r) in set.rows.iter().enumerate() {
        for (label, negative) in references(r) {
            let target = match index.get(label) {
                Some(&t) if set.rows[t].mode == Mode::Define => t,
                _ => {
                    return Err(ModelError::UnresolvedLabel {
                        id: r.id.clone(),
                        label: label.to_string(),
                    })
                }
            };
            if r.mode == Mode::Define {
                g.add_edge(node[&i], node[&target], negative);
            }
        }
    }
    // tarjan_scc yields components in reverse topological order, which for
    // edges pointing at dependencies means dependencies come first.
    let mut strata = Vec::new();
    let mut recursive = Vec::new();
    let mut cyclic = false;
    for scc in tarjan_scc(&g) {
        let members: Vec<usize> = scc.iter().map(|n| g[*n]).collect();
        let inside = |n| scc.contains(&n);
        let mut rec = scc.len() > 1;
        for &n in &scc {
            for e in g.edges(n) {
                use petgraph::visit::EdgeRef;
                if inside(e.target()) {
                    rec = true;
                    if *e.weight() {
                        let mut ids: Vec<String> =
                            members.iter().map(|&m| set.rows[m].id.clone()).collect();
                        ids.sort();
                        return Err(ModelError::NegationCycle { ids });
                    }
                }
            }
        }
        cyclic |= rec;
        let mut members = members;
        members.sort();
        strata.push(members);
        recursive.push(rec);
    }
    Ok(ResolvedSet {
        set,
        index,
        strata,
        recursive,
        cyclic,
    })
}
