use std::borrow::Cow;
use std::collections::{BTreeSet, HashMap};

use super::checks::CheckRegistry;
use super::config::{ValidationConfig, ValidationError};
use super::sugar::{normalize_sugar, Origins};
use crate::inference::materialize;
use crate::inference::SameAsPartition;
use crate::model::{resolve, ClassRef, GenericConstraint, PropertyRef, ResolvedSet};
use crate::rdf::value::{is_known_datatype, parse_value};
use crate::rdf::vocab::{RDFS, RDF_TYPE};
use crate::rdf::{Graph, Literal, Term};

pub type NodeSet = BTreeSet<Term>;

/// Read-only view used while evaluating classes and checks. Terms are
/// canonical representatives when names may co-refer.
pub struct Scope<'a> {
    pub graph: &'a Graph,
    /// The graph before same-as canonicalisation.
    pub materialized: &'a Graph,
    pub partition: &'a SameAsPartition,
    /// Every subject or object term, literals included.
    pub domain: &'a NodeSet,
    /// IRIs and blank nodes of `domain`.
    pub nodes: &'a NodeSet,
    pub defined: &'a HashMap<String, NodeSet>,
    pub config: &'a ValidationConfig,
}

pub(crate) fn datatype_member(lit: &Literal, dt: &str) -> bool {
    if dt == format!("{RDFS}Literal") {
        return true;
    }
    lit.datatype() == dt && (!is_known_datatype(dt) || parse_value(lit.lexical(), dt).is_ok())
}

impl<'a> Scope<'a> {
    pub fn rep(&self, t: &Term) -> Term {
        self.partition.rep(t).clone()
    }

    pub fn ext(&self, c: &ClassRef) -> Cow<'a, NodeSet> {
        match c {
            ClassRef::Defined(l) => match self.defined.get(l) {
                Some(s) => Cow::Borrowed(s),
                None => Cow::Owned(NodeSet::new()),
            },
            ClassRef::Top => Cow::Borrowed(self.nodes),
            ClassRef::Bottom | ClassRef::SelfRef => Cow::Owned(NodeSet::new()),
            ClassRef::Named(c) => Cow::Owned(
                self.graph
                    .subjects(&Term::iri(RDF_TYPE), &Term::iri(c.clone()))
                    .cloned()
                    .collect(),
            ),
            ClassRef::Nominals(ts) => Cow::Owned(ts.iter().map(|t| self.rep(t)).collect()),
            ClassRef::Datatype(dt) => Cow::Owned(
                self.domain
                    .iter()
                    .filter(|t| t.as_literal().is_some_and(|l| datatype_member(l, dt)))
                    .cloned()
                    .collect(),
            ),
            ClassRef::IriKind => Cow::Owned(
                self.domain
                    .iter()
                    .filter(|t| matches!(t, Term::Iri(_)))
                    .cloned()
                    .collect(),
            ),
        }
    }

    pub fn member(&self, t: &Term, c: &ClassRef) -> bool {
        match c {
            ClassRef::Defined(l) => self.defined.get(l).is_some_and(|s| s.contains(t)),
            ClassRef::Top => t.is_node(),
            ClassRef::Bottom | ClassRef::SelfRef => false,
            ClassRef::Named(c) => self
                .graph
                .has(t, &Term::iri(RDF_TYPE), &Term::iri(c.clone())),
            ClassRef::Nominals(ts) => ts.iter().any(|n| &self.rep(n) == t),
            ClassRef::Datatype(dt) => t.as_literal().is_some_and(|l| datatype_member(l, dt)),
            ClassRef::IriKind => matches!(t, Term::Iri(_)),
        }
    }

    /// Membership in every class of `classes`; `TOP` when empty.
    pub fn member_all(&self, t: &Term, classes: &[ClassRef]) -> bool {
        classes.iter().all(|c| self.member(t, c))
    }

    /// Membership in some class of `classes`.
    pub fn member_any(&self, t: &Term, classes: &[ClassRef]) -> bool {
        classes.iter().any(|c| self.member(t, c))
    }

    /// Nodes reachable from `x` along the path.
    pub fn successors(&self, x: &Term, p: &PropertyRef) -> NodeSet {
        let mut frontier = NodeSet::from([x.clone()]);
        for step in &p.steps {
            let pred = Term::iri(step.iri.clone());
            let mut next = NodeSet::new();
            for n in &frontier {
                if step.inverse {
                    next.extend(self.graph.subjects(&pred, n).cloned());
                } else {
                    next.extend(self.graph.objects(n, &pred).cloned());
                }
            }
            frontier = next;
        }
        frontier
    }

    /// All pairs linked by the path.
    pub fn pairs(&self, p: &PropertyRef) -> Vec<(Term, Term)> {
        let Some(first) = p.steps.first() else {
            return Vec::new();
        };
        let pred = Term::iri(first.iri.clone());
        let starts: NodeSet = self
            .graph
            .with_predicate(&pred)
            .map(|t| {
                if first.inverse {
                    t.object.clone()
                } else {
                    t.subject.clone()
                }
            })
            .collect();
        let mut out = Vec::new();
        for s in starts {
            for o in self.successors(&s, p) {
                out.push((s.clone(), o));
            }
        }
        out
    }

    /// Focus nodes of a row.
    pub fn context(&self, row: &GenericConstraint) -> Cow<'a, NodeSet> {
        self.ext(&row.context)
    }

    /// Whether `x` satisfies the filler of a quantifier over `fillers`.
    pub fn filler_member(&self, x: &Term, y: &Term, fillers: &[ClassRef]) -> bool {
        fillers.iter().all(|c| match c {
            ClassRef::SelfRef => x == y,
            c => self.member(y, c),
        })
    }
}

/// Everything needed to evaluate classes over one graph and set.
pub struct EvaluationEnv {
    set: ResolvedSet,
    origins: Origins,
    config: ValidationConfig,
    materialized: Graph,
    graph: Graph,
    partition: SameAsPartition,
    domain: NodeSet,
    nodes: NodeSet,
    defined: HashMap<String, NodeSet>,
}

impl EvaluationEnv {
    /// Normalises `set`, materialises inferences when configured, and
    /// evaluates every DEFINE row.
    pub fn build(
        graph: &Graph,
        set: &ResolvedSet,
        config: &ValidationConfig,
        registry: &CheckRegistry,
    ) -> Result<Self, ValidationError> {
        config.check()?;
        let graph = if config.infer {
            materialize(graph, set, config)?
        } else {
            graph.clone()
        };
        let (core, origins) = normalize_sugar(set.set());
        let set = resolve(core)?;
        let partition = if config.una {
            SameAsPartition::discrete()
        } else {
            SameAsPartition::from_graph(&graph)
        };
        let canonical = partition.canonical(&graph);
        let domain = canonical.terms();
        let nodes = domain.iter().filter(|t| t.is_node()).cloned().collect();
        let mut env = EvaluationEnv {
            set,
            origins,
            config: config.clone(),
            materialized: graph,
            graph: canonical,
            partition,
            domain,
            nodes,
            defined: HashMap::new(),
        };
        env.define_all(registry)?;
        Ok(env)
    }

    /// The normalised rows.
    pub fn set(&self) -> &ResolvedSet {
        &self.set
    }

    pub fn origins(&self) -> &Origins {
        &self.origins
    }

    pub fn config(&self) -> &ValidationConfig {
        &self.config
    }

    /// The graph after inference, before sameAs canonicalisation.
    pub fn materialized(&self) -> &Graph {
        &self.materialized
    }

    pub fn scope(&self) -> Scope<'_> {
        Scope {
            graph: &self.graph,
            materialized: &self.materialized,
            partition: &self.partition,
            domain: &self.domain,
            nodes: &self.nodes,
            defined: &self.defined,
            config: &self.config,
        }
    }

    pub fn partition(&self) -> &SameAsPartition {
        &self.partition
    }

    /// Least fixpoint of the DEFINE rows, one stratum at a time.
    fn define_all(&mut self, registry: &CheckRegistry) -> Result<(), ValidationError> {
        let set = self.set.clone();
        for (si, stratum) in set.strata().iter().enumerate() {
            let rows: Vec<&GenericConstraint> = stratum.iter().map(|&i| &set.rows()[i]).collect();
            if !set.stratum_is_recursive(si) {
                for row in rows {
                    let v = body(registry, row, &self.scope());
                    self.defined.insert(row.id.clone(), v);
                }
                continue;
            }
            for row in &rows {
                self.defined.insert(row.id.clone(), NodeSet::new());
            }
            let mut rounds = 0;
            loop {
                rounds += 1;
                if rounds > self.config.fixpoint_cap {
                    return Err(ValidationError::FixpointLimit {
                        rounds: self.config.fixpoint_cap,
                    });
                }
                let next: Vec<NodeSet> = rows
                    .iter()
                    .map(|r| body(registry, r, &self.scope()))
                    .collect();
                let mut changed = false;
                for (row, v) in rows.iter().zip(next) {
                    if self.defined[&row.id] != v {
                        changed = true;
                        self.defined.insert(row.id.clone(), v);
                    }
                }
                if !changed {
                    break;
                }
            }
        }
        Ok(())
    }

    /// Extension of `c`, expanded to every name of each individual.
    pub fn extension(&self, c: &ClassRef) -> NodeSet {
        let scope = self.scope();
        let ext = scope.ext(c);
        if self.partition.is_discrete() {
            return ext.into_owned();
        }
        ext.iter().flat_map(|t| self.partition.members(t)).collect()
    }
}

fn body(registry: &CheckRegistry, row: &GenericConstraint, scope: &Scope) -> NodeSet {
    registry
        .get(row.element)
        .and_then(|c| c.extension(row, scope))
        .unwrap_or_default()
}
