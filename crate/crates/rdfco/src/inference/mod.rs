//! Forward-chaining materialisation of schema axioms and default values.

use std::sync::Arc;

use crate::model::ResolvedSet;
use crate::rdf::vocab::{OWL_SAME_AS, RDF_TYPE};
use crate::rdf::{Graph, Term, Triple};
use crate::validator::{ValidationConfig, ValidationError};

mod partition;
mod rules;
mod schema;

pub use partition::SameAsPartition;
pub use rules::{InferenceRule, RuleRegistry};
pub use schema::Schema;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Re-fires every rule on the whole graph each round.
    Naive,
    /// Fires only on triples new in the previous round.
    SemiNaive,
}

/// Closure of `g` under every enabled rule and the default values of `set`.
pub fn materialize(
    g: &Graph,
    set: &ResolvedSet,
    config: &ValidationConfig,
) -> Result<Graph, ValidationError> {
    materialize_with(g, set, config, Engine::SemiNaive, &RuleRegistry::standard())
}

fn select(
    registry: &RuleRegistry,
    config: &ValidationConfig,
) -> Result<Vec<Arc<dyn InferenceRule>>, ValidationError> {
    let chosen: Vec<Arc<dyn InferenceRule>> = match &config.rules {
        None => registry.iter().cloned().collect(),
        Some(names) => names
            .iter()
            .map(|n| {
                registry
                    .get(n)
                    .cloned()
                    .ok_or_else(|| ValidationError::UnknownRule(n.clone()))
            })
            .collect::<Result<_, _>>()?,
    };
    Ok(chosen
        .into_iter()
        .filter(|r| !(config.una && r.merges()))
        .collect())
}

struct Run<'a> {
    schema: &'a Schema,
    rules: Vec<Arc<dyn InferenceRule>>,
    engine: Engine,
    cap: usize,
    rounds: usize,
}

impl Run<'_> {
    fn tick(&mut self) -> Result<(), ValidationError> {
        self.rounds += 1;
        if self.rounds > self.cap {
            return Err(ValidationError::FixpointLimit { rounds: self.cap });
        }
        Ok(())
    }

    fn derive(&self, full: &Graph, delta: &Graph) -> Graph {
        let mut out = Vec::new();
        for r in &self.rules {
            r.fire(self.schema, full, delta, &mut out);
        }
        out.into_iter().filter(|t| !full.contains(t)).collect()
    }

    /// Least fixpoint of the monotone rules, given the triples added last.
    fn saturate(&mut self, g: &mut Graph, mut delta: Graph) -> Result<(), ValidationError> {
        loop {
            if delta.is_empty() {
                return Ok(());
            }
            self.tick()?;
            let fresh = match self.engine {
                Engine::SemiNaive => self.derive(g, &delta),
                Engine::Naive => self.derive(g, g),
            };
            g.extend(fresh.iter().cloned());
            delta = fresh;
        }
    }
}

pub fn materialize_with(
    g: &Graph,
    set: &ResolvedSet,
    config: &ValidationConfig,
    engine: Engine,
    registry: &RuleRegistry,
) -> Result<Graph, ValidationError> {
    let schema = Schema::from_set(set);
    let mut run = Run {
        schema: &schema,
        rules: select(registry, config)?,
        engine,
        cap: config.fixpoint_cap,
        rounds: 0,
    };
    let mut out = g.clone();
    let mut delta = g.clone();
    loop {
        run.saturate(&mut out, delta)?;
        let mut fresh = if config.una {
            Graph::new()
        } else {
            copy_to_representatives(&out)
        };
        if fresh.is_empty() {
            fresh = defaults(&out, &schema, !config.una);
        }
        if fresh.is_empty() {
            return Ok(out);
        }
        run.tick()?;
        out.extend(fresh.iter().cloned());
        delta = fresh;
    }
}

/// Each statement restated between the representatives of its terms.
fn copy_to_representatives(g: &Graph) -> Graph {
    let partition = SameAsPartition::from_graph(g);
    if partition.is_discrete() {
        return Graph::new();
    }
    let same = Term::iri(OWL_SAME_AS);
    g.iter()
        .filter(|t| t.predicate != same)
        .map(|t| {
            Triple::new(
                partition.rep(&t.subject).clone(),
                t.predicate.clone(),
                partition.rep(&t.object).clone(),
            )
        })
        .filter(|t| !g.contains(t))
        .collect()
}

fn defaults(g: &Graph, schema: &Schema, merged: bool) -> Graph {
    let partition = if merged {
        SameAsPartition::from_graph(g)
    } else {
        SameAsPartition::discrete()
    };
    let ty = Term::iri(RDF_TYPE);
    let mut out = Graph::new();
    for (class, p, v) in &schema.defaults {
        let Some(step) = p.single() else { continue };
        let pred = Term::iri(step.iri.clone());
        let members: Vec<Term> = match class {
            Some(c) => g.subjects(&ty, &Term::iri(c.clone())).cloned().collect(),
            None => g.nodes().into_iter().collect(),
        };
        for x in members {
            let has = partition
                .members(&x)
                .iter()
                .any(|m| g.objects(m, &pred).next().is_some());
            if !has {
                out.add(x, pred.clone(), v.clone());
            }
        }
    }
    out
}

/// `g` plus the default values of `set`, and nothing else.
pub fn apply_default_values(g: &Graph, set: &ResolvedSet) -> Graph {
    let schema = Schema::from_set(set);
    let mut out = g.clone();
    out.extend(defaults(g, &schema, false).iter().cloned());
    out
}

/// Whether `a` and `b` denote one individual once names may co-refer.
pub fn entails_same(
    g: &Graph,
    a: &Term,
    b: &Term,
    set: &ResolvedSet,
    config: &ValidationConfig,
) -> Result<bool, ValidationError> {
    let config = ValidationConfig {
        una: false,
        infer: true,
        ..config.clone()
    };
    let closed = materialize(g, set, &config)?;
    Ok(a == b || SameAsPartition::from_graph(&closed).same(a, b))
}
