//! Class extensions and constraint checking.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::model::{ClassRef, Mode, ResolvedSet, Severity};
use crate::rdf::Graph;

pub mod checks;
mod config;
mod env;
mod report;
mod sugar;

pub use checks::{read_list, CheckRegistry, ElementCheck, Finding, ListError};
pub use config::{ValidationConfig, ValidationError, FIXPOINT_LIMIT};
pub(crate) use env::datatype_member;
pub use env::{EvaluationEnv, NodeSet, Scope};
pub use report::{SeverityCounts, ValidationReport, Violation};
pub use sugar::{normalize_row, normalize_sugar, shortcut_bounds, Origins};

pub fn standard_registry() -> &'static CheckRegistry {
    static REGISTRY: OnceLock<CheckRegistry> = OnceLock::new();
    REGISTRY.get_or_init(CheckRegistry::standard)
}

pub fn validate(
    graph: &Graph,
    set: &ResolvedSet,
    config: &ValidationConfig,
) -> Result<ValidationReport, ValidationError> {
    validate_with(graph, set, config, standard_registry())
}

pub fn validate_with(
    graph: &Graph,
    set: &ResolvedSet,
    config: &ValidationConfig,
    registry: &CheckRegistry,
) -> Result<ValidationReport, ValidationError> {
    let env = EvaluationEnv::build(graph, set, config, registry)?;
    Ok(report(&env, registry))
}

/// Runs every ASSERT row of a built environment.
pub fn report(env: &EvaluationEnv, registry: &CheckRegistry) -> ValidationReport {
    let scope = env.scope();
    let rows: Vec<_> = env
        .set()
        .rows()
        .iter()
        .filter(|r| r.mode == Mode::Assert)
        .collect();
    let found: Vec<Vec<Violation>> = rows
        .par_iter()
        .map(|row| {
            let Some(check) = registry.get(row.element) else {
                return Vec::new();
            };
            let (id, written) = env
                .origins()
                .get(&row.id)
                .cloned()
                .unwrap_or((row.id.clone(), row.element));
            check
                .check(row, &scope)
                .into_iter()
                .map(|f| {
                    let core = f.element.unwrap_or(row.element);
                    let element = f.element.unwrap_or(written);
                    let mut severity = row.severity;
                    if !env.config().cwa && written.cwa_dependent() && core.cwa_dependent() {
                        severity = severity.min(Severity::Warning);
                    }
                    Violation {
                        constraint_id: id.clone(),
                        element,
                        focus: f.focus,
                        severity,
                        detail: f.detail,
                    }
                })
                .collect()
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut violations: Vec<Violation> = found
        .into_iter()
        .flatten()
        .filter(|v| {
            seen.insert((
                v.constraint_id.clone(),
                v.element,
                v.focus.clone(),
                v.detail.clone(),
            ))
        })
        .collect();
    violations.sort_by(|a, b| {
        (&a.constraint_id, &a.focus, a.element, &a.detail).cmp(&(
            &b.constraint_id,
            &b.focus,
            b.element,
            &b.detail,
        ))
    });
    ValidationReport {
        config: env.config().clone(),
        violations,
    }
}

/// Extension of `class` over `graph`, every co-referring name included.
pub fn extension(
    class: &ClassRef,
    graph: &Graph,
    set: &ResolvedSet,
    config: &ValidationConfig,
) -> Result<NodeSet, ValidationError> {
    let env = EvaluationEnv::build(graph, set, config, standard_registry())?;
    Ok(env.extension(class))
}
