//! Compact shape syntax: parsing, compilation to constraint rows, and
//! direct evaluation.

pub mod ast;
mod compile;
mod error;
mod eval;
mod parser;

use std::collections::BTreeMap;

pub use ast::{Expr, Shape, TripleConstraint, ValueSpec};
pub use compile::{compile_shapes, shape_ids};
pub use error::ShexError;
pub use eval::evaluate;
pub use parser::parse_shexc;

use crate::model::{resolve, ClassRef};
use crate::rdf::Graph;
use crate::validator::{EvaluationEnv, NodeSet, ValidationConfig};

/// Nodes matching each shape, computed through the compiled rows.
pub fn shapes_report(
    shapes: &[Shape],
    graph: &Graph,
) -> Result<BTreeMap<String, NodeSet>, ShexError> {
    let set = resolve(compile_shapes(shapes)?)?;
    let env = EvaluationEnv::build(
        graph,
        &set,
        &ValidationConfig::default(),
        crate::validator::standard_registry(),
    )?;
    let ids = shape_ids(shapes);
    Ok(shapes
        .iter()
        .map(|s| {
            let ext = env.extension(&ClassRef::Defined(ids[&s.name].clone()));
            (
                s.name.clone(),
                ext.into_iter().filter(|t| t.is_node()).collect(),
            )
        })
        .collect())
}
