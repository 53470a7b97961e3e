//! RDF constraint toolkit: a small RDF store, a generic constraint model,
//! a ShEx subset compiler, forward-chaining inference and a validator.

pub mod inference;
pub mod model;
pub mod rdf;
pub mod shex;
pub mod validator;
