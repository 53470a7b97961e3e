pub mod error;
pub mod graph;
pub(crate) mod lex;
pub mod ntriples;
pub mod term;
pub mod turtle;
pub mod value;
pub mod vocab;

pub use error::ParseError;
pub use graph::Graph;
pub use ntriples::{parse_ntriples, serialize_ntriples};
pub use term::{is_valid_iri, Literal, Term, Triple};
pub use turtle::{parse_turtle, parse_turtle_with_depth};
pub use value::{parse_value, value_of, Value, ValueError};

/// Turtle unless the path ends in `.nt`.
pub fn parse_data(path_hint: &str, src: &str) -> Result<Graph, ParseError> {
    if path_hint.ends_with(".nt") {
        parse_ntriples(src)
    } else {
        parse_turtle(src)
    }
}
