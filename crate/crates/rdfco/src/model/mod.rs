pub mod catalog;
mod constraint;
pub mod dl;
mod element;
mod error;
pub mod rcf;
pub mod resolve;

pub use catalog::{
    catalog, classification_matrix, CatalogEntry, ClassificationMatrix, Complexity, ContextDim,
    Support,
};
pub use constraint::*;
pub use dl::render_dl;
pub use element::Element;
pub use error::ModelError;
pub use rcf::{parse_rcf, serialize_rcf};
pub use resolve::{resolve, ResolvedSet};
