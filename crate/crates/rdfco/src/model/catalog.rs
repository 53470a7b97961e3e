//! The 81 constraint types with their classification and language support.

use std::fmt;

use super::Element;

#[path = "catalog_data.rs"]
mod data;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContextDim {
    Property,
    Class,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Complexity {
    Simple,
    Sugar,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Support {
    Yes,
    No,
    Partial,
}

/// Constraint languages in the order of `CatalogEntry::language_support`.
pub const LANGUAGES: [&str; 6] = ["DSP", "OWL2-QL", "OWL2-DL", "ReSh", "ShEx", "SPIN"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub type_name: &'static str,
    pub requirement_ids: &'static [&'static str],
    pub context_dim: ContextDim,
    pub complexity_dim: Complexity,
    pub dl_expressible: bool,
    pub cwa_dependent: bool,
    pub una_dependent: bool,
    /// Reasoning may run before validating this type.
    pub inference_pre_pass: bool,
    pub language_support: [Support; 6],
    pub constraining_elements: &'static [Element],
    pub implemented: bool,
}

impl CatalogEntry {
    pub fn support_for(&self, language: &str) -> Option<Support> {
        LANGUAGES
            .iter()
            .position(|l| *l == language)
            .map(|i| self.language_support[i])
    }
}

/// Entries in table order.
pub fn catalog() -> Vec<CatalogEntry> {
    data::ROWS
        .iter()
        .map(|r| CatalogEntry {
            type_name: r.name,
            requirement_ids: r.requirements,
            context_dim: r.context,
            complexity_dim: r.complexity,
            dl_expressible: r.dl,
            cwa_dependent: r.cwa,
            una_dependent: r.una,
            inference_pre_pass: r.inference,
            language_support: r.support,
            constraining_elements: r.elements,
            implemented: !r.elements.is_empty() || r.name == "Validation Levels",
        })
        .collect()
}

pub fn find(type_name: &str) -> Option<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.type_name.eq_ignore_ascii_case(type_name))
}

/// Count and percentage of one classification bucket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bucket {
    pub label: &'static str,
    pub count: usize,
    /// Percentage times 100, rounded half up.
    pub basis_points: u64,
}

impl Bucket {
    fn new(label: &'static str, count: usize, total: usize) -> Self {
        Bucket {
            label,
            count,
            basis_points: percent_basis_points(count, total),
        }
    }

    pub fn percent(&self) -> f64 {
        self.basis_points as f64 / 100.0
    }
}

impl fmt::Display for Bucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}.{:02}",
            self.basis_points / 100,
            self.basis_points % 100
        )
    }
}

/// `count / total` as a percentage with two decimals, rounded half up,
/// in hundredths of a percent.
pub fn percent_basis_points(count: usize, total: usize) -> u64 {
    if total == 0 {
        return 0;
    }
    let (c, t) = (count as u64, total as u64);
    (c * 20000 + t) / (2 * t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationMatrix {
    pub total: usize,
    pub context: [Bucket; 3],
    pub complexity: [Bucket; 3],
    pub dl: [Bucket; 2],
}

pub fn classification_matrix(entries: &[CatalogEntry]) -> ClassificationMatrix {
    let n = entries.len();
    let count = |f: &dyn Fn(&CatalogEntry) -> bool| entries.iter().filter(|e| f(e)).count();
    ClassificationMatrix {
        total: n,
        context: [
            Bucket::new(
                "Property",
                count(&|e| e.context_dim == ContextDim::Property),
                n,
            ),
            Bucket::new("Class", count(&|e| e.context_dim == ContextDim::Class), n),
            Bucket::new(
                "Property and Class",
                count(&|e| e.context_dim == ContextDim::Both),
                n,
            ),
        ],
        complexity: [
            Bucket::new(
                "Simple",
                count(&|e| e.complexity_dim == Complexity::Simple),
                n,
            ),
            Bucket::new(
                "Syntactic sugar",
                count(&|e| e.complexity_dim == Complexity::Sugar),
                n,
            ),
            Bucket::new(
                "Complex",
                count(&|e| e.complexity_dim == Complexity::Complex),
                n,
            ),
        ],
        dl: [
            Bucket::new("DL expressible", count(&|e| e.dl_expressible), n),
            Bucket::new("Not DL expressible", count(&|e| !e.dl_expressible), n),
        ],
    }
}
