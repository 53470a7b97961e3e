//! Axioms the inference rules read, pulled out of constraint rows.

use crate::model::{
    ClassRef, ConstraintValue, Element, GenericConstraint, Mode, PropertyRef, ResolvedSet,
};
use crate::rdf::{Literal, Term};

#[derive(Clone, Debug, Default)]
pub struct Schema {
    /// `(sub, super)` between named classes.
    pub subclass: Vec<(String, String)>,
    /// Named classes declared equivalent.
    pub class_equiv: Vec<(String, String)>,
    /// `chain ⊑ super`.
    pub subproperty: Vec<(PropertyRef, PropertyRef)>,
    pub property_equiv: Vec<(PropertyRef, PropertyRef)>,
    /// `∃p.⊤ ⊑ C`.
    pub domain: Vec<(PropertyRef, String)>,
    /// `⊤ ⊑ ∀p.C`.
    pub range: Vec<(PropertyRef, String)>,
    /// `∃p.R ⊑ C`: `(p, R, C)`.
    pub specific_range: Vec<(PropertyRef, String, String)>,
    pub inverse: Vec<(PropertyRef, PropertyRef)>,
    pub symmetric: Vec<PropertyRef>,
    pub transitive: Vec<PropertyRef>,
    pub reflexive: Vec<PropertyRef>,
    pub functional: Vec<PropertyRef>,
    pub inverse_functional: Vec<PropertyRef>,
    /// Key properties per context class (`None` for `⊤`).
    pub keys: Vec<(Option<String>, Vec<PropertyRef>)>,
    /// `(class or ⊤, property, value)`.
    pub defaults: Vec<(Option<String>, PropertyRef, Term)>,
}

fn named(c: &ClassRef) -> Option<&str> {
    match c {
        ClassRef::Named(i) => Some(i),
        _ => None,
    }
}

fn default_term(v: &ConstraintValue) -> Term {
    match v {
        ConstraintValue::Term(t) => t.clone(),
        ConstraintValue::Text(s) => Term::Literal(Literal::string(s.clone())),
        ConstraintValue::Int(i) => Term::typed(i.to_string(), crate::rdf::vocab::XSD_INTEGER),
        ConstraintValue::Facets(f) => Term::Literal(Literal::string(
            f.iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(","),
        )),
    }
}

impl Schema {
    pub fn from_set(set: &ResolvedSet) -> Self {
        let mut s = Schema::default();
        for row in set.rows().iter().filter(|r| r.mode == Mode::Assert) {
            s.add(row);
        }
        s
    }

    fn add(&mut self, row: &GenericConstraint) {
        let top = row.context == ClassRef::Top;
        let ctx = named(&row.context);
        let p = row.left.first();
        let chain = || PropertyRef {
            steps: row.left.iter().flat_map(|p| p.steps.clone()).collect(),
        };
        let second = || row.right.first().or(row.left.get(1)).cloned();
        match row.element {
            Element::SubclassOf => {
                if let Some(a) = ctx {
                    for b in row.classes.iter().filter_map(named) {
                        self.subclass.push((a.into(), b.into()));
                    }
                }
            }
            Element::ClassEquiv => {
                if let Some(a) = ctx {
                    for b in row.classes.iter().filter_map(named) {
                        self.class_equiv.push((a.into(), b.into()));
                    }
                }
            }
            Element::SubpropertyOf => {
                if let Some(sup) = row.right.first().filter(|q| q.steps.len() == 1) {
                    self.subproperty.push((chain(), sup.clone()));
                }
            }
            Element::PropertyEquiv => {
                if let (Some(p), Some(q)) = (p, second()) {
                    if p.steps.len() == 1 && q.steps.len() == 1 {
                        self.property_equiv.push((p.clone(), q));
                    }
                }
            }
            Element::Domain if top => {
                for c in row.classes.iter().filter_map(named) {
                    for p in &row.left {
                        self.domain.push((p.clone(), c.into()));
                    }
                }
            }
            Element::Range => {
                for c in row.classes.iter().filter_map(named) {
                    for p in &row.left {
                        match ctx {
                            _ if top => self.range.push((p.clone(), c.into())),
                            Some(a) => self.specific_range.push((p.clone(), c.into(), a.into())),
                            None => {}
                        }
                    }
                }
            }
            Element::Inverse => {
                if let (Some(p), Some(q)) = (p, second()) {
                    if top && p.steps.len() == 1 && q.steps.len() == 1 {
                        self.inverse.push((p.clone(), q));
                    }
                }
            }
            Element::Symmetric if top => self
                .symmetric
                .extend(row.left.iter().filter(|p| p.steps.len() == 1).cloned()),
            Element::Transitive if top => self
                .transitive
                .extend(row.left.iter().filter(|p| p.steps.len() == 1).cloned()),
            Element::Reflexive if top => self
                .reflexive
                .extend(row.left.iter().filter(|p| p.steps.len() == 1).cloned()),
            Element::Functional if top => self.functional.extend(row.left.iter().cloned()),
            Element::InverseFunctional if top => {
                self.inverse_functional.extend(row.left.iter().cloned())
            }
            // `⊤ ⊑ ≤1 p` is functionality.
            Element::MaxCard
                if top
                    && row.value == Some(ConstraintValue::Int(1))
                    && row.left.len() == 1
                    && row.left[0].steps.len() == 1
                    && row.classes.iter().all(|c| *c == ClassRef::Top) =>
            {
                self.functional.push(row.left[0].clone())
            }
            Element::KeyFor if top || ctx.is_some() => {
                self.keys.push((ctx.map(String::from), row.left.clone()))
            }
            Element::DefaultValue => {
                if let (Some(p), Some(v)) = (p.filter(|p| p.steps.len() == 1), &row.value) {
                    if top || ctx.is_some() {
                        self.defaults
                            .push((ctx.map(String::from), p.clone(), default_term(v)));
                    }
                }
            }
            _ => {}
        }
    }
}
