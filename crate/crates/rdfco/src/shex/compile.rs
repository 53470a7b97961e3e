//! Shapes to generic constraint rows.

use std::collections::{HashMap, HashSet};

use super::ast::{Expr, Shape, TripleConstraint, ValueSpec};
use super::error::ShexError;
use crate::model::dl::local_name;
use crate::model::{
    ClassRef, ConstraintSet, ConstraintValue, ContextKind, Element, GenericConstraint, Mode,
    PropertyRef,
};

/// Row ids for each shape, derived from local names and made unique.
pub fn shape_ids(shapes: &[Shape]) -> HashMap<String, String> {
    let mut taken = HashSet::new();
    let mut ids = HashMap::new();
    for s in shapes {
        let mut base: String = local_name(&s.name)
            .chars()
            .map(|c| {
                if c.is_alphanumeric() || matches!(c, '_' | '-') {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        if base.is_empty() || !base.starts_with(|c: char| c.is_alphabetic()) {
            base = format!("S{base}");
        }
        let mut id = base.clone();
        let mut n = 2;
        while !taken.insert(id.clone()) {
            id = format!("{base}-{n}");
            n += 1;
        }
        ids.insert(s.name.clone(), id);
    }
    ids
}

pub fn compile_shapes(shapes: &[Shape]) -> Result<ConstraintSet, ShexError> {
    let ids = shape_ids(shapes);
    let mut rows = Vec::new();
    for s in shapes {
        let mut c = Compiler {
            ids: &ids,
            id: &ids[&s.name],
            next: 1,
            rows: Vec::new(),
        };
        let mut parts = vec![ClassRef::Top];
        if let Some(e) = &s.expr {
            parts.extend(c.conjuncts(e)?);
        }
        let targets = c.targets(&s.name, &parts[1..]);
        rows.push(class_row(&ids[&s.name], Element::Intersection, parts));
        rows.extend(c.rows);
        rows.extend(targets);
    }
    Ok(ConstraintSet::new(rows))
}

fn class_row(id: &str, element: Element, classes: Vec<ClassRef>) -> GenericConstraint {
    GenericConstraint::new(
        id,
        Mode::Define,
        ContextKind::Class,
        ClassRef::Defined(id.to_string()),
        element,
    )
    .with_classes(classes)
}

struct Compiler<'a> {
    ids: &'a HashMap<String, String>,
    id: &'a str,
    next: usize,
    rows: Vec<GenericConstraint>,
}

impl Compiler<'_> {
    fn fresh(&mut self) -> String {
        let id = format!("{}_{}", self.id, self.next);
        self.next += 1;
        id
    }

    fn conjuncts(&mut self, e: &Expr) -> Result<Vec<ClassRef>, ShexError> {
        match e {
            Expr::Triple(tc) => self.triple(tc),
            Expr::Group(parts) => {
                let mut out = Vec::new();
                for p in parts {
                    out.extend(self.conjuncts(p)?);
                }
                Ok(out)
            }
            Expr::Include(name) => Ok(vec![self.shape_ref(name)?]),
            Expr::Choice(branches) => {
                let mut refs = Vec::new();
                for b in branches {
                    let mut parts = self.conjuncts(b)?;
                    let r = match parts.len() {
                        0 => ClassRef::Top,
                        1 => parts.pop().unwrap(),
                        _ => {
                            let id = self.fresh();
                            self.rows.push(class_row(&id, Element::Intersection, parts));
                            ClassRef::Defined(id)
                        }
                    };
                    refs.push(r);
                }
                let id = self.fresh();
                self.rows.push(class_row(&id, Element::Xor, refs));
                Ok(vec![ClassRef::Defined(id)])
            }
        }
    }

    /// ASSERT rows applying the shape's conjuncts to instances of the class
    /// spelled like the shape's name.
    fn targets(&self, name: &str, parts: &[ClassRef]) -> Vec<GenericConstraint> {
        parts
            .iter()
            .enumerate()
            .map(|(k, part)| {
                let id = format!("{}_target{}", self.id, k + 1);
                let own = match part {
                    ClassRef::Defined(d) => self.rows.iter().find(|r| r.id == *d),
                    _ => None,
                };
                match own {
                    Some(r) => GenericConstraint {
                        id,
                        mode: Mode::Assert,
                        context: ClassRef::Named(name.into()),
                        ..r.clone()
                    },
                    None => GenericConstraint::new(
                        id,
                        Mode::Assert,
                        ContextKind::Class,
                        ClassRef::Named(name.into()),
                        Element::SubclassOf,
                    )
                    .with_classes(vec![part.clone()]),
                }
            })
            .collect()
    }

    fn shape_ref(&self, name: &str) -> Result<ClassRef, ShexError> {
        self.ids
            .get(name)
            .map(|id| ClassRef::Defined(id.clone()))
            .ok_or_else(|| ShexError::Unresolved(name.to_string()))
    }

    fn filler(&self, v: &ValueSpec) -> Result<Vec<ClassRef>, ShexError> {
        Ok(match v {
            ValueSpec::Any => Vec::new(),
            ValueSpec::IriKind => vec![ClassRef::IriKind],
            ValueSpec::Datatype(d) => vec![ClassRef::Datatype(d.clone())],
            ValueSpec::Class(c) => vec![ClassRef::Named(c.clone())],
            ValueSpec::Values(v) => vec![ClassRef::Nominals(v.clone())],
            ValueSpec::ShapeRef(s) => vec![self.shape_ref(s)?],
        })
    }

    fn property_row(
        &mut self,
        tc: &TripleConstraint,
        element: Element,
        count: Option<u32>,
    ) -> Result<String, ShexError> {
        let id = self.fresh();
        let p = if tc.inverse {
            PropertyRef::inverse_of(&tc.predicate)
        } else {
            PropertyRef::iri(&tc.predicate)
        };
        let mut row = GenericConstraint::new(
            &id,
            Mode::Define,
            ContextKind::Property,
            ClassRef::Defined(id.clone()),
            element,
        )
        .with_left(vec![p])
        .with_classes(self.filler(&tc.value)?);
        if let Some(n) = count {
            row = row.with_value(ConstraintValue::Int(n.into()));
        }
        self.rows.push(row);
        Ok(id)
    }

    fn triple(&mut self, tc: &TripleConstraint) -> Result<Vec<ClassRef>, ShexError> {
        if tc.negated {
            let exists = self.property_row(tc, Element::Exists, None)?;
            let id = self.fresh();
            self.rows.push(class_row(
                &id,
                Element::Negation,
                vec![ClassRef::Defined(exists)],
            ));
            return Ok(vec![ClassRef::Defined(id)]);
        }
        let mut out = Vec::new();
        if tc.min > 0 {
            out.push(ClassRef::Defined(self.property_row(
                tc,
                Element::MinCard,
                Some(tc.min),
            )?));
        }
        if let Some(max) = tc.max {
            out.push(ClassRef::Defined(self.property_row(
                tc,
                Element::MaxCard,
                Some(max),
            )?));
        }
        Ok(out)
    }
}
