//! Rewrites sugar elements into the core ones the checks implement.

use std::collections::BTreeMap;

use crate::model::{
    ClassRef, ConstraintSet, ConstraintValue, ContextKind, Element, GenericConstraint, Mode,
    PropertyRef,
};

/// Where a normalised row came from: the written id and element.
pub type Origins = BTreeMap<String, (String, Element)>;

fn derived(
    row: &GenericConstraint,
    suffix: &str,
    mode: Mode,
    kind: ContextKind,
    element: Element,
) -> GenericConstraint {
    let id = format!("{}~{suffix}", row.id);
    let context = match mode {
        Mode::Define => ClassRef::Defined(id.clone()),
        Mode::Assert => row.context.clone(),
    };
    let mut r = GenericConstraint::new(id, mode, kind, context, element);
    r.severity = row.severity;
    r
}

fn count_row(row: &GenericConstraint, suffix: &str, element: Element, n: i64) -> GenericConstraint {
    derived(row, suffix, row.mode, ContextKind::Property, element)
        .with_left(row.left.clone())
        .with_classes(row.classes.clone())
        .with_value(ConstraintValue::Int(n))
}

/// `(min, max)` for a cardinality shortcut, or `None` if unreadable.
pub fn shortcut_bounds(text: &str) -> Option<(bool, bool)> {
    let t = text.to_ascii_lowercase().replace(['_', ' ', '&'], "-");
    let mandatory = if t.contains("mandatory") {
        true
    } else if t.contains("optional") {
        false
    } else {
        return None;
    };
    let repeatable = if t.contains("non-repeatable") || t.contains("nonrepeatable") {
        false
    } else if t.contains("repeatable") {
        true
    } else {
        return None;
    };
    Some((mandatory, repeatable))
}

/// `∃p.C ⊑ context`: anything using the property belongs to the context.
fn optional_rows(row: &GenericConstraint, suffix: &str) -> Vec<GenericConstraint> {
    let def = derived(
        row,
        suffix,
        Mode::Define,
        ContextKind::Property,
        Element::Exists,
    )
    .with_left(row.left.clone())
    .with_classes(row.classes.clone());
    let incl = derived(
        row,
        &format!("{suffix}-in"),
        Mode::Assert,
        ContextKind::Class,
        Element::SubclassOf,
    )
    .with_classes(vec![row.context.clone()]);
    let incl = GenericConstraint {
        context: ClassRef::Defined(def.id.clone()),
        ..incl
    };
    vec![def, incl]
}

/// Core rows for a single written row.
pub fn normalize_row(row: &GenericConstraint) -> Vec<GenericConstraint> {
    use Element::*;
    let same = |element: Element| GenericConstraint {
        element,
        ..row.clone()
    };
    match row.element {
        Required => vec![same(Exists)],
        Repeatable => vec![GenericConstraint {
            value: Some(ConstraintValue::Int(1)),
            ..same(MinCard)
        }],
        ExactCard => {
            let n = row
                .value
                .as_ref()
                .and_then(ConstraintValue::as_int)
                .unwrap_or(0);
            let min = count_row(row, "min", MinCard, n);
            let max = count_row(row, "max", MaxCard, n);
            if row.mode == Mode::Define {
                let both = GenericConstraint {
                    left: Vec::new(),
                    context_kind: ContextKind::Class,
                    classes: vec![
                        ClassRef::Defined(min.id.clone()),
                        ClassRef::Defined(max.id.clone()),
                    ],
                    value: None,
                    ..same(Intersection)
                };
                vec![min, max, both]
            } else {
                vec![min, max]
            }
        }
        CardShortcut => {
            let text = row
                .value
                .as_ref()
                .and_then(ConstraintValue::as_text)
                .unwrap_or_default();
            let Some((mandatory, repeatable)) = shortcut_bounds(text) else {
                return vec![row.clone()];
            };
            let mut out = Vec::new();
            if mandatory {
                out.push(count_row(row, "min", MinCard, 1));
            } else {
                out.extend(optional_rows(row, "opt"));
            }
            if !repeatable {
                out.push(count_row(row, "max", MaxCard, 1));
            }
            out
        }
        Optional => optional_rows(row, "opt"),
        Symmetric => {
            vec![GenericConstraint {
                right: row.left.clone(),
                ..same(Inverse)
            }]
        }
        Transitive => {
            let p = row
                .left
                .first()
                .cloned()
                .unwrap_or_else(|| PropertyRef { steps: Vec::new() });
            vec![GenericConstraint {
                left: vec![p.clone(), p.clone()],
                right: vec![p],
                ..same(SubpropertyOf)
            }]
        }
        PropertyEquiv => {
            let (Some(p), Some(q)) = (row.left.first(), row.right.first().or(row.left.get(1)))
            else {
                return vec![row.clone()];
            };
            let fwd = derived(
                row,
                "fwd",
                Mode::Assert,
                ContextKind::Property,
                SubpropertyOf,
            )
            .with_left(vec![p.clone()])
            .with_right(vec![q.clone()]);
            let back = derived(
                row,
                "back",
                Mode::Assert,
                ContextKind::Property,
                SubpropertyOf,
            )
            .with_left(vec![q.clone()])
            .with_right(vec![p.clone()]);
            vec![fwd, back]
        }
        ClassEquiv => {
            let mut out = vec![same(SubclassOf)];
            for (i, c) in row.classes.iter().enumerate() {
                let back = derived(
                    row,
                    &format!("back{i}"),
                    Mode::Assert,
                    ContextKind::Class,
                    SubclassOf,
                )
                .with_classes(vec![row.context.clone()]);
                out.push(GenericConstraint {
                    context: c.clone(),
                    ..back
                });
            }
            out
        }
        ClassDisjoint => {
            let mut members = vec![row.context.clone()];
            members.extend(row.classes.iter().cloned());
            let both = derived(row, "both", Mode::Define, ContextKind::Class, Intersection)
                .with_classes(members);
            let empty = GenericConstraint {
                context: ClassRef::Defined(both.id.clone()),
                ..derived(row, "empty", Mode::Assert, ContextKind::Class, SubclassOf)
                    .with_classes(vec![ClassRef::Bottom])
            };
            vec![both, empty]
        }
        Reflexive => {
            let def = derived(row, "self", Mode::Define, ContextKind::Property, Exists)
                .with_left(row.left.clone())
                .with_classes(vec![ClassRef::SelfRef]);
            let incl = GenericConstraint {
                context_kind: ContextKind::Class,
                left: Vec::new(),
                right: Vec::new(),
                classes: vec![ClassRef::Defined(def.id.clone())],
                value: None,
                ..same(SubclassOf)
            };
            vec![def, incl]
        }
        _ => vec![row.clone()],
    }
}

/// Core rows for `set`, with the origin of every row that was rewritten.
pub fn normalize_sugar(set: &ConstraintSet) -> (ConstraintSet, Origins) {
    let mut out = ConstraintSet {
        prefixes: set.prefixes.clone(),
        rows: Vec::new(),
    };
    let mut origins = Origins::new();
    for row in &set.rows {
        for r in normalize_row(row) {
            if r.id != row.id || r.element != row.element {
                origins.insert(r.id.clone(), (row.id.clone(), row.element));
            }
            out.rows.push(r);
        }
    }
    (out, origins)
}
