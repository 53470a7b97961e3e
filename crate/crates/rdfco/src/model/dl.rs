//! Description logic rendering of rows.

use super::constraint::*;
use super::{Element, ModelError};
use crate::rdf::Term;

pub fn local_name(iri: &str) -> &str {
    let cut = iri.rfind(['#', '/', ':']).map(|i| i + 1).unwrap_or(0);
    if cut >= iri.len() {
        iri
    } else {
        &iri[cut..]
    }
}

fn term(t: &Term) -> String {
    match t {
        Term::Iri(i) => local_name(i).to_string(),
        Term::Blank(b) => format!("_:{b}"),
        Term::Literal(l) => l.lexical().to_string(),
    }
}

pub fn class(c: &ClassRef) -> String {
    match c {
        ClassRef::Named(i) | ClassRef::Datatype(i) => local_name(i).to_string(),
        ClassRef::Defined(l) => l.clone(),
        ClassRef::Nominals(ts) => {
            format!("{{{}}}", ts.iter().map(term).collect::<Vec<_>>().join(", "))
        }
        ClassRef::Top => "⊤".into(),
        ClassRef::Bottom => "⊥".into(),
        ClassRef::SelfRef => "Self".into(),
        ClassRef::IriKind => "IRI".into(),
    }
}

pub fn property(p: &PropertyRef) -> String {
    p.steps
        .iter()
        .map(|s| format!("{}{}", local_name(&s.iri), if s.inverse { "⁻" } else { "" }))
        .collect::<Vec<_>>()
        .join(" ∘ ")
}

fn join(parts: Vec<String>, op: &str) -> String {
    if parts.len() == 1 {
        return parts.into_iter().next().unwrap();
    }
    parts
        .into_iter()
        .map(|p| if p.contains(' ') { format!("({p})") } else { p })
        .collect::<Vec<_>>()
        .join(op)
}

fn classes(row: &GenericConstraint, op: &str) -> String {
    if row.classes.is_empty() {
        return "⊤".into();
    }
    join(row.classes.iter().map(class).collect(), op)
}

fn left(row: &GenericConstraint) -> String {
    row.left.first().map(property).unwrap_or_default()
}

fn right(row: &GenericConstraint) -> String {
    row.right.first().map(property).unwrap_or_default()
}

fn count(row: &GenericConstraint) -> i64 {
    row.value
        .as_ref()
        .and_then(ConstraintValue::as_int)
        .unwrap_or(0)
}

fn filler(row: &GenericConstraint) -> String {
    let f = classes(row, " ⊓ ");
    if f.contains(' ') {
        format!("({f})")
    } else {
        f
    }
}

fn xor(parts: &[String]) -> String {
    let mut branches = Vec::new();
    for i in 0..parts.len() {
        let mut conj = Vec::new();
        for (j, q) in parts.iter().enumerate() {
            conj.push(if i == j { q.clone() } else { format!("¬{q}") });
        }
        branches.push(format!("({})", conj.join(" ⊓ ")));
    }
    branches.join(" ⊔ ")
}

/// Class expression named by a definable row, context aside.
fn body(row: &GenericConstraint) -> Option<String> {
    use Element::*;
    let p = left(row);
    Some(match row.element {
        Intersection => classes(row, " ⊓ "),
        Union => classes(row, " ⊔ "),
        Negation => format!("¬{}", filler(row)),
        Xor => xor(&row.classes.iter().map(class).collect::<Vec<_>>()),
        Exists | Required => format!("∃{p}.{}", filler(row)),
        ForAll => format!("∀{p}.{}", filler(row)),
        MinCard => format!("≥{} {p}.{}", count(row), filler(row)),
        MaxCard => format!("≤{} {p}.{}", count(row), filler(row)),
        ExactCard => format!(
            "≥{n} {p}.{f} ⊓ ≤{n} {p}.{f}",
            n = count(row),
            f = filler(row)
        ),
        Repeatable => format!("≥1 {p}.{}", filler(row)),
        ValueRestriction => match &row.value {
            Some(ConstraintValue::Term(t)) => format!("∃{p}.{{{}}}", term(t)),
            _ => format!("∃{p}.{}", filler(row)),
        },
        AllowedValues => format!("∀{p}.({})", classes(row, " ⊔ ")),
        NotAllowedValues => format!("¬∃{p}.({})", classes(row, " ⊔ ")),
        _ => return None,
    })
}

/// Renders a row with ⊑ ≡ ⊓ ⊔ ¬ ∃ ∀ ≥n ≤n ∘ funct keyfor Self.
pub fn render_dl(row: &GenericConstraint) -> Result<String, ModelError> {
    use Element::*;
    if !row.element.dl_expressible() {
        return Err(ModelError::NotDlExpressible {
            element: row.element.name().into(),
        });
    }
    let ctx = class(&row.context);
    if row.mode == Mode::Define {
        let b = body(row).ok_or_else(|| ModelError::NotDlExpressible {
            element: row.element.name().into(),
        })?;
        return Ok(format!("{ctx} ≡ {b}"));
    }
    if let Some(b) = body(row) {
        return Ok(format!("{ctx} ⊑ {b}"));
    }
    let p = left(row);
    let q = right(row);
    let scoped = |axiom: String| {
        if row.context == ClassRef::Top {
            axiom
        } else {
            format!("{ctx} ⊑ {axiom}")
        }
    };
    Ok(match row.element {
        SubclassOf => format!("{ctx} ⊑ {}", classes(row, " ⊓ ")),
        ClassEquiv => format!("{ctx} ≡ {}", classes(row, " ⊓ ")),
        ClassDisjoint => format!("{ctx} ⊓ {} ⊑ ⊥", classes(row, " ⊔ ")),
        SubpropertyOf => {
            let chain = row
                .left
                .iter()
                .map(property)
                .collect::<Vec<_>>()
                .join(" ∘ ");
            format!("{chain} ⊑ {q}")
        }
        PropertyEquiv => format!("{p} ≡ {q}"),
        PropertyDisjoint => format!("{p} ⊑ ¬{q}"),
        Domain => format!("∃{p}.⊤ ⊑ {}", classes(row, " ⊓ ")),
        Range => format!("{ctx} ⊑ ∀{p}.{}", filler(row)),
        Inverse => format!("{p} ≡ {q}⁻"),
        Symmetric => format!("{p} ≡ {p}⁻"),
        Asymmetric => format!("{p} ⊑ ¬{p}⁻"),
        Reflexive => format!("{ctx} ⊑ ∃{p}.Self"),
        Irreflexive => format!("{ctx} ⊑ ¬∃{p}.Self"),
        Transitive => format!("{p} ∘ {p} ⊑ {p}"),
        Functional => scoped(format!("funct {p}")),
        InverseFunctional => scoped(format!("funct {p}⁻")),
        KeyFor => format!(
            "{} keyfor {ctx}",
            row.left.iter().map(property).collect::<Vec<_>>().join(", ")
        ),
        IndividualEq => format!("{ctx} = {}", classes(row, ", ")),
        IndividualNeq => format!("{ctx} ≠ {}", classes(row, ", ")),
        AssertionEq | AssertionNeq => {
            let obj = match &row.value {
                Some(ConstraintValue::Term(t)) => term(t),
                _ => classes(row, ", "),
            };
            let neg = if row.element == AssertionNeq {
                "¬"
            } else {
                ""
            };
            format!("{neg}{p}({ctx}, {obj})")
        }
        VocabMembership => {
            let scheme = if q.is_empty() {
                "inScheme".to_string()
            } else {
                q
            };
            format!("{ctx} ⊑ ∀{p}.∀{scheme}.({})", classes(row, " ⊔ "))
        }
        Optional => format!("∃{p}.{} ⊑ {ctx}", filler(row)),
        Conditional => format!("{ctx} ⊓ ∃{p}.⊤ ⊑ ∃{q}.{}", filler(row)),
        CardShortcut => {
            let f = filler(row);
            let text = row
                .value
                .as_ref()
                .and_then(ConstraintValue::as_text)
                .unwrap_or("");
            match crate::validator::shortcut_bounds(text) {
                Some((false, false)) => format!("{ctx} ⊑ ≤1 {p}.{f}"),
                Some((true, false)) => format!("{ctx} ⊑ ≥1 {p}.{f} ⊓ ≤1 {p}.{f}"),
                Some((true, true)) => format!("{ctx} ⊑ ≥1 {p}.{f}"),
                _ => format!("{ctx} ⊑ ⊤"),
            }
        }
        _ => {
            return Err(ModelError::NotDlExpressible {
                element: row.element.name().into(),
            })
        }
    })
}
