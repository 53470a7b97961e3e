mod support;

use proptest::prelude::*;
use rdfco::model::{render_dl, serialize_rcf, Element};
use rdfco::rdf::{parse_turtle, Term};
use rdfco::shex::{
    compile_shapes, evaluate, parse_shexc, shapes_report, Expr, Shape, ShexError, TripleConstraint,
    ValueSpec,
};
use rdfco::validator::FIXPOINT_LIMIT;
use support::{ex, small_graph};

const EX: &str = "PREFIX : <http://example.org/>\n";

fn shapes(body: &str) -> Vec<Shape> {
    parse_shexc(&format!("{EX}{body}")).unwrap()
}

fn tc(expr: &Expr) -> &TripleConstraint {
    match expr {
        Expr::Triple(tc) => tc,
        other => panic!("not a triple constraint: {other:?}"),
    }
}

#[test]
fn single_triple_constraint() {
    let s = shapes(":JediStudent { :studentOf {}{1} }");
    assert_eq!(s.len(), 1);
    assert_eq!(s[0].name, ex("JediStudent"));
    let t = tc(s[0].expr.as_ref().unwrap());
    assert_eq!(
        (t.predicate.as_str(), &t.value, t.min, t.max),
        (ex("studentOf").as_str(), &ValueSpec::Any, 1, Some(1))
    );
}

#[test]
fn inclusion_and_open_cardinality() {
    let s = shapes(":Jedi { :attitude ('good') }\n:SuperJediMaster { & :Jedi , :mentorOf {}{3,} }");
    let Some(Expr::Group(parts)) = &s[1].expr else {
        panic!("{:?}", s[1].expr)
    };
    assert_eq!(parts[0], Expr::Include(ex("Jedi")));
    let t = tc(&parts[1]);
    assert_eq!((t.min, t.max), (3, None));
}

#[test]
fn cardinality_defaults_and_sugar() {
    let s = shapes(":S { :a . , :b .* , :c .+ , :d .? , :e .{2} , :f .{2,5} }");
    let Some(Expr::Group(parts)) = &s[0].expr else {
        panic!()
    };
    let bounds: Vec<(u32, Option<u32>)> = parts.iter().map(|p| (tc(p).min, tc(p).max)).collect();
    assert_eq!(
        bounds,
        [
            (1, Some(1)),
            (0, None),
            (1, None),
            (0, Some(1)),
            (2, Some(2)),
            (2, Some(5))
        ]
    );

    for (sugar, long) in [("+", "{1,}"), ("?", "{0,1}"), ("*", "{0,}")] {
        let a = compile_shapes(&shapes(&format!(":S {{ :p @:T{sugar} }}\n:T {{ }}"))).unwrap();
        let b = compile_shapes(&shapes(&format!(":S {{ :p @:T{long} }}\n:T {{ }}"))).unwrap();
        assert_eq!(a, b, "{sugar}");
    }
}

#[test]
fn empty_shape_and_empty_file() {
    let s = shapes(":S { }");
    assert_eq!(s[0].expr, None);
    assert!(parse_shexc("").unwrap().is_empty());
    assert!(compile_shapes(&[]).unwrap().rows.is_empty());
}

#[test]
fn unconstrained_triple_compiles_to_no_cardinality_rows() {
    let set = compile_shapes(&shapes(":S { :p .* }")).unwrap();
    assert!(set
        .rows
        .iter()
        .all(|r| !matches!(r.element, Element::MinCard | Element::MaxCard)));
}

#[test]
fn qualified_cardinality_renders_as_dl() {
    let src = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../fixtures/jedi_min_qualified.shex"
    ))
    .unwrap();
    let set = compile_shapes(&parse_shexc(&src).unwrap()).unwrap();
    let dl: Vec<String> = set.rows.iter().filter_map(|r| render_dl(r).ok()).collect();
    assert!(
        dl.iter().any(|l| l.ends_with("≥1 mentorOf.Jedi")),
        "{dl:#?}"
    );
    assert!(
        dl.iter().any(|l| l.ends_with("≤2 mentorOf.Jedi")),
        "{dl:#?}"
    );
    assert!(
        dl.iter().any(|l| l.starts_with("JediMaster ≡ ⊤ ⊓ Jedi ⊓ ")),
        "{dl:#?}"
    );
}

#[test]
fn negated_triple_is_negated_existential() {
    let set = compile_shapes(&shapes(":M { !:studentOf @:M }")).unwrap();
    let neg = set
        .rows
        .iter()
        .find(|r| r.element == Element::Negation)
        .unwrap();
    let exists = set
        .rows
        .iter()
        .find(|r| r.element == Element::Exists)
        .unwrap();
    assert_eq!(
        render_dl(neg).unwrap(),
        format!("{} ≡ ¬{}", neg.id, exists.id)
    );
    assert_eq!(
        render_dl(exists).unwrap(),
        format!("{} ≡ ∃studentOf.M", exists.id)
    );
}

#[test]
fn compilation_is_deterministic() {
    let src = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../fixtures/human_groups.shex"
    ))
    .unwrap();
    let a = serialize_rcf(&compile_shapes(&parse_shexc(&src).unwrap()).unwrap());
    let b = serialize_rcf(&compile_shapes(&parse_shexc(&src).unwrap()).unwrap());
    assert_eq!(a, b);
    assert!(a.contains("element: xor;"));
}

#[test]
fn errors() {
    let unresolved = parse_shexc(&format!("{EX}:S {{ :p @:Missing }}")).unwrap_err();
    assert!(matches!(unresolved, ShexError::Unresolved(ref s) if *s == ex("Missing")));
    assert!(matches!(
        parse_shexc(":S { :p . }"),
        Err(ShexError::UndeclaredPrefix { .. })
    ));
    assert!(matches!(
        parse_shexc(&format!("{EX}\n:S {{ :p . ")),
        Err(ShexError::Syntax { line: 3, .. })
    ));
    assert!(matches!(
        parse_shexc(&format!("{EX}:S {{ ( :p . , :q . )* }}")),
        Err(ShexError::UnsupportedFeature(_))
    ));
    let cyclic = shapes(":M { !:studentOf @:M }");
    let g = parse_turtle(
        "<http://example.org/a> <http://example.org/studentOf> <http://example.org/b> .",
    )
    .unwrap();
    assert!(matches!(
        evaluate(&cyclic, &g, FIXPOINT_LIMIT),
        Err(ShexError::NegationCycle(_))
    ));
    assert!(shapes_report(&cyclic, &g).is_err());
}

#[test]
fn recursive_star_admits_everything_reachable() {
    let s = shapes(":Issue { :related @:Issue* }");
    let g = parse_turtle(
        "@prefix : <http://example.org/> . :a :related :b . :b :related :a . :c :related :d .",
    )
    .unwrap();
    let direct = evaluate(&s, &g, FIXPOINT_LIMIT).unwrap();
    assert_eq!(direct[&ex("Issue")].len(), 4);
    assert_eq!(direct, shapes_report(&s, &g).unwrap());
}

// Random acyclic shape sets: the compiled rows and the direct matcher agree.

#[derive(Clone, Debug)]
struct RawTc {
    pred: usize,
    inverse: bool,
    value: usize,
    target: usize,
    bounds: (u32, Option<u32>),
    negated: bool,
}

fn raw_tc() -> impl Strategy<Value = RawTc> {
    let bounds = prop::sample::select(vec![
        (0, None),
        (1, None),
        (1, Some(1)),
        (0, Some(1)),
        (2, None),
        (0, Some(2)),
        (2, Some(3)),
    ]);
    (
        0..2usize,
        prop::bool::weighted(0.2),
        0..6usize,
        0..3usize,
        bounds,
        prop::bool::weighted(0.15),
    )
        .prop_map(|(pred, inverse, value, target, bounds, negated)| RawTc {
            pred,
            inverse,
            value,
            target,
            bounds,
            negated,
        })
}

#[derive(Clone, Debug)]
enum RawExpr {
    Group(Vec<RawTc>, Option<usize>),
    Choice(Vec<RawTc>, Vec<RawTc>),
}

fn raw_expr() -> impl Strategy<Value = Option<RawExpr>> {
    prop::option::weighted(
        0.9,
        prop_oneof![
            3 => (prop::collection::vec(raw_tc(), 1..4), prop::option::of(0..3usize)).prop_map(|(t, i)| RawExpr::Group(t, i)),
            1 => (prop::collection::vec(raw_tc(), 1..3), prop::collection::vec(raw_tc(), 1..3)).prop_map(|(a, b)| RawExpr::Choice(a, b)),
        ],
    )
}

fn shape_name(i: usize) -> String {
    ex(&format!("S{i}"))
}

/// Shape `i` may only mention shapes before it.
fn build(i: usize, raw: &Option<RawExpr>) -> Shape {
    let triple = |r: &RawTc| {
        let value = match r.value {
            0 => ValueSpec::Any,
            1 => ValueSpec::IriKind,
            2 => ValueSpec::Class(ex("A")),
            3 => ValueSpec::Values(vec![
                support::individual(0),
                support::individual(1),
                Term::string("l0"),
            ]),
            4 => ValueSpec::Datatype(rdfco::rdf::vocab::XSD_STRING.into()),
            _ if r.target < i => ValueSpec::ShapeRef(shape_name(r.target)),
            _ => ValueSpec::Class(ex("B")),
        };
        let (min, max) = if r.negated { (1, Some(1)) } else { r.bounds };
        Expr::Triple(TripleConstraint {
            predicate: ex(support::PROPERTIES[r.pred]),
            inverse: r.inverse,
            value,
            min,
            max,
            negated: r.negated,
        })
    };
    let group = |ts: &[RawTc]| {
        let parts: Vec<Expr> = ts.iter().map(triple).collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            Expr::Group(parts)
        }
    };
    let expr = raw.as_ref().map(|r| match r {
        RawExpr::Group(ts, include) => {
            let mut parts: Vec<Expr> = Vec::new();
            if let Some(j) = include.filter(|j| *j < i) {
                parts.push(Expr::Include(shape_name(j)));
            }
            parts.extend(ts.iter().map(triple));
            Expr::Group(parts)
        }
        RawExpr::Choice(a, b) => Expr::Choice(vec![group(a), group(b)]),
    });
    Shape {
        name: shape_name(i),
        expr,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn compiled_rows_agree_with_direct_matching(g in small_graph(), raw in prop::collection::vec(raw_expr(), 1..4)) {
        let shapes: Vec<Shape> = raw.iter().enumerate().map(|(i, r)| build(i, r)).collect();
        let direct = evaluate(&shapes, &g, FIXPOINT_LIMIT).unwrap();
        let compiled = shapes_report(&shapes, &g).unwrap();
        prop_assert_eq!(direct, compiled);
    }
}
