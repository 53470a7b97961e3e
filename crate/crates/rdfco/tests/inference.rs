mod support;

use proptest::prelude::*;
use rdfco::inference::{
    apply_default_values, entails_same, materialize, materialize_with, Engine, RuleRegistry,
};
use rdfco::model::{parse_rcf, resolve};
use rdfco::rdf::{parse_turtle, Graph, Term};
use rdfco::validator::{ValidationConfig, ValidationError};
use support::{axiom, is_subgraph, nested_graphs, schema, small_graph, Axiom};

fn inferring(una: bool) -> ValidationConfig {
    ValidationConfig {
        una,
        infer: true,
        ..ValidationConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_idempotent(g in small_graph(), axioms in prop::collection::vec(axiom(), 0..6), una: bool) {
        let set = schema(&axioms);
        let once = materialize(&g, &set, &inferring(una)).unwrap();
        let twice = materialize(&once, &set, &inferring(una)).unwrap();
        prop_assert!(is_subgraph(&g, &once));
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn closure_is_monotone((small, big) in nested_graphs(), axioms in prop::collection::vec(axiom(), 0..6)) {
        let axioms: Vec<Axiom> = axioms.into_iter().filter(Axiom::is_monotone).collect();
        let set = schema(&axioms);
        let a = materialize(&small, &set, &inferring(true)).unwrap();
        let b = materialize(&big, &set, &inferring(true)).unwrap();
        prop_assert!(is_subgraph(&a, &b));
    }

    #[test]
    fn semi_naive_equals_naive(g in small_graph(), axioms in prop::collection::vec(axiom(), 0..6), una: bool) {
        let set = schema(&axioms);
        let rules = RuleRegistry::standard();
        let fast = materialize_with(&g, &set, &inferring(una), Engine::SemiNaive, &rules).unwrap();
        let slow = materialize_with(&g, &set, &inferring(una), Engine::Naive, &rules).unwrap();
        prop_assert_eq!(fast, slow);
    }
}

const EX: &str = "http://example.org/";

fn ex(l: &str) -> Term {
    Term::iri(format!("{EX}{l}"))
}

fn rcf(body: &str) -> rdfco::model::ResolvedSet {
    resolve(parse_rcf(&format!("@prefix ex: <{EX}>\n{body}")).unwrap()).unwrap()
}

#[test]
fn transitive_chain_closes() {
    let g = parse_turtle(
        "@prefix ex: <http://example.org/> . ex:a ex:p ex:b . ex:b ex:p ex:c . ex:c ex:p ex:d .",
    )
    .unwrap();
    let set = rcf("constraint t { mode: assert; contextKind: property; context: TOP; left: ex:p; right: -; classes: -; element: transitive; value: - }");
    let out = materialize(&g, &set, &inferring(true)).unwrap();
    assert_eq!(out.len(), 6);
    assert!(out.has(&ex("a"), &ex("p"), &ex("d")));
}

#[test]
fn subclass_and_domain_type_subjects() {
    let g =
        parse_turtle("@prefix ex: <http://example.org/> . ex:a ex:p ex:b . ex:b a ex:A .").unwrap();
    let set = rcf(
        "constraint s { mode: assert; contextKind: class; context: ex:A; left: -; right: -; classes: ex:B; element: subClassOf; value: - }
         constraint d { mode: assert; contextKind: property; context: TOP; left: ex:p; right: -; classes: ex:A; element: domain; value: - }",
    );
    let out = materialize(&g, &set, &inferring(true)).unwrap();
    let ty = Term::iri(rdfco::rdf::vocab::RDF_TYPE);
    for n in ["a", "b"] {
        assert!(out.has(&ex(n), &ty, &ex("A")), "{n} : A");
        assert!(out.has(&ex(n), &ty, &ex("B")), "{n} : B");
    }
}

#[test]
fn same_as_needs_open_names() {
    let g = parse_turtle("@prefix ex: <http://example.org/> . ex:s ex:f ex:x , ex:y .").unwrap();
    let set = rcf("constraint f { mode: assert; contextKind: property; context: TOP; left: ex:f; right: -; classes: -; element: functional; value: - }");
    let same = Term::iri(rdfco::rdf::vocab::OWL_SAME_AS);
    let closed = materialize(&g, &set, &inferring(true)).unwrap();
    assert_eq!(closed, g);
    let open = materialize(&g, &set, &inferring(false)).unwrap();
    assert!(open.has(&ex("x"), &same, &ex("y")) || open.has(&ex("y"), &same, &ex("x")));
}

#[test]
fn cap_stops_long_derivations() {
    let mut ttl = String::from("@prefix ex: <http://example.org/> .\n");
    for i in 0..40 {
        ttl.push_str(&format!("ex:n{i} ex:p ex:n{} .\n", i + 1));
    }
    let g = parse_turtle(&ttl).unwrap();
    let set = rcf("constraint t { mode: assert; contextKind: property; context: TOP; left: ex:p; right: -; classes: -; element: transitive; value: - }");
    let config = ValidationConfig {
        fixpoint_cap: 2,
        ..inferring(true)
    };
    let err =
        materialize_with(&g, &set, &config, Engine::Naive, &RuleRegistry::standard()).unwrap_err();
    assert!(matches!(err, ValidationError::FixpointLimit { .. }));
    assert!(materialize(&g, &set, &inferring(true)).is_ok());
}

#[test]
fn unknown_rule_is_rejected() {
    let g = parse_turtle("@prefix ex: <http://example.org/> . ex:a ex:p ex:b .").unwrap();
    let config = ValidationConfig {
        rules: Some(vec!["nope".into()]),
        ..inferring(true)
    };
    let err = materialize(&g, &rcf(""), &config).unwrap_err();
    assert!(matches!(err, ValidationError::UnknownRule(ref n) if n == "nope"));
}

#[test]
fn property_chain_adds_uncle() {
    let g = parse_turtle(
        "@prefix ex: <http://example.org/> . ex:x ex:brotherOf ex:y . ex:y ex:parentOf ex:z .",
    )
    .unwrap();
    let set = rcf("constraint u { mode: assert; contextKind: property; context: TOP; left: ex:brotherOf/ex:parentOf; right: ex:uncleOf; classes: -; element: subPropertyOf; value: - }");
    let out = materialize(&g, &set, &inferring(true)).unwrap();
    assert_eq!(out.len(), 3);
    assert!(out.has(&ex("x"), &ex("uncleOf"), &ex("z")));
}

#[test]
fn empty_schema_is_identity() {
    let g =
        parse_turtle("@prefix ex: <http://example.org/> . ex:a ex:p ex:b . ex:b a ex:A .").unwrap();
    for una in [true, false] {
        assert_eq!(materialize(&g, &rcf(""), &inferring(una)).unwrap(), g);
    }
}

#[test]
fn shared_key_merges_officers() {
    let g = parse_turtle(
        "@prefix ex: <http://example.org/> .
         ex:kirk a ex:Officer ; ex:code \"0000-destruct\" .
         ex:jtk a ex:Officer ; ex:code \"0000-destruct\" .",
    )
    .unwrap();
    let set = rcf("constraint k { mode: assert; contextKind: property; context: ex:Officer; left: ex:code; right: -; classes: -; element: keyFor; value: - }");
    let config = inferring(false);
    assert!(entails_same(&g, &ex("kirk"), &ex("jtk"), &set, &config).unwrap());
    assert!(!entails_same(&Graph::new(), &ex("kirk"), &ex("jtk"), &rcf(""), &config).unwrap());
}

#[test]
fn defaults_only_fill_gaps() {
    let g = parse_turtle(
        "@prefix ex: <http://example.org/> . ex:j a ex:Jedi ; ex:color \"green\" . ex:k a ex:Jedi .",
    )
    .unwrap();
    let set = rcf("constraint d { mode: assert; contextKind: property; context: ex:Jedi; left: ex:color; right: -; classes: -; element: defaultValue; value: \"blue\" }");
    let out = apply_default_values(&g, &set);
    assert_eq!(out.len(), g.len() + 1);
    assert_eq!(out.objects(&ex("j"), &ex("color")).count(), 1);
    assert_eq!(out.objects(&ex("k"), &ex("color")).count(), 1);
}
