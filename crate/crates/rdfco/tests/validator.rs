mod support;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rdfco::model::{parse_rcf, resolve, ClassRef, Element, ResolvedSet, Severity};
use rdfco::rdf::{parse_turtle, Graph, Term};
use rdfco::validator::{extension, normalize_row, validate, ValidationConfig, ValidationReport};

const PREFIXES: &str = "@prefix ex: <http://example.org/>\n@prefix xsd: <http://www.w3.org/2001/XMLSchema#>\n@prefix dcterms: <http://purl.org/dc/terms/>\n";

fn rows(body: &str) -> ResolvedSet {
    resolve(parse_rcf(&format!("{PREFIXES}{body}")).unwrap()).unwrap()
}

fn data(body: &str) -> Graph {
    let prefixes: String = PREFIXES.lines().map(|l| format!("{l} .\n")).collect();
    parse_turtle(&format!("{prefixes}{body}")).unwrap()
}

fn ex(l: &str) -> Term {
    Term::iri(format!("http://example.org/{l}"))
}

fn run(g: &Graph, set: &ResolvedSet) -> ValidationReport {
    validate(g, set, &ValidationConfig::default()).unwrap()
}

fn foci(r: &ValidationReport) -> Vec<(String, Term)> {
    r.violations
        .iter()
        .map(|v| (v.constraint_id.clone(), v.focus.clone()))
        .collect()
}

const MOTHER: &str = "constraint m { mode: assert; contextKind: class; context: ex:Mother; left: -; right: -; classes: ex:Parent; element: subClassOf; value: - }";

#[test]
fn subsumption() {
    let set = rows(MOTHER);
    let r = run(&data("ex:x a ex:Mother ."), &set);
    assert_eq!(foci(&r), [("m".to_string(), ex("x"))]);
    assert!(run(&data("ex:x a ex:Mother , ex:Parent ."), &set).conforms());
}

#[test]
fn named_contexts_are_vacuous_on_empty_graphs() {
    let src = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../fixtures/elements.rcf"
    ))
    .unwrap();
    let mut set = parse_rcf(&src).unwrap();
    set.rows.retain(|r| {
        r.mode == rdfco::model::Mode::Define || matches!(r.context, ClassRef::Named(_))
    });
    let set = resolve(set).unwrap();
    assert!(set.asserts().count() > 15);
    let r = run(&Graph::new(), &set);
    assert!(r.conforms(), "{:?}", r.violations);
}

#[test]
fn property_axioms() {
    let asym = rows("constraint a { mode: assert; contextKind: property; context: TOP; left: ex:parentOf; right: -; classes: -; element: asymmetric; value: - }");
    let r = run(
        &data("ex:x ex:parentOf ex:y . ex:y ex:parentOf ex:x ."),
        &asym,
    );
    assert_eq!(r.violations.len(), 1);

    let neq = rows("constraint n { mode: assert; contextKind: property; context: {ex:Peter}; left: ex:hasSon; right: -; classes: -; element: assertionNeq; value: ex:Meg }");
    assert_eq!(
        foci(&run(&data("ex:Peter ex:hasSon ex:Meg ."), &neq)),
        [("n".to_string(), ex("Peter"))]
    );
    assert!(run(&data("ex:Peter ex:hasSon ex:Chris ."), &neq).conforms());

    let dom = rows("constraint d { mode: assert; contextKind: property; context: TOP; left: ex:sonOf; right: -; classes: ex:Male; element: domain; value: - }");
    assert!(run(&Graph::new(), &dom).conforms());
    assert_eq!(
        run(&data("ex:Meg ex:sonOf ex:Peter ."), &dom)
            .violations
            .len(),
        1
    );
}

#[test]
fn four_way_xor_admits_exactly_one_operand() {
    let classes = ["A", "B", "C", "D"];
    let mut ttl = String::new();
    for mask in 0u32..16 {
        ttl.push_str(&format!("ex:x{mask} ex:tag true .\n"));
        for (i, c) in classes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                ttl.push_str(&format!("ex:x{mask} a ex:{c} .\n"));
            }
        }
    }
    let set = rows("constraint t { mode: define; contextKind: property; left: ex:tag; right: -; classes: -; element: exists; value: - }
        constraint x { mode: assert; contextKind: class; context: @t; left: -; right: -; classes: ex:A, ex:B, ex:C, ex:D; element: xor; value: - }");
    let r = run(&data(&ttl), &set);
    let bad: BTreeSet<Term> = r.violations.iter().map(|v| v.focus.clone()).collect();
    let good: Vec<u32> = (0..16)
        .filter(|m| !bad.contains(&ex(&format!("x{m}"))))
        .collect();
    assert_eq!(good, [1, 2, 4, 8]);
}

#[test]
fn structural_checks() {
    let count = rows("constraint c { mode: assert; contextKind: property; context: ex:Parent; left: ex:childCount; right: ex:hasChild; classes: -; element: countAgg; value: - }");
    assert!(run(
        &data("ex:p a ex:Parent ; ex:childCount \"0\"^^xsd:integer ."),
        &count
    )
    .conforms());
    assert!(!run(
        &data("ex:p a ex:Parent ; ex:childCount \"0\"^^xsd:integer ; ex:hasChild ex:c ."),
        &count
    )
    .conforms());

    let forbidden = rows("constraint v { mode: assert; contextKind: property; context: TOP; left: dcterms:subject, dcterms:title; right: -; classes: -; element: validProperties; value: 'false' }");
    let r = run(
        &data("ex:b dcterms:subject ex:Birds ; dcterms:creator ex:me ."),
        &forbidden,
    );
    assert_eq!(foci(&r), [("v".to_string(), ex("b"))]);

    let ordered = rows("constraint o { mode: assert; contextKind: property; context: TOP; left: ex:authors; right: -; classes: -; element: ordered; value: - }");
    assert!(run(&data("ex:b ex:authors ( ex:x ex:y ) ."), &ordered).conforms());
    assert!(!run(&data("ex:b ex:authors ex:x ."), &ordered).conforms());

    let math = rows("constraint a { mode: assert; contextKind: property; context: TOP; left: ex:area; right: ex:width, ex:height; classes: -; element: mathOp; value: 'multiplication' }");
    assert!(run(&data("ex:r ex:width \"3\"^^xsd:integer ; ex:height \"4\"^^xsd:integer ; ex:area \"12\"^^xsd:integer ."), &math).conforms());
    assert!(!run(&data("ex:r ex:width \"3\"^^xsd:integer ; ex:height \"4\"^^xsd:integer ; ex:area \"13\"^^xsd:integer ."), &math).conforms());
}

#[test]
fn unparsable_literals_are_reported_not_fatal() {
    let set = rows("constraint r { mode: assert; contextKind: property; context: TOP; left: ex:squad; right: -; classes: dt:xsd:integer; element: facetRange; value: [minInclusive=1, maxInclusive=23] }");
    let r = run(&data("ex:p ex:squad \"abc\"^^xsd:integer ."), &set);
    assert_eq!(r.violations.len(), 1);
    assert_eq!(r.violations[0].element, Element::ValueValidForDatatype);
}

#[test]
fn literal_checks() {
    let ws = rows("constraint w { mode: assert; contextKind: property; context: TOP; left: ex:title; right: -; classes: -; element: whitespace; value: - }");
    assert!(run(&data("ex:b ex:title \"A title\" ."), &ws).conforms());
    assert!(!run(&data("ex:b ex:title \" A title\" ."), &ws).conforms());
    let html = rows("constraint h { mode: assert; contextKind: property; context: TOP; left: ex:c; right: -; classes: -; element: htmlFree; value: - }");
    assert!(run(&data("ex:b ex:c \"a < b > c\" ."), &html).conforms());
    assert!(!run(&data("ex:b ex:c \"<b>bold</b>\" ."), &html).conforms());
    let len = rows("constraint l { mode: assert; contextKind: property; context: TOP; left: ex:code; right: -; classes: -; element: stringLength; value: 3 }");
    assert!(run(&data("ex:b ex:code \"äöü\" ."), &len).conforms());
    assert!(!run(&data("ex:b ex:code \"ab\" ."), &len).conforms());
    let lang = rows("constraint g { mode: assert; contextKind: property; context: TOP; left: ex:label; right: -; classes: -; element: langTag; value: 'en' }");
    assert!(run(&data("ex:b ex:label \"x\"@en-GB ."), &lang).conforms());
    assert!(!run(&data("ex:b ex:label \"x\"@de ."), &lang).conforms());
}

#[test]
fn sugar_expands_to_core_rows() {
    let set = rows("constraint s1 { mode: assert; contextKind: property; context: ex:P; left: ex:name; right: -; classes: -; element: cardShortcut; value: 'mandatory & non-repeatable' }
        constraint s2 { mode: assert; contextKind: property; context: ex:P; left: ex:name; right: -; classes: -; element: cardShortcut; value: 'optional & repeatable' }
        constraint s3 { mode: assert; contextKind: property; context: ex:Child; left: ex:childOf; right: -; classes: ex:Parent; element: exactCard; value: 2 }");
    let elements = |id: &str| {
        normalize_row(set.get(id).unwrap())
            .iter()
            .map(|r| r.element)
            .collect::<Vec<_>>()
    };
    assert_eq!(elements("s1"), [Element::MinCard, Element::MaxCard]);
    assert!(!elements("s2")
        .iter()
        .any(|e| matches!(e, Element::MinCard | Element::MaxCard)));
    let exact = normalize_row(set.get("s3").unwrap());
    assert_eq!(
        exact.iter().map(|r| r.element).collect::<Vec<_>>(),
        [Element::MinCard, Element::MaxCard]
    );
    assert!(exact
        .iter()
        .all(|r| r.classes == vec![ClassRef::Named("http://example.org/Parent".into())]));

    // Violations of rewritten rows carry the written id and element.
    let r = run(
        &data("ex:c a ex:Child ; ex:childOf ex:m . ex:m a ex:Parent ."),
        &set,
    );
    assert_eq!(r.violations.len(), 1);
    assert_eq!(r.violations[0].constraint_id, "s3");
    assert_eq!(r.violations[0].element, Element::ExactCard);
}

#[test]
fn severities_and_world_assumptions() {
    let set = rows("constraint h { mode: assert; contextKind: property; context: ex:P; left: ex:homepage; right: -; classes: -; element: recommended; value: - }
        constraint n { mode: assert; contextKind: property; context: ex:P; left: ex:name; right: -; classes: -; element: minCard; value: 1 }
        constraint s { mode: assert; contextKind: property; context: ex:P; left: ex:ssn; right: -; classes: -; element: pattern; value: '^\\d+$'; severity: warning }");
    let g = data("ex:x a ex:P ; ex:ssn \"12a\" .");
    let r = run(&g, &set);
    let sev: Vec<(&str, Severity)> = r
        .violations
        .iter()
        .map(|v| (v.constraint_id.as_str(), v.severity))
        .collect();
    assert_eq!(
        sev,
        [
            ("h", Severity::Info),
            ("n", Severity::Error),
            ("s", Severity::Warning)
        ]
    );

    let open = validate(
        &g,
        &set,
        &ValidationConfig {
            cwa: false,
            ..ValidationConfig::default()
        },
    )
    .unwrap();
    let sev: Vec<Severity> = open.violations.iter().map(|v| v.severity).collect();
    assert_eq!(sev, [Severity::Info, Severity::Warning, Severity::Warning]);

    let lenient = ValidationConfig {
        severity_floor: Severity::Error,
        cwa: false,
        ..ValidationConfig::default()
    };
    let r = validate(&g, &set, &lenient).unwrap();
    assert_eq!(r.violations.len(), 3);
    assert!(r.conforms());

    let bad = ValidationConfig {
        una: false,
        infer: false,
        ..ValidationConfig::default()
    };
    assert!(validate(&g, &set, &bad).is_err());
}

#[test]
fn forall_is_vacuous_without_edges() {
    let set = rows("constraint f { mode: define; contextKind: property; left: ex:hasChild; right: -; classes: ex:Person; element: forAll; value: - }");
    let g = data("ex:a ex:hasChild ex:b . ex:b a ex:Person . ex:c ex:hasChild ex:d .");
    let ext = extension(
        &ClassRef::Defined("f".into()),
        &g,
        &set,
        &ValidationConfig::default(),
    )
    .unwrap();
    assert!(ext.contains(&ex("a")) && ext.contains(&ex("b")) && ext.contains(&ex("d")));
    assert!(!ext.contains(&ex("c")));
    assert!(extension(
        &ClassRef::Top,
        &Graph::new(),
        &set,
        &ValidationConfig::default()
    )
    .unwrap()
    .is_empty());
}

#[test]
fn fixpoint_ignores_row_order() {
    let body = [
        "constraint a { mode: define; contextKind: property; left: ex:next; right: -; classes: @b; element: exists; value: - }",
        "constraint b { mode: define; contextKind: class; left: -; right: -; classes: ex:End, @a; element: union; value: - }",
        "constraint c { mode: define; contextKind: class; left: -; right: -; classes: @b; element: negation; value: - }",
    ];
    let g = data("ex:x ex:next ex:y . ex:y ex:next ex:z . ex:z a ex:End . ex:u ex:next ex:v . ex:v ex:next ex:u .");
    let config = ValidationConfig::default();
    let forward = rows(&body.join("\n"));
    let backward = rows(&body.iter().rev().cloned().collect::<Vec<_>>().join("\n"));
    for id in ["a", "b", "c"] {
        let c = ClassRef::Defined(id.into());
        assert_eq!(
            extension(&c, &g, &forward, &config).unwrap(),
            extension(&c, &g, &backward, &config).unwrap(),
            "{id}"
        );
    }
    let a = extension(&ClassRef::Defined("a".into()), &g, &forward, &config).unwrap();
    assert_eq!(a, [ex("x"), ex("y")].into_iter().collect());
}

#[test]
fn reports_are_deterministic() {
    let set = rows(MOTHER);
    let g = data("ex:x a ex:Mother . ex:y a ex:Mother . ex:z a ex:Mother .");
    assert_eq!(run(&g, &set), run(&g, &set));
    let order: Vec<Term> = run(&g, &set)
        .violations
        .iter()
        .map(|v| v.focus.clone())
        .collect();
    assert_eq!(order, [ex("x"), ex("y"), ex("z")]);
}

fn card(element: &str, n: u32) -> ResolvedSet {
    rows(&format!(
        "constraint k {{ mode: define; contextKind: property; left: ex:p; right: -; classes: -; element: {element}; value: {n} }}
         constraint e {{ mode: define; contextKind: property; left: ex:p; right: -; classes: -; element: exists; value: - }}"
    ))
}

proptest! {
    #[test]
    fn adding_triples_keeps_min_satisfied_and_max_violated((small, big) in support::nested_graphs(), n in 0u32..3) {
        let config = ValidationConfig::default();
        let k = ClassRef::Defined("k".into());
        let min = card("minCard", n);
        let a = extension(&k, &small, &min, &config).unwrap();
        let b = extension(&k, &big, &min, &config).unwrap();
        prop_assert!(a.is_subset(&b));

        let max = card("maxCard", n);
        let inside = |g: &Graph| extension(&k, g, &max, &config).unwrap();
        let (sa, sb) = (inside(&small), inside(&big));
        for x in small.terms() {
            if !sa.contains(&x) {
                prop_assert!(!sb.contains(&x));
            }
        }
        let e = ClassRef::Defined("e".into());
        prop_assert!(extension(&e, &small, &min, &config).unwrap().is_subset(&extension(&e, &big, &min, &config).unwrap()));
    }
}
