use std::collections::BTreeSet;
use std::path::PathBuf;

use rdfco::model::catalog::find;
use rdfco::model::{
    catalog, classification_matrix, parse_rcf, render_dl, resolve, serialize_rcf, ClassRef,
    ConstraintSet, ContextDim, Element, ModelError,
};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

const CAPTAIN: &str = "@prefix ex: <http://example.org/>
constraint captain { mode: assert; contextKind: property; context: ex:Captain;
    left: ex:commandsVessel; right: -; classes: TOP; element: minCard; value: 1 }";

#[test]
fn captain_row_parses_and_renders() {
    let set = parse_rcf(CAPTAIN).unwrap();
    let row = set.get("captain").unwrap();
    assert_eq!(row.element, Element::MinCard);
    assert_eq!(row.classes, vec![ClassRef::Top]);
    assert_eq!(render_dl(row).unwrap(), "Captain ⊑ ≥1 commandsVessel.⊤");
    let again = parse_rcf(&serialize_rcf(&set)).unwrap();
    assert_eq!(again, set);
}

#[test]
fn subsumption_renders() {
    let set = parse_rcf(
        "@prefix ex: <http://example.org/>
        constraint m { mode: assert; contextKind: class; context: ex:Mother; left: -; right: -; classes: ex:Parent; element: subClassOf; value: - }",
    )
    .unwrap();
    assert_eq!(render_dl(set.get("m").unwrap()).unwrap(), "Mother ⊑ Parent");
}

#[test]
fn empty_documents() {
    assert!(parse_rcf("").unwrap().rows.is_empty());
    let text = serialize_rcf(&ConstraintSet::default());
    assert!(!text.lines().any(|l| l.starts_with("constraint ")));
    assert!(parse_rcf(&text).unwrap().rows.is_empty());
}

#[test]
fn parse_errors_are_specific() {
    let missing = parse_rcf(&CAPTAIN.replace("value: 1", "value: -")).unwrap_err();
    assert_eq!(missing.code(), "MISSING_VALUE");
    let unknown = parse_rcf(&CAPTAIN.replace("minCard", "atLeast")).unwrap_err();
    assert!(matches!(unknown, ModelError::UnknownElement { .. }));
    let dup = format!(
        "{CAPTAIN}\n{}",
        CAPTAIN.lines().skip(1).collect::<Vec<_>>().join("\n")
    );
    assert_eq!(parse_rcf(&dup).unwrap_err().code(), "DUPLICATE_ID");
    let prefix = parse_rcf("constraint a { mode: assert; contextKind: class; context: zz:A; left: -; right: -; classes: -; element: subClassOf; value: - }");
    assert!(matches!(prefix, Err(ModelError::UndeclaredPrefix { .. })));
    let op = parse_rcf(&fixture("lifespan.rcf").replace("'<'", "'~'")).unwrap_err();
    assert_eq!(op.code(), "INVALID_VALUE");
}

#[test]
fn resolution() {
    let pair = "@prefix ex: <http://example.org/>
        constraint notPoor { mode: define; contextKind: class; left: -; right: -; classes: ex:Poor; element: negation; value: - }
        constraint rich { mode: assert; contextKind: class; context: ex:Rich; left: -; right: -; classes: @notPoor; element: subClassOf; value: - }";
    assert_eq!(resolve(parse_rcf(pair).unwrap()).unwrap().rows().len(), 2);

    let cyclic = resolve(parse_rcf(&fixture("issue_min_one.rcf")).unwrap()).unwrap();
    assert!(cyclic.is_cyclic());

    let neg = "constraint a { mode: define; contextKind: class; left: -; right: -; classes: @a; element: negation; value: - }";
    assert_eq!(
        resolve(parse_rcf(neg).unwrap()).unwrap_err().code(),
        "NEGATION_CYCLE"
    );

    let dangling = "constraint a { mode: define; contextKind: class; left: -; right: -; classes: @b; element: union; value: - }";
    assert_eq!(
        resolve(parse_rcf(dangling).unwrap()).unwrap_err().code(),
        "UNRESOLVED_LABEL"
    );
}

#[test]
fn every_element_has_a_row_and_a_catalog_entry() {
    let set = parse_rcf(&fixture("elements.rcf")).unwrap();
    let written: BTreeSet<Element> = set.rows.iter().map(|r| r.element).collect();
    let listed: BTreeSet<Element> = catalog()
        .iter()
        .flat_map(|e| e.constraining_elements.iter().copied())
        .collect();
    for el in Element::ALL {
        assert!(written.contains(el), "no example row for {}", el.name());
        assert!(listed.contains(el), "no catalog entry uses {}", el.name());
    }
    resolve(set).unwrap();
}

#[test]
fn dl_rendering_is_total_on_dl_elements() {
    let set = parse_rcf(&fixture("elements.rcf")).unwrap();
    for row in &set.rows {
        match render_dl(row) {
            Ok(text) => assert!(
                row.element.dl_expressible(),
                "{} rendered as {text}",
                row.id
            ),
            Err(e) => {
                assert!(!row.element.dl_expressible(), "{}: {e}", row.id);
                assert_eq!(e.code(), "NOT_DL_EXPRESSIBLE");
            }
        }
    }
}

#[test]
fn rcf_round_trip_on_every_fixture() {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures"]
        .iter()
        .collect();
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "rcf") {
            let set = parse_rcf(&std::fs::read_to_string(&path).unwrap()).unwrap();
            let text = serialize_rcf(&set);
            let again = parse_rcf(&text).unwrap();
            assert_eq!(again, set, "{}", path.display());
            assert_eq!(serialize_rcf(&again), text, "{}", path.display());
            seen += 1;
        }
    }
    assert!(seen >= 20);
}

#[test]
fn catalog_dimensions() {
    let all = catalog();
    assert_eq!(all.len(), 81);
    let m = classification_matrix(&all);
    let counts =
        |b: &[rdfco::model::catalog::Bucket]| b.iter().map(|b| b.count).collect::<Vec<_>>();
    assert_eq!(counts(&m.context), [49, 20, 12]);
    assert_eq!(counts(&m.complexity), [49, 11, 21]);
    assert_eq!(counts(&m.dl), [52, 29]);
    let pct =
        |b: &[rdfco::model::catalog::Bucket]| b.iter().map(|b| b.to_string()).collect::<Vec<_>>();
    assert_eq!(pct(&m.context), ["60.49", "24.69", "14.81"]);
    assert_eq!(pct(&m.complexity), ["60.49", "13.58", "25.93"]);
    assert_eq!(pct(&m.dl), ["64.20", "35.80"]);
    let empty = classification_matrix(&[]);
    assert_eq!(empty.total, 0);
    assert!(empty
        .context
        .iter()
        .all(|b| b.count == 0 && b.basis_points == 0));
}

#[test]
fn catalog_entries() {
    assert!(!find("Literal Pattern Matching").unwrap().dl_expressible);
    let sub = find("Subsumption").unwrap();
    assert!(sub.inference_pre_pass && sub.cwa_dependent && sub.una_dependent);
    assert!(!find("Optional Properties").unwrap().cwa_dependent);
    assert_eq!(
        find("Minimum Qualified Cardinality").unwrap().context_dim,
        ContextDim::Property
    );
    let names: BTreeSet<&str> = catalog().iter().map(|e| e.type_name).collect();
    assert_eq!(names.len(), 81);
}

#[test]
fn xor_family_serializes_sorted() {
    let src = "@prefix ex: <http://example.org/>
@prefix xsd: <http://www.w3.org/2001/XMLSchema#>
constraint human { mode: assert; contextKind: class; context: ex:Human; left: -; right: -; classes: @oneName, @oneGivenName; element: xor; value: - }
constraint oneName { mode: define; contextKind: property; left: ex:name; right: -; classes: dt:xsd:string; element: exactCard; value: 1 }
constraint oneGivenName { mode: define; contextKind: property; left: ex:givenName; right: -; classes: dt:xsd:string; element: exactCard; value: 1 }
constraint noName { mode: define; contextKind: class; left: -; right: -; classes: @oneName; element: negation; value: - }
constraint noGivenName { mode: define; contextKind: class; left: -; right: -; classes: @oneGivenName; element: negation; value: - }
";
    let set = parse_rcf(src).unwrap();
    let text = serialize_rcf(&set);
    let ids: Vec<&str> = text
        .lines()
        .filter_map(|l| l.strip_prefix("constraint "))
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(
        ids,
        ["human", "noGivenName", "noName", "oneGivenName", "oneName"]
    );
    assert_eq!(parse_rcf(&text).unwrap(), set);
    resolve(set).unwrap();
}
