mod support;

use proptest::prelude::*;
use rdfco::validator::{extension, ValidationConfig};
use support::{class_tree, compile, small_graph, Cls, Oracle};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn extension_matches_set_algebra(g in small_graph(), c in class_tree()) {
        let (root, set) = compile(&c);
        let got = extension(&root, &g, &set, &ValidationConfig::default()).unwrap();
        prop_assert_eq!(got, Oracle::new(&g).eval(&c));
    }

    #[test]
    fn negation_partitions_the_universe(g in small_graph(), c in class_tree()) {
        let config = ValidationConfig::default();
        let (pos, set) = compile(&c);
        let (neg, nset) = compile(&Cls::Not(Box::new(c)));
        let a = extension(&pos, &g, &set, &config).unwrap();
        let b = extension(&neg, &g, &nset, &config).unwrap();
        prop_assert!(a.is_disjoint(&b));
        prop_assert_eq!(a.len() + b.len(), g.terms().len());
    }
}

#[test]
fn unqualified_filler_admits_literals() {
    let g: rdfco::rdf::Graph = [rdfco::rdf::Triple::new(
        support::individual(0),
        rdfco::rdf::Term::iri(support::ex("p")),
        rdfco::rdf::Term::string("x"),
    )]
    .into_iter()
    .collect();
    let p = support::Prop {
        index: 0,
        inverse: false,
    };
    let config = ValidationConfig::default();
    let (any, set) = compile(&Cls::Exists(p, None));
    let (top, tset) = compile(&Cls::Exists(p, Some(Box::new(Cls::Top))));
    assert_eq!(extension(&any, &g, &set, &config).unwrap().len(), 1);
    assert!(extension(&top, &g, &tset, &config).unwrap().is_empty());
}
