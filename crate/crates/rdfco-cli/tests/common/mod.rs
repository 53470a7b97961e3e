//! Loads `fixtures/corpus.toml` and checks each fixture against the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use anyhow::{anyhow, Result};
use rdfco::inference::materialize;
use rdfco::model::{ClassRef, ResolvedSet};
use rdfco::rdf::{parse_ntriples, Graph, Term, Triple};
use rdfco::shex::{evaluate, parse_shexc, shapes_report, Shape};
use rdfco::validator::{
    extension, read_list, validate, ValidationConfig, ValidationReport, FIXPOINT_LIMIT,
};
use rdfco_cli::{load_constraints, load_graph};
use serde::Deserialize;

pub const EX: &str = "http://example.org/";

pub fn fixtures_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures"]
        .iter()
        .collect()
}

#[derive(Debug, Deserialize)]
struct Corpus {
    fixture: Vec<Fixture>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Expected {
    pub constraint: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub focus: String,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ListCheck {
    pub subject: String,
    pub property: String,
    pub index: usize,
    pub item: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    #[serde(default)]
    pub data: Vec<String>,
    #[serde(default)]
    pub rcf: Vec<String>,
    #[serde(default)]
    pub shex: Vec<String>,
    pub cwa: Option<bool>,
    pub una: Option<bool>,
    pub infer: Option<bool>,
    pub conforms: Option<bool>,
    #[serde(default)]
    pub violations: Vec<Expected>,
    pub error: Option<String>,
    #[serde(default)]
    pub shapes: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub extensions: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub inferred: Vec<String>,
    pub added: Option<usize>,
    pub list: Option<ListCheck>,
    pub sentinel: Option<String>,
}

pub fn corpus() -> Vec<Fixture> {
    let text = std::fs::read_to_string(fixtures_dir().join("corpus.toml")).expect("corpus.toml");
    let c: Corpus = toml::from_str(&text).expect("corpus.toml parses");
    c.fixture
}

/// `ex:x`, `<iri>`, `_:b` or any N-Triples term.
pub fn term(s: &str) -> Term {
    if let Some(local) = s.strip_prefix("ex:") {
        return Term::iri(format!("{EX}{local}"));
    }
    let g = parse_ntriples(&format!("<{EX}s> <{EX}p> {s} .\n"))
        .unwrap_or_else(|e| panic!("bad term {s}: {e}"));
    let t = g.iter().next().unwrap().object.clone();
    t
}

fn terms(xs: &[String]) -> BTreeSet<Term> {
    xs.iter().map(|x| term(x)).collect()
}

fn triple(line: &str) -> Triple {
    parse_ntriples(line)
        .unwrap_or_else(|e| panic!("bad triple {line}: {e}"))
        .iter()
        .next()
        .unwrap()
        .clone()
}

impl Fixture {
    fn paths(files: &[String]) -> Vec<PathBuf> {
        files.iter().map(|f| fixtures_dir().join(f)).collect()
    }

    pub fn data_paths(&self) -> Vec<PathBuf> {
        Self::paths(&self.data)
    }

    pub fn rcf_paths(&self) -> Vec<PathBuf> {
        Self::paths(&self.rcf)
    }

    pub fn shex_paths(&self) -> Vec<PathBuf> {
        Self::paths(&self.shex)
    }

    pub fn config(&self) -> ValidationConfig {
        let una = self.una.unwrap_or(true);
        ValidationConfig {
            cwa: self.cwa.unwrap_or(true),
            una,
            infer: self.infer.unwrap_or(false) || !una,
            ..ValidationConfig::default()
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        load_graph(&self.data_paths())
    }

    pub fn constraints(&self) -> Result<ResolvedSet> {
        load_constraints(&self.rcf_paths(), &self.shex_paths())
    }

    pub fn shapes(&self) -> Result<Vec<Shape>> {
        let mut out = Vec::new();
        for p in self.shex_paths() {
            out.extend(parse_shexc(&std::fs::read_to_string(p)?)?);
        }
        Ok(out)
    }

    pub fn report_with(&self, config: &ValidationConfig) -> Result<ValidationReport> {
        let g = self.graph()?;
        let set = self.constraints()?;
        Ok(validate(&g, &set, config)?)
    }

    pub fn report(&self) -> Result<ValidationReport> {
        self.report_with(&self.config())
    }

    /// Every expectation of the fixture; the mismatches, if any.
    pub fn check(&self) -> Vec<String> {
        let mut bad = Vec::new();
        match (&self.error, self.report()) {
            (Some(code), Ok(_)) => bad.push(format!("expected error {code}, got a report")),
            (Some(code), Err(e)) => {
                let msg = format!("{e:#}");
                if !msg.contains(code.as_str()) {
                    bad.push(format!("expected error {code}, got {msg}"));
                }
            }
            (None, Err(e)) => bad.push(format!("unexpected error: {e:#}")),
            (None, Ok(r)) => bad.extend(self.check_report(&r)),
        }
        if let Err(e) = self.check_shapes(&mut bad) {
            bad.push(format!("shapes: {e:#}"));
        }
        if let Err(e) = self.check_inference(&mut bad) {
            bad.push(format!("inference: {e:#}"));
        }
        bad
    }

    fn check_report(&self, r: &ValidationReport) -> Vec<String> {
        let mut bad = Vec::new();
        if let Some(c) = self.conforms {
            if r.conforms() != c {
                bad.push(format!("conforms = {}, expected {c}", r.conforms()));
            }
        }
        if self.conforms == Some(false) || !self.violations.is_empty() {
            let mut left: Vec<_> = r.violations.iter().collect();
            for e in &self.violations {
                let focus = term(&e.focus);
                let hit = left.iter().position(|v| {
                    v.constraint_id == e.constraint
                        && v.type_name() == e.kind
                        && v.focus == focus
                        && e.detail
                            .as_ref()
                            .is_none_or(|d| v.detail.contains(d.as_str()))
                });
                match hit {
                    Some(i) => {
                        left.remove(i);
                    }
                    None => bad.push(format!("missing violation {e:?}")),
                }
            }
            bad.extend(
                left.into_iter()
                    .map(|v| format!("unexpected violation {v}")),
            );
        }
        bad
    }

    fn check_shapes(&self, bad: &mut Vec<String>) -> Result<()> {
        if self.shapes.is_empty() {
            return Ok(());
        }
        let shapes = self.shapes()?;
        let g = self.graph()?;
        let direct = evaluate(&shapes, &g, FIXPOINT_LIMIT)?;
        let compiled = shapes_report(&shapes, &g)?;
        for (name, nodes) in &self.shapes {
            let key = term(name)
                .as_iri()
                .map(String::from)
                .ok_or_else(|| anyhow!("shape {name} is not an IRI"))?;
            let want = terms(nodes);
            for (how, got) in [("direct", &direct), ("compiled", &compiled)] {
                match got.get(&key) {
                    Some(s) if *s == want => {}
                    other => bad.push(format!("{how} {name}: {other:?}, expected {want:?}")),
                }
            }
        }
        Ok(())
    }

    fn check_inference(&self, bad: &mut Vec<String>) -> Result<()> {
        if !self.extensions.is_empty() {
            let (g, set) = (self.graph()?, self.constraints()?);
            for (label, nodes) in &self.extensions {
                let got = extension(&ClassRef::Defined(label.clone()), &g, &set, &self.config())?;
                if got != terms(nodes) {
                    bad.push(format!("extension {label}: {got:?}"));
                }
            }
        }
        if !self.inferred.is_empty() || self.added.is_some() {
            let (g, set) = (self.graph()?, self.constraints()?);
            let closed = materialize(
                &g,
                &set,
                &ValidationConfig {
                    infer: true,
                    ..self.config()
                },
            )?;
            for line in &self.inferred {
                if !closed.contains(&triple(line)) {
                    bad.push(format!("not inferred: {line}"));
                }
            }
            if let Some(n) = self.added {
                if closed.len() - g.len() != n {
                    bad.push(format!(
                        "{} triples added, expected {n}",
                        closed.len() - g.len()
                    ));
                }
            }
        }
        if let Some(l) = &self.list {
            let g = self.graph()?;
            let head = g
                .objects(&term(&l.subject), &term(&l.property))
                .next()
                .cloned();
            let head = head.ok_or_else(|| anyhow!("no list at {}", l.subject))?;
            let items = read_list(&g, &head).map_err(|e| anyhow!("{e}"))?;
            if items.get(l.index) != Some(&term(&l.item)) {
                bad.push(format!("list item {}: {:?}", l.index, items.get(l.index)));
            }
        }
        Ok(())
    }
}
