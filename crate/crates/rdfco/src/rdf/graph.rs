use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use super::term::{Term, Triple};
use super::vocab::RDF_TYPE;

/// Set of triples with lookup indexes on s, p, o, (s,p) and (p,o).
#[derive(Clone, Debug, Default)]
pub struct Graph {
    triples: Vec<Triple>,
    set: HashSet<Triple>,
    by_s: HashMap<Term, Vec<usize>>,
    by_p: HashMap<Term, Vec<usize>>,
    by_o: HashMap<Term, Vec<usize>>,
    by_sp: HashMap<(Term, Term), Vec<usize>>,
    by_po: HashMap<(Term, Term), Vec<usize>>,
    prefixes: BTreeMap<String, String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Returns true when the triple was not present yet.
    pub fn insert(&mut self, t: Triple) -> bool {
        if self.set.contains(&t) {
            return false;
        }
        let i = self.triples.len();
        self.by_s.entry(t.subject.clone()).or_default().push(i);
        self.by_p.entry(t.predicate.clone()).or_default().push(i);
        self.by_o.entry(t.object.clone()).or_default().push(i);
        self.by_sp
            .entry((t.subject.clone(), t.predicate.clone()))
            .or_default()
            .push(i);
        self.by_po
            .entry((t.predicate.clone(), t.object.clone()))
            .or_default()
            .push(i);
        self.set.insert(t.clone());
        self.triples.push(t);
        true
    }

    pub fn add(&mut self, s: Term, p: Term, o: Term) -> bool {
        self.insert(Triple::new(s, p, o))
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.set.contains(t)
    }

    pub fn has(&self, s: &Term, p: &Term, o: &Term) -> bool {
        // Cheap path without cloning into a Triple.
        self.by_sp
            .get(&(s.clone(), p.clone()))
            .is_some_and(|ix| ix.iter().any(|&i| &self.triples[i].object == o))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// Triples matching the pattern; `None` is a wildcard.
    pub fn matching<'a>(
        &'a self,
        s: Option<&Term>,
        p: Option<&Term>,
        o: Option<&Term>,
    ) -> Box<dyn Iterator<Item = &'a Triple> + 'a> {
        let ids: Option<&Vec<usize>> = match (s, p, o) {
            (None, None, None) => return Box::new(self.triples.iter()),
            (Some(s), Some(p), Some(o)) => {
                let t = Triple::new(s.clone(), p.clone(), o.clone());
                return match self.set.get(&t) {
                    Some(t) => Box::new(std::iter::once(t)),
                    None => Box::new(std::iter::empty()),
                };
            }
            (Some(s), Some(p), None) => self.by_sp.get(&(s.clone(), p.clone())),
            (None, Some(p), Some(o)) => self.by_po.get(&(p.clone(), o.clone())),
            (Some(s), None, _) => self.by_s.get(s),
            (None, Some(p), None) => self.by_p.get(p),
            (None, None, Some(o)) => self.by_o.get(o),
        };
        let s = s.cloned();
        let o = o.cloned();
        match ids {
            None => Box::new(std::iter::empty()),
            Some(ids) => Box::new(ids.iter().map(move |&i| &self.triples[i]).filter(move |t| {
                s.as_ref().is_none_or(|s| &t.subject == s)
                    && o.as_ref().is_none_or(|o| &t.object == o)
            })),
        }
    }

    pub fn objects<'a>(&'a self, s: &Term, p: &Term) -> impl Iterator<Item = &'a Term> + 'a {
        self.by_sp
            .get(&(s.clone(), p.clone()))
            .into_iter()
            .flatten()
            .map(move |&i| &self.triples[i].object)
    }

    pub fn subjects<'a>(&'a self, p: &Term, o: &Term) -> impl Iterator<Item = &'a Term> + 'a {
        self.by_po
            .get(&(p.clone(), o.clone()))
            .into_iter()
            .flatten()
            .map(move |&i| &self.triples[i].subject)
    }

    pub fn with_predicate<'a>(&'a self, p: &Term) -> impl Iterator<Item = &'a Triple> + 'a {
        self.by_p
            .get(p)
            .into_iter()
            .flatten()
            .map(move |&i| &self.triples[i])
    }

    pub fn with_subject<'a>(&'a self, s: &Term) -> impl Iterator<Item = &'a Triple> + 'a {
        self.by_s
            .get(s)
            .into_iter()
            .flatten()
            .map(move |&i| &self.triples[i])
    }

    /// Every term used in subject or object position.
    pub fn terms(&self) -> BTreeSet<Term> {
        let mut out = BTreeSet::new();
        for t in &self.triples {
            out.insert(t.subject.clone());
            out.insert(t.object.clone());
        }
        out
    }

    /// IRIs and blank nodes used in subject or object position.
    pub fn nodes(&self) -> BTreeSet<Term> {
        self.terms().into_iter().filter(Term::is_node).collect()
    }

    pub fn instances_of(&self, class: &str) -> BTreeSet<Term> {
        self.subjects(&Term::iri(RDF_TYPE), &Term::iri(class))
            .cloned()
            .collect()
    }

    pub fn prefixes(&self) -> &BTreeMap<String, String> {
        &self.prefixes
    }

    pub fn set_prefix(&mut self, label: impl Into<String>, iri: impl Into<String>) {
        self.prefixes.insert(label.into(), iri.into());
    }

    /// Triples in lexical order of their N-Triples form.
    pub fn sorted(&self) -> Vec<&Triple> {
        let mut v: Vec<(String, &Triple)> =
            self.triples.iter().map(|t| (t.to_string(), t)).collect();
        v.sort();
        v.into_iter().map(|(_, t)| t).collect()
    }
}

impl Extend<Triple> for Graph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        for t in iter {
            self.insert(t);
        }
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = Graph::new();
        g.extend(iter);
        g
    }
}
