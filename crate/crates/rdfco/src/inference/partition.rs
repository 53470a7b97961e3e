use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::rdf::vocab::OWL_SAME_AS;
use crate::rdf::{Graph, Term};

/// Equivalence classes of individuals linked by `owl:sameAs`.
#[derive(Clone, Debug, Default)]
pub struct SameAsPartition {
    rep: HashMap<Term, Term>,
    members: BTreeMap<Term, BTreeSet<Term>>,
}

/// IRIs before blank nodes, then lexical order.
fn preferred(a: &Term, b: &Term) -> bool {
    (a.is_literal(), matches!(a, Term::Blank(_)), a)
        < (b.is_literal(), matches!(b, Term::Blank(_)), b)
}

impl SameAsPartition {
    /// Every term is alone in its class.
    pub fn discrete() -> Self {
        Self::default()
    }

    pub fn from_graph(g: &Graph) -> Self {
        let pairs = g
            .with_predicate(&Term::iri(OWL_SAME_AS))
            .filter(|t| t.subject.is_node() && t.object.is_node())
            .map(|t| (t.subject.clone(), t.object.clone()));
        Self::from_pairs(pairs)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Term, Term)>) -> Self {
        let mut parent: HashMap<Term, Term> = HashMap::new();
        fn find(parent: &mut HashMap<Term, Term>, t: &Term) -> Term {
            let mut root = t.clone();
            while let Some(p) = parent.get(&root) {
                if p == &root {
                    break;
                }
                root = p.clone();
            }
            // path compression
            let mut cur = t.clone();
            while let Some(p) = parent.get(&cur).cloned() {
                if p == root {
                    break;
                }
                parent.insert(cur, root.clone());
                cur = p;
            }
            root
        }
        for (a, b) in pairs {
            parent.entry(a.clone()).or_insert_with(|| a.clone());
            parent.entry(b.clone()).or_insert_with(|| b.clone());
            let ra = find(&mut parent, &a);
            let rb = find(&mut parent, &b);
            if ra != rb {
                if preferred(&ra, &rb) {
                    parent.insert(rb, ra);
                } else {
                    parent.insert(ra, rb);
                }
            }
        }
        let keys: Vec<Term> = parent.keys().cloned().collect();
        let mut rep = HashMap::new();
        let mut members: BTreeMap<Term, BTreeSet<Term>> = BTreeMap::new();
        for k in keys {
            let r = find(&mut parent, &k);
            members.entry(r.clone()).or_default().insert(k.clone());
            rep.insert(k, r);
        }
        SameAsPartition { rep, members }
    }

    /// Canonical representative: the preferred member of the class.
    pub fn rep<'a>(&'a self, t: &'a Term) -> &'a Term {
        self.rep.get(t).unwrap_or(t)
    }

    pub fn same(&self, a: &Term, b: &Term) -> bool {
        self.rep(a) == self.rep(b)
    }

    /// All members of `t`'s class, `t` included.
    pub fn members(&self, t: &Term) -> BTreeSet<Term> {
        match self.members.get(self.rep(t)) {
            Some(m) => m.clone(),
            None => BTreeSet::from([t.clone()]),
        }
    }

    /// Classes with more than one member.
    pub fn classes(&self) -> impl Iterator<Item = &BTreeSet<Term>> {
        self.members.values().filter(|m| m.len() > 1)
    }

    pub fn is_discrete(&self) -> bool {
        self.classes().next().is_none()
    }

    /// `g` with every subject and object replaced by its representative.
    /// `owl:sameAs` triples are dropped.
    pub fn canonical(&self, g: &Graph) -> Graph {
        if self.is_discrete() {
            return g.clone();
        }
        let same = Term::iri(OWL_SAME_AS);
        let mut out = Graph::new();
        for t in g.iter() {
            if t.predicate == same {
                continue;
            }
            out.add(
                self.rep(&t.subject).clone(),
                t.predicate.clone(),
                self.rep(&t.object).clone(),
            );
        }
        for (k, v) in g.prefixes() {
            out.set_prefix(k.clone(), v.clone());
        }
        out
    }
}
