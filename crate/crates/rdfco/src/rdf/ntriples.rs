use std::collections::HashMap;

use super::error::ParseError;
use super::graph::Graph;
use super::lex::Cursor;
use super::term::{Literal, Term, Triple};

/// Hands out `bN` labels in order of first appearance.
#[derive(Default)]
pub(crate) struct BlankLabels {
    seen: HashMap<String, String>,
    next: usize,
}

impl BlankLabels {
    pub fn named(&mut self, label: &str) -> Term {
        if let Some(l) = self.seen.get(label) {
            return Term::blank(l.clone());
        }
        let fresh = self.fresh_label();
        self.seen.insert(label.to_string(), fresh.clone());
        Term::blank(fresh)
    }

    pub fn fresh(&mut self) -> Term {
        Term::blank(self.fresh_label())
    }

    fn fresh_label(&mut self) -> String {
        let l = format!("b{}", self.next);
        self.next += 1;
        l
    }
}

pub fn parse_ntriples(src: &str) -> Result<Graph, ParseError> {
    let mut g = Graph::new();
    let mut blanks = BlankLabels::default();
    let mut cur = Cursor::new(src);
    loop {
        skip_inline_ws(&mut cur);
        match cur.peek() {
            None => break,
            Some('\n') | Some('\r') => {
                cur.bump();
                continue;
            }
            Some('#') => {
                cur.skip_ws();
                continue;
            }
            _ => {}
        }
        let line = cur.line;
        let s = subject(&mut cur, &mut blanks)?;
        skip_inline_ws(&mut cur);
        if cur.peek() != Some('<') {
            return Err(cur.err("predicate must be an IRI"));
        }
        let p = Term::iri(cur.iri_ref()?);
        skip_inline_ws(&mut cur);
        let o = object(&mut cur, &mut blanks)?;
        skip_inline_ws(&mut cur);
        if !cur.eat('.') {
            return Err(ParseError::Unterminated { line });
        }
        skip_inline_ws(&mut cur);
        match cur.peek() {
            None | Some('\n') | Some('\r') | Some('#') => {}
            _ => return Err(cur.err("trailing content after '.'")),
        }
        if cur.peek() == Some('#') {
            while cur.peek().is_some_and(|c| c != '\n') {
                cur.bump();
            }
        }
        g.insert(Triple::new(s, p, o));
    }
    Ok(g)
}

fn skip_inline_ws(cur: &mut Cursor) {
    while matches!(cur.peek(), Some(' ') | Some('\t')) {
        cur.bump();
    }
}

fn subject(cur: &mut Cursor, blanks: &mut BlankLabels) -> Result<Term, ParseError> {
    match cur.peek() {
        Some('<') => Ok(Term::iri(cur.iri_ref()?)),
        Some('_') if cur.eat_str("_:") => Ok(blanks.named(&cur.blank_label()?)),
        _ => Err(cur.err("subject must be an IRI or blank node")),
    }
}

fn object(cur: &mut Cursor, blanks: &mut BlankLabels) -> Result<Term, ParseError> {
    match cur.peek() {
        Some('"') | Some('\'') => {
            let lex = cur.quoted()?;
            if cur.eat('@') {
                Ok(Term::Literal(Literal::lang(lex, cur.lang_tag()?)))
            } else if cur.eat_str("^^") {
                if cur.peek() != Some('<') {
                    return Err(cur.err("datatype must be an IRI"));
                }
                Ok(Term::typed(lex, cur.iri_ref()?))
            } else {
                Ok(Term::string(lex))
            }
        }
        _ => subject(cur, blanks),
    }
}

/// One triple per line, sorted by N-Triples text.
pub fn serialize_ntriples(g: &Graph) -> String {
    let mut lines: Vec<String> = g.iter().map(|t| t.to_string()).collect();
    lines.sort();
    let mut out = String::new();
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}
