//! Reader for a Turtle subset: prefixes, `a`, `;` and `,` lists, quoted
//! literals, `[]` property lists, `_:` labels, collections and booleans.

use std::collections::BTreeMap;

use super::error::ParseError;
use super::graph::Graph;
use super::lex::{is_name_char, Cursor};
use super::ntriples::BlankLabels;
use super::term::{Literal, Term, Triple};
use super::vocab::{RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, XSD_BOOLEAN};

pub const DEFAULT_MAX_DEPTH: usize = 64;

pub fn parse_turtle(src: &str) -> Result<Graph, ParseError> {
    parse_turtle_with_depth(src, DEFAULT_MAX_DEPTH)
}

pub fn parse_turtle_with_depth(src: &str, max_depth: usize) -> Result<Graph, ParseError> {
    let mut p = Parser {
        cur: Cursor::new(src),
        prefixes: BTreeMap::new(),
        blanks: BlankLabels::default(),
        graph: Graph::new(),
        depth: 0,
        max_depth,
    };
    p.document()?;
    let Parser {
        mut graph,
        prefixes,
        ..
    } = p;
    for (k, v) in prefixes {
        graph.set_prefix(k, v);
    }
    Ok(graph)
}

struct Parser<'a> {
    cur: Cursor<'a>,
    prefixes: BTreeMap<String, String>,
    blanks: BlankLabels,
    graph: Graph,
    depth: usize,
    max_depth: usize,
}

impl Parser<'_> {
    fn document(&mut self) -> Result<(), ParseError> {
        loop {
            self.cur.skip_ws();
            if self.cur.at_end() {
                return Ok(());
            }
            let line = self.cur.line;
            if self.cur.rest().starts_with("@prefix") {
                self.cur.eat_str("@prefix");
                self.prefix_decl()?;
                self.cur.skip_ws();
                if !self.cur.eat('.') {
                    return Err(ParseError::Unterminated { line });
                }
            } else if starts_with_keyword(self.cur.rest(), "PREFIX") {
                self.cur.eat_str("PREFIX");
                self.prefix_decl()?;
            } else if self.cur.rest().starts_with("@base")
                || starts_with_keyword(self.cur.rest(), "BASE")
            {
                return Err(ParseError::Unsupported {
                    line,
                    what: "base declarations".into(),
                });
            } else {
                self.triples()?;
                self.cur.skip_ws();
                if !self.cur.eat('.') {
                    return Err(ParseError::Unterminated { line });
                }
            }
        }
    }

    fn prefix_decl(&mut self) -> Result<(), ParseError> {
        self.cur.skip_ws();
        let mut label = String::new();
        while let Some(c) = self.cur.peek() {
            if c == ':' {
                break;
            }
            if !is_name_char(c) && c != '.' {
                return Err(self.cur.err("bad prefix label"));
            }
            label.push(c);
            self.cur.bump();
        }
        if !self.cur.eat(':') {
            return Err(self.cur.err("expected ':' in prefix declaration"));
        }
        self.cur.skip_ws();
        if self.cur.peek() != Some('<') {
            return Err(self.cur.err("expected IRI in prefix declaration"));
        }
        let iri = self.cur.iri_ref()?;
        self.prefixes.insert(label, iri);
        Ok(())
    }

    fn triples(&mut self) -> Result<(), ParseError> {
        self.cur.skip_ws();
        if self.cur.peek() == Some('[') {
            let s = self.blank_property_list()?;
            self.cur.skip_ws();
            // `[ ... ] .` on its own is allowed
            if self.cur.peek() == Some('.') {
                return Ok(());
            }
            return self.predicate_object_list(&s);
        }
        let s = self.subject()?;
        self.predicate_object_list(&s)
    }

    fn subject(&mut self) -> Result<Term, ParseError> {
        self.cur.skip_ws();
        match self.cur.peek() {
            Some('(') => self.collection(),
            Some('"') | Some('\'') => Err(self.cur.err("literal in subject position")),
            _ => self.node(),
        }
    }

    fn predicate_object_list(&mut self, s: &Term) -> Result<(), ParseError> {
        loop {
            self.cur.skip_ws();
            let p = self.verb()?;
            loop {
                let o = self.object()?;
                self.graph.insert(Triple::new(s.clone(), p.clone(), o));
                self.cur.skip_ws();
                if !self.cur.eat(',') {
                    break;
                }
            }
            self.cur.skip_ws();
            if !self.cur.eat(';') {
                return Ok(());
            }
            // trailing or repeated ';'
            loop {
                self.cur.skip_ws();
                if !self.cur.eat(';') {
                    break;
                }
            }
            self.cur.skip_ws();
            if matches!(self.cur.peek(), Some('.') | Some(']') | None) {
                return Ok(());
            }
        }
    }

    fn verb(&mut self) -> Result<Term, ParseError> {
        if self.cur.peek() == Some('a')
            && !self
                .cur
                .peek_at(1)
                .is_some_and(|c| is_name_char(c) || c == ':')
        {
            self.cur.bump();
            return Ok(Term::iri(RDF_TYPE));
        }
        match self.node()? {
            t @ Term::Iri(_) => Ok(t),
            _ => Err(self.cur.err("predicate must be an IRI")),
        }
    }

    fn object(&mut self) -> Result<Term, ParseError> {
        self.cur.skip_ws();
        match self.cur.peek() {
            Some('[') => self.blank_property_list(),
            Some('(') => self.collection(),
            Some('"') | Some('\'') => self.literal(),
            Some(c) if c.is_ascii_digit() || c == '+' || c == '-' => Err(ParseError::Unsupported {
                line: self.cur.line,
                what: "numeric shorthand literals".into(),
            }),
            _ => {
                let r = self.cur.rest();
                for (kw, v) in [("true", "true"), ("false", "false")] {
                    if starts_with_keyword(r, kw) {
                        self.cur.eat_str(kw);
                        return Ok(Term::typed(v, XSD_BOOLEAN));
                    }
                }
                self.node()
            }
        }
    }

    fn literal(&mut self) -> Result<Term, ParseError> {
        if self.cur.rest().starts_with("\"\"\"") || self.cur.rest().starts_with("'''") {
            return Err(ParseError::Unsupported {
                line: self.cur.line,
                what: "multi-line literals".into(),
            });
        }
        let lex = self.cur.quoted()?;
        if self.cur.eat('@') {
            return Ok(Term::Literal(Literal::lang(lex, self.cur.lang_tag()?)));
        }
        if self.cur.eat_str("^^") {
            return match self.node()? {
                Term::Iri(dt) => Ok(Term::typed(lex, dt)),
                _ => Err(self.cur.err("datatype must be an IRI")),
            };
        }
        Ok(Term::string(lex))
    }

    /// IRI, prefixed name or blank node label.
    fn node(&mut self) -> Result<Term, ParseError> {
        self.cur.skip_ws();
        match self.cur.peek() {
            Some('<') => Ok(Term::iri(self.cur.iri_ref()?)),
            Some('_') if self.cur.peek_at(1) == Some(':') => {
                self.cur.eat_str("_:");
                let l = self.cur.blank_label()?;
                Ok(self.blanks.named(&l))
            }
            Some(_) => self.prefixed_name(),
            None => Err(ParseError::Unterminated {
                line: self.cur.line,
            }),
        }
    }

    fn prefixed_name(&mut self) -> Result<Term, ParseError> {
        let line = self.cur.line;
        let mut prefix = String::new();
        while let Some(c) = self.cur.peek() {
            if c == ':' {
                break;
            }
            if !is_name_char(c) {
                return Err(self.cur.err(format!("unexpected character '{c}'")));
            }
            prefix.push(c);
            self.cur.bump();
        }
        if !self.cur.eat(':') {
            return Err(self
                .cur
                .err(format!("expected prefixed name, found '{prefix}'")));
        }
        let mut local = String::new();
        while let Some(c) = self.cur.peek() {
            let dot_inside = c == '.' && self.cur.peek_at(1).is_some_and(is_name_char);
            if is_name_char(c) || dot_inside || c == ':' {
                local.push(c);
                self.cur.bump();
            } else if c == '\\' {
                self.cur.bump();
                match self.cur.bump() {
                    Some(e) => local.push(e),
                    None => return Err(ParseError::Unterminated { line }),
                }
            } else {
                break;
            }
        }
        let ns = self
            .prefixes
            .get(&prefix)
            .ok_or(ParseError::UndeclaredPrefix {
                line,
                prefix: prefix.clone(),
            })?;
        Ok(Term::iri(format!("{ns}{local}")))
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > self.max_depth {
            return Err(ParseError::TooDeep {
                line: self.cur.line,
                limit: self.max_depth,
            });
        }
        Ok(())
    }

    fn blank_property_list(&mut self) -> Result<Term, ParseError> {
        let line = self.cur.line;
        self.enter()?;
        self.cur.bump();
        let b = self.blanks.fresh();
        self.cur.skip_ws();
        if !self.cur.eat(']') {
            self.predicate_object_list(&b)?;
            self.cur.skip_ws();
            if !self.cur.eat(']') {
                return Err(ParseError::Unterminated { line });
            }
        }
        self.depth -= 1;
        Ok(b)
    }

    /// `( a b c )` becomes a first/rest chain ending in `rdf:nil`.
    fn collection(&mut self) -> Result<Term, ParseError> {
        let line = self.cur.line;
        self.enter()?;
        self.cur.bump();
        let mut items = Vec::new();
        loop {
            self.cur.skip_ws();
            match self.cur.peek() {
                Some(')') => {
                    self.cur.bump();
                    break;
                }
                None => return Err(ParseError::Unterminated { line }),
                _ => items.push(self.object()?),
            }
        }
        self.depth -= 1;
        if items.is_empty() {
            return Ok(Term::iri(RDF_NIL));
        }
        let cells: Vec<Term> = items.iter().map(|_| self.blanks.fresh()).collect();
        for (i, item) in items.into_iter().enumerate() {
            self.graph
                .insert(Triple::new(cells[i].clone(), Term::iri(RDF_FIRST), item));
            let rest = cells
                .get(i + 1)
                .cloned()
                .unwrap_or_else(|| Term::iri(RDF_NIL));
            self.graph
                .insert(Triple::new(cells[i].clone(), Term::iri(RDF_REST), rest));
        }
        Ok(cells[0].clone())
    }
}

fn starts_with_keyword(s: &str, kw: &str) -> bool {
    s.starts_with(kw)
        && !s[kw.len()..]
            .chars()
            .next()
            .is_some_and(|c| is_name_char(c) || c == ':')
}
