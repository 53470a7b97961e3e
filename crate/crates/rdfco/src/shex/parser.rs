//! Reader for the compact shape syntax subset.

use std::collections::HashMap;

use super::ast::{Expr, Shape, TripleConstraint, ValueSpec};
use super::error::ShexError;
use crate::rdf::lex::Cursor;
use crate::rdf::vocab::{RDF, RDFS, XSD, XSD_BOOLEAN, XSD_INTEGER};
use crate::rdf::{Literal, Term};

pub fn parse_shexc(text: &str) -> Result<Vec<Shape>, ShexError> {
    let mut p = Parser {
        c: Cursor::new(text),
        prefixes: HashMap::new(),
        base: None,
    };
    let mut shapes = Vec::new();
    loop {
        p.c.skip_ws();
        if p.c.at_end() {
            break;
        }
        if p.directive()? {
            continue;
        }
        shapes.push(p.shape()?);
    }
    link(&shapes)?;
    Ok(shapes)
}

/// Every `&` and `@` target must be a parsed shape.
fn link(shapes: &[Shape]) -> Result<(), ShexError> {
    for s in shapes {
        if let Some(e) = &s.expr {
            for r in e.references() {
                if !shapes.iter().any(|t| t.name == r) {
                    return Err(ShexError::Unresolved(r.to_string()));
                }
            }
        }
    }
    Ok(())
}

fn is_datatype(iri: &str) -> bool {
    iri.starts_with(XSD) || iri == format!("{RDF}langString") || iri == format!("{RDFS}Literal")
}

struct Parser<'a> {
    c: Cursor<'a>,
    prefixes: HashMap<String, String>,
    base: Option<String>,
}

impl Parser<'_> {
    fn syntax(&self, message: impl Into<String>) -> ShexError {
        ShexError::Syntax {
            line: self.c.line,
            message: message.into(),
        }
    }

    fn expect(&mut self, ch: char) -> Result<(), ShexError> {
        self.c.skip_ws();
        if self.c.eat(ch) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{ch}'")))
        }
    }

    fn word(&mut self) -> String {
        let mut w = String::new();
        while let Some(ch) = self.c.peek() {
            if ch.is_alphanumeric() || matches!(ch, '_' | '-' | ':' | '.') {
                // a trailing dot ends a statement, not a name
                if ch == '.'
                    && !self
                        .c
                        .peek_at(1)
                        .is_some_and(|n| n.is_alphanumeric() || n == '_')
                {
                    break;
                }
                w.push(ch);
                self.c.bump();
            } else {
                break;
            }
        }
        w
    }

    fn directive(&mut self) -> Result<bool, ShexError> {
        let rest = self.c.rest();
        let upper: String = rest
            .chars()
            .take(7)
            .collect::<String>()
            .to_ascii_uppercase();
        let sparql = upper.starts_with("PREFIX ") || upper.starts_with("PREFIX\t");
        if sparql || rest.starts_with("@prefix") {
            for _ in 0..(if sparql { 6 } else { 7 }) {
                self.c.bump();
            }
            self.c.skip_ws();
            let label = self.word();
            let Some(label) = label.strip_suffix(':') else {
                return Err(self.syntax("expected 'prefix:'"));
            };
            let label = label.to_string();
            self.c.skip_ws();
            let iri = self.iri_ref()?;
            self.prefixes.insert(label, iri);
            self.c.skip_ws();
            if !sparql {
                self.c.eat('.');
            }
            return Ok(true);
        }
        if upper.starts_with("BASE") || rest.starts_with("@base") {
            let at = rest.starts_with('@');
            for _ in 0..(if at { 5 } else { 4 }) {
                self.c.bump();
            }
            self.c.skip_ws();
            let iri = self.iri_ref()?;
            self.base = Some(iri);
            self.c.skip_ws();
            if at {
                self.c.eat('.');
            }
            return Ok(true);
        }
        Ok(false)
    }

    fn iri_ref(&mut self) -> Result<String, ShexError> {
        if !self.c.eat('<') {
            return Err(self.syntax("expected '<'"));
        }
        let mut out = String::new();
        loop {
            match self.c.bump() {
                None | Some('\n') => return Err(self.syntax("unterminated IRI")),
                Some('>') => break,
                Some(ch) if ch.is_whitespace() => return Err(self.syntax("space inside IRI")),
                Some(ch) => out.push(ch),
            }
        }
        if crate::rdf::is_valid_iri(&out) {
            return Ok(out);
        }
        match &self.base {
            Some(b) => Ok(format!("{b}{out}")),
            None => Err(self.syntax(format!("relative IRI <{out}> without BASE"))),
        }
    }

    fn pname(&mut self, w: &str) -> Result<String, ShexError> {
        let Some((prefix, local)) = w.split_once(':') else {
            return Err(ShexError::UnknownToken {
                line: self.c.line,
                token: w.to_string(),
            });
        };
        match self.prefixes.get(prefix) {
            Some(ns) => Ok(format!("{ns}{local}")),
            None => Err(ShexError::UndeclaredPrefix {
                line: self.c.line,
                prefix: prefix.to_string(),
            }),
        }
    }

    /// `<iri>` or `prefix:local`.
    fn iri(&mut self) -> Result<String, ShexError> {
        self.c.skip_ws();
        if self.c.peek() == Some('<') {
            return self.iri_ref();
        }
        let w = self.word();
        if w.is_empty() {
            let token = self.c.peek().map(String::from).unwrap_or_default();
            return Err(ShexError::UnknownToken {
                line: self.c.line,
                token,
            });
        }
        self.pname(&w)
    }

    fn shape(&mut self) -> Result<Shape, ShexError> {
        let name = self.iri()?;
        self.expect('{')?;
        self.c.skip_ws();
        let expr = if self.c.peek() == Some('}') {
            None
        } else {
            Some(self.choice()?)
        };
        self.expect('}')?;
        Ok(Shape { name, expr })
    }

    fn choice(&mut self) -> Result<Expr, ShexError> {
        let mut branches = vec![self.group()?];
        loop {
            self.c.skip_ws();
            if !self.c.eat('|') {
                break;
            }
            branches.push(self.group()?);
        }
        Ok(if branches.len() == 1 {
            branches.pop().unwrap()
        } else {
            Expr::Choice(branches)
        })
    }

    fn group(&mut self) -> Result<Expr, ShexError> {
        let mut parts = vec![self.unary()?];
        loop {
            self.c.skip_ws();
            if !self.c.eat(',') {
                break;
            }
            self.c.skip_ws();
            // tolerate a trailing comma before `)` or `}`
            if matches!(self.c.peek(), Some(')') | Some('}')) {
                break;
            }
            parts.push(self.unary()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Expr::Group(parts)
        })
    }

    fn unary(&mut self) -> Result<Expr, ShexError> {
        self.c.skip_ws();
        match self.c.peek() {
            Some('(') => {
                self.c.bump();
                let inner = self.choice()?;
                self.expect(')')?;
                self.c.skip_ws();
                if matches!(self.c.peek(), Some('*' | '+' | '?' | '{')) {
                    return Err(ShexError::UnsupportedFeature(
                        "cardinality on a group".into(),
                    ));
                }
                Ok(inner)
            }
            Some('&') => {
                self.c.bump();
                Ok(Expr::Include(self.iri()?))
            }
            Some('!') => {
                self.c.bump();
                let mut tc = self.triple()?;
                tc.negated = true;
                Ok(Expr::Triple(tc))
            }
            _ => Ok(Expr::Triple(self.triple()?)),
        }
    }

    fn triple(&mut self) -> Result<TripleConstraint, ShexError> {
        self.c.skip_ws();
        let inverse = self.c.eat('^');
        let predicate = self.iri()?;
        let value = self.value_spec()?;
        let (min, max) = self.cardinality()?;
        if max.is_some_and(|m| m < min) {
            return Err(self.syntax(format!(
                "cardinality {{{min},{}}} has max below min",
                max.unwrap()
            )));
        }
        Ok(TripleConstraint {
            predicate,
            inverse,
            value,
            min,
            max,
            negated: false,
        })
    }

    fn value_spec(&mut self) -> Result<ValueSpec, ShexError> {
        self.c.skip_ws();
        match self.c.peek() {
            Some('.') => {
                self.c.bump();
                Ok(ValueSpec::Any)
            }
            Some('{') => {
                self.c.bump();
                self.c.skip_ws();
                if !self.c.eat('}') {
                    return Err(ShexError::UnsupportedFeature(
                        "nested shape expressions".into(),
                    ));
                }
                Ok(ValueSpec::Any)
            }
            Some('@') => {
                self.c.bump();
                Ok(ValueSpec::ShapeRef(self.iri()?))
            }
            Some('(') => {
                self.c.bump();
                let mut values = Vec::new();
                loop {
                    self.c.skip_ws();
                    if self.c.eat(')') {
                        break;
                    }
                    values.push(self.value()?);
                }
                if values.is_empty() {
                    return Err(self.syntax("empty value set"));
                }
                Ok(ValueSpec::Values(values))
            }
            _ => {
                if self.c.rest().starts_with("IRI")
                    && !self
                        .c
                        .peek_at(3)
                        .is_some_and(|c| c.is_alphanumeric() || c == ':')
                {
                    for _ in 0..3 {
                        self.c.bump();
                    }
                    return Ok(ValueSpec::IriKind);
                }
                let iri = self.iri()?;
                Ok(if is_datatype(&iri) {
                    ValueSpec::Datatype(iri)
                } else {
                    ValueSpec::Class(iri)
                })
            }
        }
    }

    fn value(&mut self) -> Result<Term, ShexError> {
        match self.c.peek() {
            Some('\'' | '"') => {
                let lex = self.c.quoted().map_err(|e| self.syntax(e.to_string()))?;
                if self.c.eat_str("^^") {
                    let dt = self.iri()?;
                    Ok(Term::typed(lex, dt))
                } else if self.c.eat('@') {
                    let tag = self.c.lang_tag().map_err(|e| self.syntax(e.to_string()))?;
                    Ok(Term::Literal(Literal::lang(lex, tag)))
                } else {
                    Ok(Term::string(lex))
                }
            }
            Some('<') => Ok(Term::iri(self.iri_ref()?)),
            Some(ch) if ch.is_ascii_digit() || ch == '-' || ch == '+' => {
                let w = self.word();
                if w.parse::<i64>().is_ok() {
                    Ok(Term::typed(w, XSD_INTEGER))
                } else {
                    Err(ShexError::UnknownToken {
                        line: self.c.line,
                        token: w,
                    })
                }
            }
            _ => {
                let w = self.word();
                match w.as_str() {
                    "true" | "false" => Ok(Term::typed(w, XSD_BOOLEAN)),
                    "" => Err(ShexError::UnknownToken {
                        line: self.c.line,
                        token: self.c.peek().map(String::from).unwrap_or_default(),
                    }),
                    _ => Ok(Term::iri(self.pname(&w)?)),
                }
            }
        }
    }

    fn number(&mut self) -> Result<u32, ShexError> {
        self.c.skip_ws();
        let mut s = String::new();
        while let Some(ch) = self.c.peek().filter(char::is_ascii_digit) {
            s.push(ch);
            self.c.bump();
        }
        s.parse().map_err(|_| self.syntax("expected a number"))
    }

    fn cardinality(&mut self) -> Result<(u32, Option<u32>), ShexError> {
        self.c.skip_ws();
        match self.c.peek() {
            Some('*') => {
                self.c.bump();
                Ok((0, None))
            }
            Some('+') => {
                self.c.bump();
                Ok((1, None))
            }
            Some('?') => {
                self.c.bump();
                Ok((0, Some(1)))
            }
            Some('{') => {
                self.c.bump();
                let min = self.number()?;
                self.c.skip_ws();
                let max = if self.c.eat(',') {
                    self.c.skip_ws();
                    if self.c.peek() == Some('}') {
                        None
                    } else {
                        Some(self.number()?)
                    }
                } else {
                    Some(min)
                };
                self.expect('}')?;
                Ok((min, max))
            }
            _ => Ok((1, Some(1))),
        }
    }
}
