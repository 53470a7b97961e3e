//! Reader and writer for the RCF constraint file format.
//!
//! ```text
//! @prefix ex: <http://example.org/>
//! constraint captain { mode: assert; contextKind: property; context: ex:Captain;
//!     left: ex:commandsVessel; classes: TOP; element: minCard; value: 1 }
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use super::constraint::*;
use super::{Element, ModelError};
use crate::rdf::term::escape_literal;
use crate::rdf::vocab::{RDF_LANG_STRING, XSD, XSD_BOOLEAN, XSD_INTEGER, XSD_STRING};
use crate::rdf::{is_valid_iri, Literal, Term};

pub fn parse_rcf(src: &str) -> Result<ConstraintSet, ModelError> {
    let mut r = Reader {
        src,
        pos: 0,
        line: 1,
    };
    let mut set = ConstraintSet::default();
    let mut ids = HashSet::new();
    loop {
        r.skip_ws();
        if r.at_end() {
            break;
        }
        let line = r.line;
        let word = r.word();
        match word.as_str() {
            "@prefix" | "PREFIX" => {
                r.skip_ws();
                let label = r.until(':');
                if !r.eat(':') {
                    return Err(syntax(line, "expected ':' after prefix label"));
                }
                r.skip_ws();
                let iri = r.word();
                let iri = iri
                    .strip_prefix('<')
                    .and_then(|s| s.strip_suffix('>'))
                    .ok_or_else(|| syntax(line, "prefix IRI must be in angle brackets"))?;
                r.skip_ws();
                r.eat('.');
                set.prefixes.retain(|(l, _)| *l != label);
                set.prefixes
                    .push((label.trim().to_string(), iri.to_string()));
            }
            "constraint" => {
                r.skip_ws();
                let id = r.word();
                if id.is_empty() || !id.chars().all(is_id_char) {
                    return Err(syntax(line, format!("bad constraint id '{id}'")));
                }
                r.skip_ws();
                if !r.eat('{') {
                    return Err(syntax(line, "expected '{' after constraint id"));
                }
                let body = r
                    .block_body()
                    .ok_or_else(|| syntax(line, "unterminated constraint block"))?;
                let row = parse_block(&id, &body, line, &set.prefixes)?;
                if !ids.insert(row.id.clone()) {
                    return Err(ModelError::DuplicateId(row.id));
                }
                set.rows.push(row);
            }
            "" => return Err(syntax(line, "unexpected character")),
            other => return Err(syntax(line, format!("unexpected '{other}'"))),
        }
    }
    // Ids are unique, so id order is canonical.
    set.rows.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(set)
}

fn syntax(line: usize, message: impl Into<String>) -> ModelError {
    ModelError::Syntax {
        line,
        message: message.into(),
    }
}

fn is_id_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.')
}

struct Reader<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
}

impl Reader<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn word(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_whitespace() || c == '{' {
                break;
            }
            s.push(c);
            self.bump();
        }
        s
    }

    fn until(&mut self, stop: char) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c == stop || c.is_whitespace() {
                break;
            }
            s.push(c);
            self.bump();
        }
        s
    }

    /// Text up to the matching `}`; quotes and angle brackets are opaque.
    fn block_body(&mut self) -> Option<String> {
        let start = self.pos;
        let mut depth = 0usize;
        let mut quote: Option<char> = None;
        let mut in_iri = false;
        while let Some(c) = self.bump() {
            if let Some(q) = quote {
                if c == '\\' {
                    self.bump();
                } else if c == q {
                    quote = None;
                }
                continue;
            }
            if in_iri {
                if c == '>' || c.is_whitespace() {
                    in_iri = false;
                }
                continue;
            }
            match c {
                '"' | '\'' => quote = Some(c),
                '<' if self.peek().is_some_and(|n| n.is_ascii_alphabetic()) => in_iri = true,
                '{' => depth += 1,
                '}' if depth == 0 => return Some(self.src[start..self.pos - 1].to_string()),
                '}' => depth -= 1,
                '#' if self.src[..self.pos - 1].ends_with(char::is_whitespace) => {
                    while self.peek().is_some_and(|c| c != '\n') {
                        self.bump();
                    }
                }
                _ => {}
            }
        }
        None
    }
}

/// Splits on `sep` outside quotes, brackets and braces.
fn split_top(s: &str, sep: char) -> Vec<String> {
    let mut parts = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut quote: Option<char> = None;
    let mut escaped = false;
    let mut in_iri = false;
    let chars: Vec<char> = s.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        if let Some(q) = quote {
            cur.push(c);
            if escaped {
                escaped = false;
            } else if c == '\\' {
                escaped = true;
            } else if c == q {
                quote = None;
            }
            continue;
        }
        if in_iri {
            cur.push(c);
            if c == '>' {
                in_iri = false;
            }
            continue;
        }
        match c {
            '"' | '\'' => quote = Some(c),
            '<' if chars.get(i + 1).is_some_and(|n| n.is_ascii_alphabetic())
                && s[s.char_indices().nth(i).unwrap().0..].contains('>') =>
            {
                in_iri = true
            }
            '{' | '[' | '(' => depth += 1,
            '}' | ']' | ')' => depth -= 1,
            _ if c == sep && depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    parts.push(cur);
    parts
}

struct Ctx<'a> {
    prefixes: &'a [(String, String)],
    line: usize,
    id: &'a str,
}

impl Ctx<'_> {
    fn err(&self, message: impl Into<String>) -> ModelError {
        ModelError::Syntax {
            line: self.line,
            message: format!("constraint '{}': {}", self.id, message.into()),
        }
    }

    fn iri(&self, s: &str) -> Result<String, ModelError> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('<').and_then(|x| x.strip_suffix('>')) {
            if !is_valid_iri(inner) {
                return Err(self.err(format!("invalid IRI <{inner}>")));
            }
            return Ok(inner.to_string());
        }
        let (p, local) = s
            .split_once(':')
            .ok_or_else(|| self.err(format!("expected an IRI, found '{s}'")))?;
        if !local
            .chars()
            .all(|c| is_id_char(c) || c == ':' || c == '#' || c == '/')
            || s.contains(char::is_whitespace)
        {
            return Err(self.err(format!("bad prefixed name '{s}'")));
        }
        let ns = self
            .prefixes
            .iter()
            .rev()
            .find(|(l, _)| l == p)
            .map(|(_, ns)| ns)
            .ok_or_else(|| ModelError::UndeclaredPrefix {
                line: self.line,
                prefix: p.to_string(),
            })?;
        Ok(format!("{ns}{local}"))
    }

    fn term(&self, s: &str) -> Result<Term, ModelError> {
        let s = s.trim();
        if s.starts_with('"') || s.starts_with('\'') {
            let (lex, rest) =
                unquote(s).ok_or_else(|| self.err(format!("unterminated string {s}")))?;
            if let Some(lang) = rest.strip_prefix('@') {
                return Ok(Term::Literal(Literal::lang(lex, lang)));
            }
            if let Some(dt) = rest.strip_prefix("^^") {
                return Ok(Term::typed(lex, self.iri(dt)?));
            }
            if !rest.trim().is_empty() {
                return Err(self.err(format!("unexpected '{rest}' after string")));
            }
            return Ok(Term::string(lex));
        }
        if s == "true" || s == "false" {
            return Ok(Term::typed(s, XSD_BOOLEAN));
        }
        if is_integer(s) {
            return Ok(Term::typed(s, XSD_INTEGER));
        }
        Ok(Term::iri(self.iri(s)?))
    }

    fn class_ref(&self, s: &str) -> Result<ClassRef, ModelError> {
        let s = s.trim();
        Ok(match s {
            "TOP" | "⊤" => ClassRef::Top,
            "BOTTOM" | "⊥" => ClassRef::Bottom,
            "SELF" | "Self" => ClassRef::SelfRef,
            "IRI" => ClassRef::IriKind,
            _ if s.starts_with('{') => {
                let inner = s
                    .strip_prefix('{')
                    .and_then(|x| x.strip_suffix('}'))
                    .ok_or_else(|| self.err(format!("unbalanced nominal list {s}")))?;
                let mut terms = Vec::new();
                for part in split_top(inner, ',') {
                    if !part.trim().is_empty() {
                        terms.push(self.term(&part)?);
                    }
                }
                ClassRef::Nominals(terms)
            }
            _ if s.starts_with("dt:") => ClassRef::Datatype(self.iri(&s[3..])?),
            _ if s.starts_with('@') => {
                let label = &s[1..];
                if label.is_empty() || !label.chars().all(is_id_char) {
                    return Err(self.err(format!("bad label reference '{s}'")));
                }
                ClassRef::Defined(label.to_string())
            }
            _ => ClassRef::Named(self.iri(s)?),
        })
    }

    fn class_list(&self, s: &str) -> Result<Vec<ClassRef>, ModelError> {
        if s.trim() == "-" || s.trim().is_empty() {
            return Ok(Vec::new());
        }
        split_top(s, ',')
            .iter()
            .map(|p| self.class_ref(p))
            .collect()
    }

    fn property(&self, s: &str) -> Result<PropertyRef, ModelError> {
        let mut steps = Vec::new();
        for part in split_top(s.trim(), '/') {
            let part = part.trim();
            let (inverse, iri) = match part.strip_prefix('^') {
                Some(rest) => (true, rest),
                None => (false, part),
            };
            steps.push(Step {
                iri: self.iri(iri)?,
                inverse,
            });
        }
        Ok(PropertyRef { steps })
    }

    fn property_list(&self, s: &str) -> Result<Vec<PropertyRef>, ModelError> {
        if s.trim() == "-" || s.trim().is_empty() {
            return Ok(Vec::new());
        }
        split_top(s, ',').iter().map(|p| self.property(p)).collect()
    }

    fn value(&self, s: &str) -> Result<Option<ConstraintValue>, ModelError> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(None);
        }
        if is_integer(s) {
            return s
                .parse()
                .map(|i| Some(ConstraintValue::Int(i)))
                .map_err(|_| self.err("integer out of range"));
        }
        if s.starts_with('"') || s.starts_with('\'') {
            let (lex, rest) =
                unquote(s).ok_or_else(|| self.err(format!("unterminated string {s}")))?;
            if rest.trim().is_empty() {
                return Ok(Some(ConstraintValue::Text(lex)));
            }
            return self.term(s).map(|t| Some(ConstraintValue::Term(t)));
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
            let mut facets = Vec::new();
            for part in split_top(inner, ',') {
                let (k, v) = part
                    .split_once('=')
                    .ok_or_else(|| self.err(format!("bad facet '{part}'")))?;
                let v = v.trim();
                let v = match unquote(v) {
                    Some((lex, "")) => lex,
                    _ => v.to_string(),
                };
                facets.push((k.trim().to_string(), v));
            }
            return Ok(Some(ConstraintValue::Facets(facets)));
        }
        if s.starts_with('<') && s.ends_with('>') && s.len() > 2 && is_valid_iri(&s[1..s.len() - 1])
        {
            return Ok(Some(ConstraintValue::Term(Term::iri(&s[1..s.len() - 1]))));
        }
        if let Some((p, _)) = s.split_once(':') {
            if self.prefixes.iter().any(|(l, _)| l == p) {
                return self
                    .iri(s)
                    .map(|i| Some(ConstraintValue::Term(Term::iri(i))));
            }
        }
        Ok(Some(ConstraintValue::Text(s.to_string())))
    }
}

fn is_integer(s: &str) -> bool {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    !body.is_empty() && body.chars().all(|c| c.is_ascii_digit())
}

/// Splits a quoted string from whatever follows the closing quote.
fn unquote(s: &str) -> Option<(String, &str)> {
    let mut chars = s.char_indices();
    let (_, q) = chars.next()?;
    if q != '"' && q != '\'' {
        return None;
    }
    let mut out = String::new();
    let mut escaped = false;
    for (i, c) in chars {
        if escaped {
            match c {
                'n' => out.push('\n'),
                't' => out.push('\t'),
                'r' => out.push('\r'),
                '"' | '\'' | '\\' => out.push(c),
                // regex escapes such as \d pass through untouched
                other => {
                    out.push('\\');
                    out.push(other);
                }
            }
            escaped = false;
        } else if c == '\\' {
            escaped = true;
        } else if c == q {
            return Some((out, &s[i + c.len_utf8()..]));
        } else {
            out.push(c);
        }
    }
    None
}

fn parse_block(
    id: &str,
    body: &str,
    line: usize,
    prefixes: &[(String, String)],
) -> Result<GenericConstraint, ModelError> {
    let cx = Ctx { prefixes, line, id };
    let mut fields: Vec<(String, String)> = Vec::new();
    for part in split_top(body, ';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (k, v) = part
            .split_once(':')
            .ok_or_else(|| cx.err(format!("expected 'field: value', found '{part}'")))?;
        let k = k.trim().to_string();
        if fields.iter().any(|(f, _)| *f == k) {
            return Err(cx.err(format!("field '{k}' given twice")));
        }
        fields.push((k, v.trim().to_string()));
    }
    let get = |k: &str| fields.iter().find(|(f, _)| f == k).map(|(_, v)| v.as_str());
    for (k, _) in &fields {
        if !matches!(
            k.as_str(),
            "mode"
                | "contextKind"
                | "context"
                | "left"
                | "right"
                | "classes"
                | "element"
                | "value"
                | "severity"
        ) {
            return Err(cx.err(format!("unknown field '{k}'")));
        }
    }
    let need = |k: &str| get(k).ok_or_else(|| cx.err(format!("missing field '{k}'")));

    let mode = match need("mode")?.to_ascii_lowercase().as_str() {
        "define" => Mode::Define,
        "assert" => Mode::Assert,
        m => return Err(cx.err(format!("bad mode '{m}'"))),
    };
    let context_kind = match need("contextKind")?.to_ascii_lowercase().as_str() {
        "class" => ContextKind::Class,
        "property" => ContextKind::Property,
        k => return Err(cx.err(format!("bad contextKind '{k}'"))),
    };
    let element_name = need("element")?;
    let element: Element = element_name
        .parse()
        .map_err(|name| ModelError::UnknownElement { line, name })?;
    let context = match mode {
        // a definition's context defaults to its own label
        Mode::Define if get("context").is_none() => ClassRef::Defined(id.to_string()),
        _ => cx.class_ref(need("context")?)?,
    };
    let severity = match get("severity") {
        None | Some("-") => element.default_severity(),
        Some(s) => Severity::parse(s).ok_or_else(|| cx.err(format!("bad severity '{s}'")))?,
    };
    let row = GenericConstraint {
        id: id.to_string(),
        mode,
        context_kind,
        context,
        left: cx.property_list(get("left").unwrap_or("-"))?,
        right: cx.property_list(get("right").unwrap_or("-"))?,
        classes: cx.class_list(get("classes").unwrap_or("-"))?,
        element,
        value: cx.value(get("value").unwrap_or("-"))?,
        severity,
    };
    row.validate()?;
    Ok(row)
}

/// Writes a set so that `parse_rcf` reads back the same rows.
pub fn serialize_rcf(set: &ConstraintSet) -> String {
    let w = Writer {
        prefixes: &set.prefixes,
    };
    let mut out = String::from("# RCF constraint set\n");
    for (l, ns) in &set.prefixes {
        let _ = writeln!(out, "@prefix {l}: <{ns}>");
    }
    let mut rows: Vec<_> = set.rows.iter().collect();
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    for row in rows {
        out.push('\n');
        let _ = writeln!(out, "constraint {} {{", row.id);
        let mode = if row.mode == Mode::Define {
            "define"
        } else {
            "assert"
        };
        let kind = if row.context_kind == ContextKind::Class {
            "class"
        } else {
            "property"
        };
        let _ = writeln!(out, "  mode: {mode};");
        let _ = writeln!(out, "  contextKind: {kind};");
        let _ = writeln!(out, "  context: {};", w.class_ref(&row.context));
        let _ = writeln!(out, "  left: {};", w.property_list(&row.left));
        let _ = writeln!(out, "  right: {};", w.property_list(&row.right));
        let classes = if row.classes.is_empty() {
            "-".to_string()
        } else {
            row.classes
                .iter()
                .map(|c| w.class_ref(c))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let _ = writeln!(out, "  classes: {classes};");
        let _ = writeln!(out, "  element: {};", row.element.name());
        let _ = writeln!(out, "  value: {};", w.value(row.value.as_ref()));
        let _ = writeln!(out, "  severity: {}", row.severity.name());
        out.push_str("}\n");
    }
    out
}

struct Writer<'a> {
    prefixes: &'a [(String, String)],
}

impl Writer<'_> {
    fn iri(&self, iri: &str) -> String {
        let mut best: Option<(&str, &str)> = None;
        for (l, ns) in self.prefixes.iter().rev() {
            if let Some(local) = iri.strip_prefix(ns.as_str()) {
                let ok = local.chars().all(is_id_char) && !local.ends_with('.');
                if ok && best.is_none_or(|(_, b)| ns.len() > b.len()) {
                    best = Some((l, ns));
                }
            }
        }
        match best {
            Some((l, ns)) => format!("{l}:{}", &iri[ns.len()..]),
            None => format!("<{iri}>"),
        }
    }

    fn quoted(s: &str) -> String {
        let mut out = String::from("\"");
        escape_literal(s, &mut out);
        out.push('"');
        out
    }

    fn term(&self, t: &Term) -> String {
        match t {
            Term::Iri(i) => self.iri(i),
            Term::Blank(b) => format!("_:{b}"),
            Term::Literal(l) => {
                let q = Self::quoted(l.lexical());
                match l.language() {
                    Some(lang) => format!("{q}@{lang}"),
                    None if l.datatype() == RDF_LANG_STRING => q,
                    None => format!("{q}^^{}", self.iri(l.datatype())),
                }
            }
        }
    }

    fn class_ref(&self, c: &ClassRef) -> String {
        match c {
            ClassRef::Named(i) => self.iri(i),
            ClassRef::Defined(l) => format!("@{l}"),
            ClassRef::Nominals(ts) => format!(
                "{{{}}}",
                ts.iter()
                    .map(|t| self.term(t))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            ClassRef::Datatype(i) => format!("dt:{}", self.iri(i)),
            ClassRef::Top => "TOP".into(),
            ClassRef::Bottom => "BOTTOM".into(),
            ClassRef::SelfRef => "SELF".into(),
            ClassRef::IriKind => "IRI".into(),
        }
    }

    fn property_list(&self, ps: &[PropertyRef]) -> String {
        if ps.is_empty() {
            return "-".into();
        }
        ps.iter()
            .map(|p| {
                p.steps
                    .iter()
                    .map(|s| format!("{}{}", if s.inverse { "^" } else { "" }, self.iri(&s.iri)))
                    .collect::<Vec<_>>()
                    .join("/")
            })
            .collect::<Vec<_>>()
            .join(", ")
    }

    fn value(&self, v: Option<&ConstraintValue>) -> String {
        match v {
            None => "-".into(),
            Some(ConstraintValue::Int(i)) => i.to_string(),
            Some(ConstraintValue::Text(t)) => Self::quoted(t),
            Some(ConstraintValue::Term(t @ Term::Literal(l))) if l.datatype() == XSD_STRING => {
                // keep it a term rather than text on the way back in
                format!("{}^^{}", Self::quoted(t.text()), self.iri(XSD_STRING))
            }
            Some(ConstraintValue::Term(t)) => self.term(t),
            Some(ConstraintValue::Facets(fs)) => format!(
                "[{}]",
                fs.iter()
                    .map(|(k, v)| format!("{k}={}", Self::quoted(v)))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        }
    }
}

/// Default prefixes offered to RCF and ShEx writers.
pub fn standard_prefixes() -> Vec<(String, String)> {
    vec![
        ("rdf".into(), crate::rdf::vocab::RDF.into()),
        ("rdfs".into(), crate::rdf::vocab::RDFS.into()),
        ("owl".into(), crate::rdf::vocab::OWL.into()),
        ("xsd".into(), XSD.into()),
    ]
}
