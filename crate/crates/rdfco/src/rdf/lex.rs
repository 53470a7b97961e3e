//! Character cursor shared by the N-Triples and Turtle readers.

use super::error::ParseError;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    pub line: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor {
            src,
            pos: 0,
            line: 1,
        }
    }

    pub fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub fn peek_at(&self, n: usize) -> Option<char> {
        self.src[self.pos..].chars().nth(n)
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            for _ in s.chars() {
                self.bump();
            }
            true
        } else {
            false
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    /// Skips whitespace and `#` comments.
    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    pub fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            message: message.into(),
        }
    }

    /// Reads `<...>` with the opening bracket already peeked.
    pub fn iri_ref(&mut self) -> Result<String, ParseError> {
        let line = self.line;
        self.bump();
        let mut out = String::new();
        loop {
            match self.bump() {
                None | Some('\n') => return Err(ParseError::Unterminated { line }),
                Some('>') => break,
                Some('\\') => out.push(self.unicode_escape()?),
                Some(c) => out.push(c),
            }
        }
        if !super::term::is_valid_iri(&out) {
            return Err(ParseError::InvalidIri { line, iri: out });
        }
        Ok(out)
    }

    fn unicode_escape(&mut self) -> Result<char, ParseError> {
        let n = match self.bump() {
            Some('u') => 4,
            Some('U') => 8,
            _ => return Err(self.err("bad escape")),
        };
        let mut v = 0u32;
        for _ in 0..n {
            let d = self
                .bump()
                .and_then(|c| c.to_digit(16))
                .ok_or_else(|| self.err("bad hex digit"))?;
            v = v * 16 + d;
        }
        char::from_u32(v).ok_or_else(|| self.err("bad code point"))
    }

    /// Reads a quoted string body; accepts either quote character.
    pub fn quoted(&mut self) -> Result<String, ParseError> {
        let line = self.line;
        let q = self.bump().ok_or_else(|| self.err("expected string"))?;
        let mut out = String::new();
        loop {
            match self.bump() {
                None | Some('\n') => return Err(ParseError::Unterminated { line }),
                Some(c) if c == q => break,
                Some('\\') => match self.peek() {
                    Some('t') => {
                        self.bump();
                        out.push('\t')
                    }
                    Some('n') => {
                        self.bump();
                        out.push('\n')
                    }
                    Some('r') => {
                        self.bump();
                        out.push('\r')
                    }
                    Some('b') => {
                        self.bump();
                        out.push('\u{8}')
                    }
                    Some('f') => {
                        self.bump();
                        out.push('\u{c}')
                    }
                    Some('"') => {
                        self.bump();
                        out.push('"')
                    }
                    Some('\'') => {
                        self.bump();
                        out.push('\'')
                    }
                    Some('\\') => {
                        self.bump();
                        out.push('\\')
                    }
                    _ => out.push(self.unicode_escape()?),
                },
                Some(c) => out.push(c),
            }
        }
        Ok(out)
    }

    pub fn lang_tag(&mut self) -> Result<String, ParseError> {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || (c == '-' && !out.is_empty()) {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() || !out.chars().next().unwrap().is_ascii_alphabetic() {
            return Err(self.err("bad language tag"));
        }
        Ok(out)
    }

    pub fn blank_label(&mut self) -> Result<String, ParseError> {
        // caller has consumed "_:"
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_alphanumeric()
                || c == '_'
                || c == '-'
                || (c == '.' && self.peek_at(1).is_some_and(is_name_char))
            {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() {
            return Err(self.err("empty blank node label"));
        }
        Ok(out)
    }
}

pub(crate) fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '-'
}
