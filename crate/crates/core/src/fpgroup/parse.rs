//! Text format for presentations.
//!
//! ```text
//! presentation := "<" [name ("," name)*] "|" [relator ("," relator)*] ">"
//! relator      := word ["=" word]
//! word         := term+ | "1"
//! term         := atom ["^" integer]
//! atom         := name | "(" word ")" | "[" word "," word "]"
//! ```
//!
//! Whitespace is insignificant. A relator `u = v` is stored as `u v⁻¹`.
//! Juxtaposed single-letter names may be written without spaces (`abab`
//! is read as `a b a b` when `abab` is not itself a declared name).

use thiserror::Error;

use super::presentation::{GroupPresentation, PresentationError};
use super::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("undeclared generator {name:?} at byte {position}")]
    UndeclaredGenerator { name: String, position: usize },
    #[error("relators given for a presentation with no generators (byte {position})")]
    EmptyGeneratorList { position: usize },
    #[error("invalid presentation: {0}")]
    Invalid(#[from] PresentationError),
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { position, .. }
            | ParseError::UndeclaredGenerator { position, .. }
            | ParseError::EmptyGeneratorList { position } => Some(*position),
            ParseError::Invalid(_) => None,
        }
    }
}

/// Parses a presentation; the result is named after the input text.
pub fn parse_presentation(text: &str) -> Result<GroupPresentation, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, names: Vec::new() };
    p.expect(b'<')?;
    p.skip_ws();
    if p.peek() != Some(b'|') {
        loop {
            let (name, _) = p.identifier()?;
            if p.names.contains(&name) {
                return Err(PresentationError::DuplicateGenerator(name).into());
            }
            p.names.push(name);
            p.skip_ws();
            if p.peek() == Some(b',') {
                p.pos += 1;
            } else {
                break;
            }
        }
    }
    p.expect(b'|')?;
    let mut relators = Vec::new();
    p.skip_ws();
    if p.peek() != Some(b'>') {
        if p.names.is_empty() && p.peek() != Some(b'1') {
            return Err(ParseError::EmptyGeneratorList { position: p.pos });
        }
        loop {
            let lhs = p.word()?;
            p.skip_ws();
            let rel = if p.peek() == Some(b'=') {
                p.pos += 1;
                let rhs = p.word()?;
                lhs.mul(&rhs.inverse())
            } else {
                lhs
            };
            relators.push(rel);
            p.skip_ws();
            if p.peek() == Some(b',') {
                p.pos += 1;
            } else {
                break;
            }
        }
    }
    p.expect(b'>')?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("end of input"));
    }
    let name = text.split_whitespace().collect::<Vec<_>>().join(" ");
    Ok(GroupPresentation::new(name, p.names, relators)?)
}

/// Parses a single word over the given generator names.
pub fn parse_word(text: &str, generator_names: &[String]) -> Result<Word, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, names: generator_names.to_vec() };
    p.skip_ws();
    if p.peek().is_none() {
        return Ok(Word::empty());
    }
    let w = p.word()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("end of word"));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: Vec<String>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, expected: &str) -> ParseError {
        ParseError::Syntax { position: self.pos, expected: expected.to_string() }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("'{}'", c as char)))
        }
    }

    fn identifier(&mut self) -> Result<(String, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {}
            _ => return Err(self.syntax("generator name")),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").to_string();
        Ok((s, start))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        self.skip_ws();
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.syntax("integer exponent"));
        }
        let text: String = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        text.parse().map_err(|_| ParseError::Syntax {
            position: start,
            expected: "exponent fitting in 64 bits".into(),
        })
    }

    fn starts_term(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_' || c == b'(' || c == b'[')
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        self.skip_ws();
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Word::empty());
        }
        if !self.starts_term() {
            return Err(self.syntax("word"));
        }
        let mut w = Word::empty();
        while self.starts_term() {
            w = w.mul(&self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(b',')?;
                let v = self.word()?;
                self.expect(b']')?;
                Ok(Word::commutator(&u, &v))
            }
            _ => {
                let (name, at) = self.identifier()?;
                self.resolve(&name, at)
            }
        }
    }

    fn resolve(&self, name: &str, at: usize) -> Result<Word, ParseError> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Ok(Word::generator(i));
        }
        // Fall back to a run of single-character names.
        let split: Option<Vec<Letter>> = name
            .chars()
            .map(|c| {
                self.names
                    .iter()
                    .position(|n| n.len() == 1 && n.starts_with(c))
                    .map(Letter::gen)
            })
            .collect();
        match split {
            Some(letters) if name.len() > 1 => Ok(Word::from_letters(letters)),
            _ => Err(ParseError::UndeclaredGenerator { name: name.to_string(), position: at }),
        }
    }
}
