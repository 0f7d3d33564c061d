use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::word::{cyclically_reduce, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("generator name {0:?} declared twice")]
    DuplicateGenerator(String),
    #[error("generator name {0:?} is not a valid identifier")]
    InvalidGeneratorName(String),
    #[error("relator {relator} uses generator index {index} but only {n_generators} are declared")]
    GeneratorOutOfRange {
        relator: usize,
        index: usize,
        n_generators: usize,
    },
}

/// A finitely presented group `⟨ generators | relators ⟩`.
///
/// Relators are kept freely and cyclically reduced; empty relators are
/// dropped on construction.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    name: String,
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(
        name: impl Into<String>,
        generator_names: Vec<String>,
        relators: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        let mut seen = HashSet::new();
        for n in &generator_names {
            if !is_identifier(n) {
                return Err(PresentationError::InvalidGeneratorName(n.clone()));
            }
            if !seen.insert(n.as_str()) {
                return Err(PresentationError::DuplicateGenerator(n.clone()));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator() {
                if g >= generator_names.len() {
                    return Err(PresentationError::GeneratorOutOfRange {
                        relator: i,
                        index: g,
                        n_generators: generator_names.len(),
                    });
                }
            }
        }
        Ok(Self::new_unchecked(name.into(), generator_names, relators))
    }

    /// Presentation on generators `x0, x1, …`.
    pub fn with_fresh_names(name: impl Into<String>, n_generators: usize, relators: Vec<Word>) -> Self {
        Self::new(name, fresh_names(n_generators), relators)
            .expect("fresh names are distinct and relators are in range")
    }

    pub(crate) fn new_unchecked(name: String, generator_names: Vec<String>, relators: Vec<Word>) -> Self {
        let relators = relators
            .iter()
            .map(cyclically_reduce)
            .filter(|r| !r.is_empty())
            .collect();
        GroupPresentation {
            name,
            generator_names,
            relators,
        }
    }

    pub fn free(n: usize) -> Self {
        Self::with_fresh_names(format!("F{n}"), n, vec![])
    }

    pub fn trivial() -> Self {
        Self::with_fresh_names("trivial", 0, vec![])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn n_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn n_relators(&self) -> usize {
        self.relators.len()
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    /// Adds relators, giving a presentation of a quotient group.
    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Self {
        let mut relators = self.relators.clone();
        relators.extend(extra);
        Self::new_unchecked(self.name.clone(), self.generator_names.clone(), relators)
    }

    /// Formats a word with this presentation's generator names.
    pub fn format_word(&self, w: &Word) -> String {
        format_word_with(w, &self.generator_names)
    }

    /// `(n_generators, n_relators, total_length)`.
    pub fn stats(&self) -> PresentationStats {
        PresentationStats {
            n_generators: self.n_generators(),
            n_relators: self.n_relators(),
            total_length: self.total_length(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationStats {
    pub n_generators: usize,
    pub n_relators: usize,
    pub total_length: usize,
}

pub fn fresh_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Syllable form: `a^2 b^-1 a`.
pub fn format_word_with(w: &Word, names: &[String]) -> String {
    let letters = w.letters();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let l: Letter = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let e = (j - i) as i64 * l.sign();
        let name = &names[l.generator()];
        parts.push(if e == 1 { name.clone() } else { format!("{name}^{e}") });
        i = j;
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generator_names.is_empty() {
            write!(f, "< |")?;
        } else {
            write!(f, "< {} |", self.generator_names.join(", "))?;
        }
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        if rels.is_empty() {
            write!(f, " >")
        } else {
            write!(f, " {} >", rels.join(", "))
        }
    }
}

impl fmt::Debug for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self)
    }
}

impl Serialize for GroupPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            name: &'a str,
            presentation: String,
        }
        Repr {
            name: &self.name,
            presentation: self.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupPresentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            name: String,
            presentation: String,
        }
        let r = Repr::deserialize(d)?;
        super::parse::parse_presentation(&r.presentation)
            .map(|p| p.with_name(r.name))
            .map_err(serde::de::Error::custom)
    }
}
