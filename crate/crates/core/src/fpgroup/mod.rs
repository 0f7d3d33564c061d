//! Words, presentations, the text format and Tietze simplification.

mod parse;
mod presentation;
mod tietze;
mod word;

pub use parse::{parse_presentation, parse_word, ParseError};
pub use presentation::{fresh_names, format_word_with, GroupPresentation, PresentationError, PresentationStats};
pub use tietze::{canonical_cyclic_form, tietze_simplify, InvalidCaps, SimplificationCaps, Simplified};
pub use word::{cyclically_reduce, free_reduce, Letter, Word};
