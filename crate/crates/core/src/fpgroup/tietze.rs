use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::presentation::GroupPresentation;
use super::word::{cyclically_reduce, push_reduced, Letter, Word};

/// Bounds on presentation simplification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplificationCaps {
    pub max_generators: usize,
    pub max_total_relator_length: usize,
    pub max_passes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("simplification caps must be strictly positive")]
pub struct InvalidCaps;

impl SimplificationCaps {
    pub fn new(max_generators: usize, max_total_relator_length: usize, max_passes: usize) -> Result<Self, InvalidCaps> {
        if max_generators == 0 || max_total_relator_length == 0 || max_passes == 0 {
            return Err(InvalidCaps);
        }
        Ok(SimplificationCaps { max_generators, max_total_relator_length, max_passes })
    }
}

impl Default for SimplificationCaps {
    fn default() -> Self {
        SimplificationCaps { max_generators: 64, max_total_relator_length: 65536, max_passes: 32 }
    }
}

/// Result of [`tietze_simplify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: GroupPresentation,
    /// Set when a cap stopped simplification before it converged.
    pub partial: bool,
}

/// Relators longer than this are not used as the short side of a
/// common-subword substitution.
const SUBWORD_MAX_SHORT_LEN: usize = 64;
const SUBWORD_MAX_RELATORS: usize = 400;

/// Simplifies a presentation by Tietze transformations.
///
/// Each pass runs, in order: deletion of trivial relators, deletion of
/// relators that repeat another up to cyclic rotation and inversion,
/// elimination of generators that occur exactly once in some relator, and
/// replacement of common subwords (length ≥ 3) whenever that shortens a
/// relator. Passes repeat until nothing changes or `max_passes` is reached.
/// Surviving generators keep their names.
pub fn tietze_simplify(p: &GroupPresentation, caps: &SimplificationCaps) -> Simplified {
    let mut state = State {
        alive: vec![true; p.n_generators()],
        relators: p.relators().to_vec(),
        capped: p.total_length() > caps.max_total_relator_length,
    };
    let mut converged = false;
    for _ in 0..caps.max_passes {
        let mut changed = state.delete_trivial();
        changed |= state.delete_duplicates();
        changed |= state.eliminate_generators(caps.max_total_relator_length);
        changed |= state.substitute_common_subwords();
        if !changed {
            converged = true;
            break;
        }
    }

    let mut index = vec![usize::MAX; p.n_generators()];
    let mut names = Vec::new();
    for (g, &a) in state.alive.iter().enumerate() {
        if a {
            index[g] = names.len();
            names.push(p.generator_names()[g].clone());
        }
    }
    let relators = state.relators.iter().map(|r| r.map_generators(|g| index[g])).collect();
    let presentation = GroupPresentation::new_unchecked(p.name().to_string(), names, relators);
    let partial = !converged || state.capped || presentation.n_generators() > caps.max_generators;
    Simplified { presentation, partial }
}

struct State {
    alive: Vec<bool>,
    relators: Vec<Word>,
    capped: bool,
}

impl State {
    fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    fn delete_trivial(&mut self) -> bool {
        let before = self.relators.len();
        for r in self.relators.iter_mut() {
            *r = cyclically_reduce(r);
        }
        self.relators.retain(|r| !r.is_empty());
        self.relators.len() != before
    }

    fn delete_duplicates(&mut self) -> bool {
        let mut seen = HashSet::new();
        let before = self.relators.len();
        self.relators.retain(|r| seen.insert(canonical_cyclic_form(r)));
        self.relators.len() != before
    }

    fn eliminate_generators(&mut self, max_len: usize) -> bool {
        let mut changed = false;
        while let Some((ri, pos)) = self.best_elimination(max_len) {
            self.eliminate(ri, pos);
            changed = true;
        }
        changed
    }

    /// Picks the elimination with the smallest length growth; ties go to the
    /// shorter relator, then the lower relator index, then the lower generator.
    fn best_elimination(&mut self, max_len: usize) -> Option<(usize, usize)> {
        let n = self.alive.len();
        let mut totals = vec![0usize; n];
        let mut per_relator = Vec::with_capacity(self.relators.len());
        for r in &self.relators {
            let mut counts = vec![0usize; n];
            for l in r.letters() {
                counts[l.generator()] += 1;
            }
            for g in 0..n {
                totals[g] += counts[g];
            }
            per_relator.push(counts);
        }
        let total = self.total_length() as i64;
        let mut best: Option<((i64, usize, usize, usize), usize)> = None;
        let mut skipped = false;
        for (ri, r) in self.relators.iter().enumerate() {
            let len = r.len() as i64;
            for (pos, l) in r.letters().iter().enumerate() {
                let g = l.generator();
                if per_relator[ri][g] != 1 {
                    continue;
                }
                let others = (totals[g] - 1) as i64;
                let delta = others * (len - 2) - len;
                if total + delta > max_len as i64 {
                    skipped = true;
                    continue;
                }
                let key = (delta, r.len(), ri, g);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, pos));
                }
            }
        }
        if best.is_none() && skipped {
            self.capped = true;
        }
        best.map(|((_, _, ri, _), pos)| (ri, pos))
    }

    fn eliminate(&mut self, ri: usize, pos: usize) {
        let r = self.relators.remove(ri);
        let rotated = r.rotated(pos);
        let letter = rotated.letters()[0];
        let rest = Word::from_letters(rotated.letters()[1..].to_vec());
        // g·rest = 1 gives g = rest⁻¹; g⁻¹·rest = 1 gives g = rest.
        let image = if letter.is_inverse() { rest } else { rest.inverse() };
        let image_inv = image.inverse();
        let g = letter.generator();
        for w in self.relators.iter_mut() {
            if w.occurrences(g) == 0 {
                continue;
            }
            let mut out = Vec::with_capacity(w.len());
            for &l in w.letters() {
                if l.generator() == g {
                    let sub = if l.is_inverse() { &image_inv } else { &image };
                    for &m in sub.letters() {
                        push_reduced(&mut out, m);
                    }
                } else {
                    push_reduced(&mut out, l);
                }
            }
            *w = cyclically_reduce(&Word::from_letters(out));
        }
        self.alive[g] = false;
    }

    fn substitute_common_subwords(&mut self) -> bool {
        if self.relators.len() > SUBWORD_MAX_RELATORS {
            return false;
        }
        let mut changed = false;
        for i in 0..self.relators.len() {
            for j in 0..self.relators.len() {
                if i == j {
                    continue;
                }
                let (short, long) = (&self.relators[i], &self.relators[j]);
                if short.len() < 3 || short.len() > SUBWORD_MAX_SHORT_LEN || short.len() > long.len() {
                    continue;
                }
                if let Some(replacement) = shorten_by_common_subword(short, long) {
                    self.relators[j] = replacement;
                    changed = true;
                }
            }
        }
        changed
    }
}

/// If `short = u v` (cyclically) and `long` (or its inverse) contains `u`
/// cyclically with `|u| ≥ 3` and `2|u| > |short|`, replaces `u` in `long`
/// by `v⁻¹`, which strictly shortens it.
fn shorten_by_common_subword(short: &Word, long: &Word) -> Option<Word> {
    let s = short.letters();
    let ls = s.len();
    let mut best: Option<(usize, usize, usize, bool)> = None; // (m, a, b, inverted)
    for inverted in [false, true] {
        let target = if inverted { long.inverse() } else { long.clone() };
        let t = target.letters();
        let lt = t.len();
        for a in 0..ls {
            for b in 0..lt {
                let mut m = 0;
                while m < ls && m < lt && s[(a + m) % ls] == t[(b + m) % lt] {
                    m += 1;
                }
                if best.is_none_or(|(bm, ..)| m > bm) {
                    best = Some((m, a, b, inverted));
                }
            }
        }
    }
    let (m, a, b, inverted) = best?;
    if m < 3 || 2 * m <= ls {
        return None;
    }
    let target = if inverted { long.inverse() } else { long.clone() };
    let t = target.rotated(b);
    let sr = short.rotated(a);
    let v = Word::from_letters(sr.letters()[m..].to_vec());
    let rest = Word::from_letters(t.letters()[m..].to_vec());
    Some(cyclically_reduce(&v.inverse().mul(&rest)))
}

/// Lexicographically least rotation of the word or its inverse.
pub fn canonical_cyclic_form(w: &Word) -> Vec<Letter> {
    let inv = w.inverse();
    let mut best: Option<Vec<Letter>> = None;
    for cand in [w, &inv] {
        for k in 0..cand.len().max(1) {
            let r = if cand.is_empty() { Vec::new() } else { cand.rotated(k).into_letters() };
            if best.as_ref().is_none_or(|b| r < *b) {
                best = Some(r);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::parse::parse_presentation;

    fn simplify(src: &str) -> Simplified {
        tietze_simplify(&parse_presentation(src).unwrap(), &SimplificationCaps::default())
    }

    #[test]
    fn single_relator_generator_elimination() {
        let s = simplify("< a, b | b >");
        assert_eq!(s.presentation.to_string(), "< a | >");
        assert!(!s.partial);
    }

    #[test]
    fn cascade() {
        let s = simplify("< a, b | a b a^-1 b^-1, b >");
        assert_eq!(s.presentation.to_string(), "< a | >");
    }

    #[test]
    fn duplicates_up_to_rotation_and_inversion() {
        let s = simplify("< a, b | a^2 b^2 a b, b a^2 b^2 a, b^-1 a^-1 b^-2 a^-2, a^3 >");
        assert_eq!(s.presentation.n_relators(), 2);
    }

    #[test]
    fn common_subword_shortens() {
        // b = a^-3 from the first relator; the second becomes a^-3 a^-1 ... shorter.
        let short = Word::from_syllables(&[(0, 3), (1, 1)]);
        let long = Word::from_syllables(&[(0, 3), (1, -1), (0, 2), (1, -1)]);
        let r = shorten_by_common_subword(&short, &long).unwrap();
        assert!(r.len() < long.len());
    }

    #[test]
    fn length_cap_is_respected() {
        let p = parse_presentation("< a, b, c | a b a b a b c, c^5 a, (a b)^7 c^2 >").unwrap();
        assert_eq!(p.total_length(), 29);
        let caps = SimplificationCaps::new(64, 30, 32).unwrap();
        let s = tietze_simplify(&p, &caps);
        assert!(s.presentation.total_length() <= 30);
        let s2 = tietze_simplify(&p, &caps);
        assert_eq!(s, s2);
    }

    #[test]
    fn generator_cap_flags_partial() {
        let caps = SimplificationCaps::new(1, 100, 4).unwrap();
        let s = tietze_simplify(&GroupPresentation::free(3), &caps);
        assert!(s.partial);
        assert_eq!(s.presentation.n_generators(), 3);
    }

    #[test]
    fn caps_must_be_positive() {
        assert!(SimplificationCaps::new(0, 1, 1).is_err());
    }
}
