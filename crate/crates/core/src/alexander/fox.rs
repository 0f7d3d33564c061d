use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use crate::fpgroup::{format_word_with, Word};

/// Element of the integral group ring of a free group: a finite sum of
/// freely reduced words with non-zero integer coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    /// Adds `c · w`; `w` must be freely reduced.
    pub fn add_term(&mut self, w: Word, c: BigInt) {
        let entry = self.terms.entry(w).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, i64)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(crate::fpgroup::free_reduce(&w), BigInt::from(c));
        }
        e
    }

    /// Image under the ring map sending generator `g` to `t^images[g]`.
    pub fn abelianize(&self, images: &[i64]) -> LaurentPoly {
        self.terms.iter().fold(LaurentPoly::zero(), |acc, (w, c)| {
            let e: i64 = w.letters().iter().map(|l| l.sign() * images[l.generator()]).sum();
            &acc + &LaurentPoly::monomial(c.clone(), e)
        })
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            out.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let word = if w.is_empty() { String::new() } else { format_word_with(w, names).replace(' ', "") };
            match (mag.is_one(), word.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&word),
                (false, true) => out.push_str(&mag.to_string()),
                (false, false) => out.push_str(&format!("{mag}{word}")),
            }
        }
        out
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.terms.keys().filter_map(Word::max_generator).max().map_or(0, |g| g + 1);
        write!(f, "{}", self.format_with(&crate::fpgroup::fresh_names(n)))
    }
}

/// Fox derivative `∂w/∂x_g`, by the rules `∂x_g = 1`, `∂x_g⁻¹ = −x_g⁻¹` and
/// `∂(uv) = ∂u + u·∂v`.
pub fn fox_derivative(w: &Word, g: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix: Vec<crate::fpgroup::Letter> = Vec::new();
    for &l in w.letters() {
        if l.generator() == g {
            if l.is_inverse() {
                let mut term = prefix.clone();
                term.push(l);
                out.add_term(crate::fpgroup::free_reduce(&Word::from_letters(term)), -BigInt::one());
            } else {
                out.add_term(crate::fpgroup::free_reduce(&Word::from_letters(prefix.clone())), BigInt::one());
            }
        }
        prefix.push(l);
    }
    out
}

/// Abelianized Fox derivative computed directly, without building the
/// group ring element.
pub fn abelianized_fox_derivative(w: &Word, g: usize, images: &[i64]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut e = 0i64;
    for &l in w.letters() {
        let step = l.sign() * images[l.generator()];
        if l.generator() == g {
            if l.is_inverse() {
                acc = &acc - &LaurentPoly::t_pow(e + step);
            } else {
                acc = &acc + &LaurentPoly::t_pow(e);
            }
        }
        e += step;
    }
    acc
}
