use std::cmp::Ordering;
use std::fmt;

/// A generator or its inverse.
///
/// Stored as a signed, one-based generator index so that a letter and its
/// inverse differ only in sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        let v = generator as i32 + 1;
        Letter(if inverse { -v } else { v })
    }

    pub fn gen(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn inv_gen(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    #[inline]
    pub fn generator(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    /// +1 or -1.
    #[inline]
    pub fn sign(self) -> i64 {
        self.0.signum() as i64
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// Column index used by coset tables: `2g` for `g`, `2g + 1` for `g⁻¹`.
    #[inline]
    pub fn column(self) -> usize {
        2 * self.generator() + self.is_inverse() as usize
    }

    #[inline]
    pub fn from_column(col: usize) -> Self {
        Letter::new(col / 2, col % 2 == 1)
    }
}

// a < a⁻¹ < b < b⁻¹ < ...
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.column().cmp(&other.column())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "g{}⁻¹", self.generator())
        } else {
            write!(f, "g{}", self.generator())
        }
    }
}

/// A word in the free group, not necessarily reduced.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Builds a word from `(generator, exponent)` syllables.
    pub fn from_syllables(syllables: &[(usize, i64)]) -> Self {
        let mut letters = Vec::new();
        for &(g, e) in syllables {
            let l = Letter::new(g, e < 0);
            letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        Word(letters)
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::gen(g)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `u v u⁻¹ v⁻¹`, freely reduced.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.mul(v).mul(&u.inverse()).mul(&v.inverse())
    }

    /// `u v u⁻¹`, freely reduced.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.mul(self).mul(&u.inverse())
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator() == g)
            .map(|l| l.sign())
            .sum()
    }

    pub fn occurrences(&self, g: usize) -> usize {
        self.0.iter().filter(|l| l.generator() == g).count()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator()).max()
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && match (self.0.first(), self.0.last()) {
                (Some(&a), Some(&b)) if self.0.len() > 1 => a != b.inverse(),
                _ => true,
            }
    }

    /// Cyclic rotation starting at `start`.
    pub fn rotated(&self, start: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[start..]);
        v.extend_from_slice(&self.0[..start]);
        Word(v)
    }

    /// Relabels generators through `map`.
    pub fn map_generators(&self, map: impl Fn(usize) -> usize) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Letter::new(map(l.generator()), l.is_inverse()))
                .collect(),
        )
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len());
    for &l in w.letters() {
        push_reduced(&mut out, l);
    }
    Word(out)
}

/// Free reduction followed by stripping cancelling first/last letters.
/// The result is a conjugate of the input.
pub fn cyclically_reduce(w: &Word) -> Word {
    let reduced = free_reduce(w).0;
    let (mut lo, mut hi) = (0, reduced.len());
    while hi - lo >= 2 && reduced[lo] == reduced[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    Word(reduced[lo..hi].to_vec())
}
