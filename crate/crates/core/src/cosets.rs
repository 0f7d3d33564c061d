//! Coset tables: Todd–Coxeter enumeration and the direct construction of the
//! commutator-subgroup table from a finite abelianization.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::abelian_coordinates;
use crate::fpgroup::{GroupPresentation, Letter, Word};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("coset enumeration did not close within {cosets} cosets / {deductions} deductions")]
    CapExceeded { cosets: usize, deductions: usize },
    #[error("abelianization has free rank {0}, so the commutator subgroup has infinite index")]
    InfiniteIndex(usize),
    #[error("abelianization is too large to tabulate")]
    TooLarge,
    #[error("generator images do not form a valid action: {0}")]
    InvalidAction(String),
}

/// Limits for Todd–Coxeter enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationCaps {
    /// Total number of cosets that may be defined.
    pub max_cosets: usize,
    /// Total number of deductions that may be processed.
    pub max_deductions: usize,
}

impl EnumerationCaps {
    pub fn new(max_cosets: usize, max_deductions: usize) -> Option<Self> {
        (max_cosets > 0 && max_deductions > 0).then_some(EnumerationCaps { max_cosets, max_deductions })
    }
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps { max_cosets: 20_000, max_deductions: 2_000_000 }
    }
}

/// Right action of the generators and their inverses on the cosets of a
/// subgroup. Coset 0 is the subgroup itself.
#[derive(Clone, PartialEq, Eq)]
pub struct CosetTable {
    n_generators: usize,
    n_cosets: usize,
    /// `table[c * 2n + letter.column()]`
    table: Vec<usize>,
    complete: bool,
}

impl CosetTable {
    /// Builds a complete table from one permutation of `0..n` per generator
    /// (`perms[g][c]` is the image of coset `c` under `g`). The action is
    /// restricted to the orbit of 0 and renumbered breadth-first, so the
    /// result is the table of the stabilizer of 0.
    pub fn from_permutations(n_generators: usize, perms: &[Vec<usize>]) -> Result<Self, CosetError> {
        if perms.len() != n_generators {
            return Err(CosetError::InvalidAction("one permutation per generator required".into()));
        }
        let degree = perms.first().map_or(1, Vec::len);
        let mut table = vec![NONE; degree * 2 * n_generators];
        for (g, p) in perms.iter().enumerate() {
            if p.len() != degree {
                return Err(CosetError::InvalidAction("permutations of different degrees".into()));
            }
            for (c, &d) in p.iter().enumerate() {
                if d >= degree || table[d * 2 * n_generators + 2 * g + 1] != NONE {
                    return Err(CosetError::InvalidAction(format!("generator {g} is not a permutation")));
                }
                table[c * 2 * n_generators + 2 * g] = d;
                table[d * 2 * n_generators + 2 * g + 1] = c;
            }
        }
        let raw = CosetTable { n_generators, n_cosets: degree, table, complete: true };
        Ok(raw.standardized())
    }

    pub fn n_cosets(&self) -> usize {
        self.n_cosets
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Index of the subgroup, i.e. the number of cosets of a complete table.
    pub fn index(&self) -> Option<usize> {
        self.complete.then_some(self.n_cosets)
    }

    pub fn act(&self, coset: usize, letter: Letter) -> Option<usize> {
        let v = self.table[coset * 2 * self.n_generators + letter.column()];
        (v != NONE).then_some(v)
    }

    pub fn trace(&self, coset: usize, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(coset, |c, &l| self.act(c, l))
    }

    /// Does the word lie in the subgroup (fix coset 0)?
    pub fn contains(&self, w: &Word) -> Option<bool> {
        self.trace(0, w).map(|c| c == 0)
    }

    /// The permutation of cosets induced by `letter`.
    pub fn permutation(&self, letter: Letter) -> Vec<usize> {
        (0..self.n_cosets)
            .map(|c| self.act(c, letter).unwrap_or(NONE))
            .collect()
    }

    /// Renumbers cosets in breadth-first order from coset 0, scanning
    /// `g0, g0⁻¹, g1, g1⁻¹, …`. Unreachable cosets are dropped.
    pub fn standardized(&self) -> CosetTable {
        let ncols = 2 * self.n_generators;
        let mut number = vec![NONE; self.n_cosets];
        let mut order = Vec::with_capacity(self.n_cosets);
        if self.n_cosets > 0 {
            number[0] = 0;
            order.push(0);
        }
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for col in 0..ncols {
                let d = self.table[c * ncols + col];
                if d != NONE && number[d] == NONE {
                    number[d] = order.len();
                    order.push(d);
                }
            }
        }
        let mut table = vec![NONE; order.len() * ncols];
        for (new, &old) in order.iter().enumerate() {
            for col in 0..ncols {
                let d = self.table[old * ncols + col];
                table[new * ncols + col] = if d == NONE { NONE } else { number[d] };
            }
        }
        CosetTable { n_generators: self.n_generators, n_cosets: order.len(), table, complete: self.complete }
    }

    /// Every `(g, +1)` column is a permutation inverse to the `(g, −1)` column.
    pub fn has_inverse_columns(&self) -> bool {
        (0..self.n_cosets).all(|c| {
            (0..self.n_generators).all(|g| match self.act(c, Letter::gen(g)) {
                Some(d) => self.act(d, Letter::inv_gen(g)) == Some(c),
                None => false,
            })
        })
    }

    /// Every coset is reachable from coset 0.
    pub fn is_transitive(&self) -> bool {
        self.standardized().n_cosets == self.n_cosets
    }

    /// Every relator of `p` fixes every coset.
    pub fn satisfies_relators(&self, p: &GroupPresentation) -> bool {
        (0..self.n_cosets).all(|c| p.relators().iter().all(|r| self.trace(c, r) == Some(c)))
    }
}

impl std::fmt::Debug for CosetTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CosetTable({} cosets, complete={})", self.n_cosets, self.complete)?;
        let ncols = 2 * self.n_generators;
        for c in 0..self.n_cosets.min(50) {
            let row: Vec<String> = (0..ncols)
                .map(|col| match self.table[c * ncols + col] {
                    NONE => "-".into(),
                    d => d.to_string(),
                })
                .collect();
            writeln!(f, "{c:>5}: {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Felsch-style coset enumeration of the subgroup generated by
/// `subgroup_gens`. On success the table is complete and standardized.
pub fn todd_coxeter(
    p: &GroupPresentation,
    subgroup_gens: &[Word],
    caps: &EnumerationCaps,
) -> Result<CosetTable, CosetError> {
    let mut e = Enumerator::new(p, caps);
    e.run(subgroup_gens)?;
    Ok(e.into_table())
}

/// Order of the group if enumeration over the trivial subgroup closes.
pub fn group_order(p: &GroupPresentation, caps: &EnumerationCaps) -> Result<usize, CosetError> {
    todd_coxeter(p, &[], caps).map(|t| t.n_cosets())
}

struct Enumerator<'a> {
    ncols: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    n_alive: usize,
    deductions: Vec<(usize, usize)>,
    queue: Vec<usize>,
    /// For each column `x`, the cyclic conjugates of relators and their
    /// inverses that begin with `x`.
    conjugates: Vec<Vec<Vec<usize>>>,
    relators: Vec<Vec<usize>>,
    caps: &'a EnumerationCaps,
    processed: usize,
}

impl<'a> Enumerator<'a> {
    fn new(p: &GroupPresentation, caps: &'a EnumerationCaps) -> Self {
        let ncols = 2 * p.n_generators();
        let mut conjugates = vec![Vec::new(); ncols];
        let relators: Vec<Vec<usize>> = p
            .relators()
            .iter()
            .map(|r| r.letters().iter().map(|l| l.column()).collect())
            .collect();
        for r in p.relators() {
            for w in [r.clone(), r.inverse()] {
                for k in 0..w.len() {
                    let cols: Vec<usize> = w.rotated(k).letters().iter().map(|l| l.column()).collect();
                    if !conjugates[cols[0]].contains(&cols) {
                        conjugates[cols[0]].push(cols);
                    }
                }
            }
        }
        let mut e = Enumerator {
            ncols,
            table: Vec::new(),
            parent: Vec::new(),
            n_alive: 0,
            deductions: Vec::new(),
            queue: Vec::new(),
            conjugates,
            relators,
            caps,
            processed: 0,
        };
        e.new_coset().expect("at least one coset allowed");
        e
    }

    fn cap_error(&self) -> CosetError {
        CosetError::CapExceeded { cosets: self.caps.max_cosets, deductions: self.caps.max_deductions }
    }

    fn new_coset(&mut self) -> Result<usize, CosetError> {
        let c = self.parent.len();
        if c >= self.caps.max_cosets {
            return Err(self.cap_error());
        }
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.n_alive += 1;
        Ok(c)
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c * self.ncols + x] = d;
    }

    #[inline]
    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, CosetError> {
        let d = self.new_coset()?;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        self.deductions.push((c, x));
        Ok(d)
    }

    fn run(&mut self, subgroup_gens: &[Word]) -> Result<(), CosetError> {
        for w in subgroup_gens {
            let cols: Vec<usize> = w.letters().iter().map(|l| l.column()).collect();
            self.scan_and_fill(0, &cols)?;
            self.process_deductions()?;
        }
        loop {
            let mut alpha = 0;
            while alpha < self.parent.len() {
                for x in 0..self.ncols {
                    if !self.alive(alpha) {
                        break;
                    }
                    if self.get(alpha, x) == NONE {
                        self.define(alpha, x)?;
                        self.process_deductions()?;
                    }
                }
                alpha += 1;
            }
            if !self.verify_closed()? {
                break;
            }
        }
        Ok(())
    }

    /// Scans every relator at every live coset; returns whether anything
    /// changed (in which case enumeration continues).
    fn verify_closed(&mut self) -> Result<bool, CosetError> {
        let before = self.n_alive;
        for c in 0..self.parent.len() {
            if !self.alive(c) {
                continue;
            }
            for i in 0..self.relators.len() {
                let r = std::mem::take(&mut self.relators[i]);
                self.scan(c, &r);
                self.relators[i] = r;
                if !self.alive(c) {
                    break;
                }
            }
        }
        let changed = before != self.n_alive || !self.deductions.is_empty();
        self.process_deductions()?;
        Ok(changed)
    }

    fn process_deductions(&mut self) -> Result<(), CosetError> {
        while let Some((c, x)) = self.deductions.pop() {
            self.processed += 1;
            if self.processed > self.caps.max_deductions {
                return Err(self.cap_error());
            }
            if !self.alive(c) {
                continue;
            }
            let forward = std::mem::take(&mut self.conjugates[x]);
            for w in &forward {
                if !self.alive(c) {
                    break;
                }
                self.scan(c, w);
            }
            self.conjugates[x] = forward;
            if !self.alive(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE || !self.alive(d) {
                continue;
            }
            let backward = std::mem::take(&mut self.conjugates[x ^ 1]);
            for w in &backward {
                if !self.alive(d) {
                    break;
                }
                self.scan(d, w);
            }
            self.conjugates[x ^ 1] = backward;
        }
        Ok(())
    }

    fn scan(&mut self, alpha: usize, w: &[usize]) {
        let n = w.len();
        let mut f = alpha;
        let mut i = 0;
        while i < n {
            let next = self.get(f, w[i]);
            if next == NONE {
                break;
            }
            f = next;
            i += 1;
        }
        if i == n {
            if f != alpha {
                self.coincidence(f, alpha);
            }
            return;
        }
        let mut b = alpha;
        let mut j = n;
        while j > i {
            let prev = self.get(b, w[j - 1] ^ 1);
            if prev == NONE {
                break;
            }
            b = prev;
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
        } else if j == i + 1 {
            self.set(f, w[i], b);
            self.set(b, w[i] ^ 1, f);
            self.deductions.push((f, w[i]));
        }
    }

    fn scan_and_fill(&mut self, alpha: usize, w: &[usize]) -> Result<(), CosetError> {
        let n = w.len();
        let mut f = alpha;
        let mut i = 0;
        let mut b = alpha;
        let mut j = n;
        loop {
            while i < j {
                let next = self.get(f, w[i]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let prev = self.get(b, w[j - 1] ^ 1);
                if prev == NONE {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                self.deductions.push((f, w[i]));
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut k = c;
        while self.parent[k] != r {
            let next = self.parent[k];
            self.parent[k] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (pa, pb) = (self.rep(a), self.rep(b));
        if pa == pb {
            return;
        }
        let (lo, hi) = if pa < pb { (pa, pb) } else { (pb, pa) };
        self.parent[hi] = lo;
        self.n_alive -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut head = 0;
        while head < self.queue.len() {
            let gamma = self.queue[head];
            head += 1;
            for x in 0..self.ncols {
                let delta = self.get(gamma, x);
                if delta == NONE {
                    continue;
                }
                if self.get(delta, x ^ 1) == gamma {
                    self.set(delta, x ^ 1, NONE);
                }
                let mu = self.rep(gamma);
                let nu = self.rep(delta);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                } else {
                    let nu_xi = self.get(nu, x ^ 1);
                    if nu_xi != NONE {
                        self.merge(mu, nu_xi);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                        self.deductions.push((mu, x));
                    }
                }
            }
        }
    }

    fn into_table(mut self) -> CosetTable {
        let total = self.parent.len();
        let mut number = vec![NONE; total];
        let mut next = 0;
        for (c, slot) in number.iter_mut().enumerate() {
            if self.parent[c] == c {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next * self.ncols);
        for c in 0..total {
            if !self.alive(c) {
                continue;
            }
            for x in 0..self.ncols {
                let d = self.get(c, x);
                let d = if d == NONE { NONE } else { number[self.rep(d)] };
                table.push(d);
            }
        }
        let complete = table.iter().all(|&d| d != NONE);
        CosetTable { n_generators: self.ncols / 2, n_cosets: next, table, complete }.standardized()
    }
}

/// Coset table of the commutator subgroup, built directly from the finite
/// abelianization `A = G/G'`.
///
/// Cosets are the elements of `A` in mixed-radix order over the torsion
/// coordinates (first coordinate least significant); generators act by
/// translation. Requires free rank 0.
pub fn commutator_coset_table(p: &GroupPresentation) -> Result<CosetTable, CosetError> {
    let coords = abelian_coordinates(p);
    if coords.invariants.rank > 0 {
        return Err(CosetError::InfiniteIndex(coords.invariants.rank));
    }
    let moduli = coords.torsion_moduli().ok_or(CosetError::TooLarge)?;
    let order = moduli
        .iter()
        .try_fold(1usize, |acc, &m| acc.checked_mul(m))
        .ok_or(CosetError::TooLarge)?;
    let n = p.n_generators();
    let shifts: Vec<Vec<usize>> = coords
        .images
        .iter()
        .map(|img| img.iter().map(|x| x.to_usize().expect("reduced coordinate")).collect())
        .collect();
    let encode = |digits: &[usize]| digits.iter().zip(&moduli).rev().fold(0, |acc, (d, m)| acc * m + d);
    let mut table = vec![NONE; order * 2 * n];
    let mut digits = vec![0usize; moduli.len()];
    for c in 0..order {
        let mut rem = c;
        for (k, &m) in moduli.iter().enumerate() {
            digits[k] = rem % m;
            rem /= m;
        }
        for g in 0..n {
            let fwd: Vec<usize> = digits.iter().zip(&shifts[g]).zip(&moduli).map(|((d, s), m)| (d + s) % m).collect();
            let bwd: Vec<usize> = digits
                .iter()
                .zip(&shifts[g])
                .zip(&moduli)
                .map(|((d, s), m)| (d + m - s) % m)
                .collect();
            table[c * 2 * n + 2 * g] = encode(&fwd);
            table[c * 2 * n + 2 * g + 1] = encode(&bwd);
        }
    }
    Ok(CosetTable { n_generators: n, n_cosets: order, table, complete: true })
}

/// Searches for a homomorphism onto a non-trivial permutation group of degree
/// at most `max_degree`, which certifies that the group is non-trivial.
///
/// The first generator ranges over one representative per cycle type; the
/// others over all permutations. Degrees whose search space exceeds `budget`
/// candidate assignments are skipped.
pub fn nontrivial_permutation_image(
    p: &GroupPresentation,
    max_degree: usize,
    budget: usize,
) -> Option<Vec<Vec<usize>>> {
    let n = p.n_generators();
    if n == 0 {
        return None;
    }
    for degree in 2..=max_degree {
        let all = permutations(degree);
        let reps = cycle_type_representatives(degree);
        let space = (n - 1) as u32;
        let size = all.len().checked_pow(space).and_then(|s| s.checked_mul(reps.len()));
        if size.is_none_or(|s| s > budget) {
            continue;
        }
        let mut choice = vec![0usize; n];
        'search: loop {
            let images: Vec<&Vec<usize>> = (0..n)
                .map(|g| if g == 0 { &reps[choice[0]] } else { &all[choice[g]] })
                .collect();
            let nontrivial = images.iter().any(|perm| perm.iter().enumerate().any(|(i, &j)| i != j));
            if nontrivial && p.relators().iter().all(|r| acts_trivially(r, &images)) {
                return Some(images.into_iter().cloned().collect());
            }
            let mut g = n;
            loop {
                if g == 0 {
                    break 'search;
                }
                g -= 1;
                choice[g] += 1;
                let limit = if g == 0 { reps.len() } else { all.len() };
                if choice[g] < limit {
                    break;
                }
                choice[g] = 0;
            }
        }
    }
    None
}

fn acts_trivially(w: &Word, images: &[&Vec<usize>]) -> bool {
    let degree = images[0].len();
    (0..degree).all(|start| {
        let mut x = start;
        for l in w.letters() {
            let perm = images[l.generator()];
            x = if l.is_inverse() {
                perm.iter().position(|&y| y == x).expect("permutation")
            } else {
                perm[x]
            };
        }
        x == start
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permutations(n, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permutations(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
    heap_permutations(k - 1, cur, out);
}

/// One permutation per partition of `n`, as consecutive cycles.
fn cycle_type_representatives(n: usize) -> Vec<Vec<usize>> {
    fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            partitions(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|shape| {
            let mut perm: Vec<usize> = (0..n).collect();
            let mut start = 0;
            for len in shape {
                for k in 0..len {
                    perm[start + k] = start + (k + 1) % len;
                }
                start += len;
            }
            perm
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::parse_presentation;

    fn tc(src: &str, sub: &[Word]) -> CosetTable {
        let p = parse_presentation(src).unwrap();
        let t = todd_coxeter(&p, sub, &EnumerationCaps::default()).unwrap();
        assert!(t.is_complete());
        assert!(t.has_inverse_columns());
        assert!(t.is_transitive());
        assert!(t.satisfies_relators(&p));
        t
    }

    fn w(letters: &[(usize, i64)]) -> Word {
        Word::from_syllables(letters)
    }

    #[test]
    fn infinite_dihedral_over_ab() {
        let t = tc("< a, b | a^2, b^2 >", &[w(&[(0, 1), (1, 1)])]);
        assert_eq!(t.n_cosets(), 2);
    }

    #[test]
    fn s3_over_a() {
        let t = tc("< a, b | a^2, b^2, (a b)^3 >", &[w(&[(0, 1)])]);
        assert_eq!(t.n_cosets(), 3);
    }

    #[test]
    fn z3_over_trivial() {
        assert_eq!(tc("< a | a^3 >", &[]).n_cosets(), 3);
    }

    #[test]
    fn group_orders() {
        assert_eq!(tc("< a, b | a^2, b^3, (a b)^5 >", &[]).n_cosets(), 60);
        assert_eq!(tc("< a, b | a^4, a^2 b^-2, b^-1 a b a >", &[]).n_cosets(), 8);
        assert_eq!(tc("< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3 >", &[]).n_cosets(), 120);
        assert_eq!(tc("< a, b | a^2, b^3, (a b)^3 >", &[]).n_cosets(), 12);
        // Coxeter presentation of S4
        assert_eq!(tc("< a, b, c | a^2, b^2, c^2, (a b)^3, (b c)^3, (a c)^2 >", &[]).n_cosets(), 24);
    }

    #[test]
    fn trivial_group_collapses() {
        assert_eq!(tc("< a, b | a b^2, b a^2, a^3 b^-1 >", &[]).n_cosets(), 1);
        assert_eq!(tc("< | >", &[]).n_cosets(), 1);
    }

    #[test]
    fn infinite_index_hits_cap() {
        let p = parse_presentation("< a, b | >").unwrap();
        let caps = EnumerationCaps::new(500, 10_000).unwrap();
        assert!(matches!(todd_coxeter(&p, &[], &caps), Err(CosetError::CapExceeded { .. })));
    }

    #[test]
    fn commutator_table_quaternion() {
        let p = parse_presentation("< a, b | a^4, a^2 b^-2, b^-1 a b a >").unwrap();
        let t = commutator_coset_table(&p).unwrap();
        assert_eq!(t.n_cosets(), 4);
        assert!(t.has_inverse_columns() && t.is_transitive() && t.satisfies_relators(&p));
    }

    #[test]
    fn commutator_table_perfect_and_free() {
        let p = parse_presentation("< a, b | a^2, b^3, (a b)^5 >").unwrap();
        assert_eq!(commutator_coset_table(&p).unwrap().n_cosets(), 1);
        let f2 = GroupPresentation::free(2);
        assert_eq!(commutator_coset_table(&f2), Err(CosetError::InfiniteIndex(2)));
    }

    #[test]
    fn permutations_build_stabilizer_tables() {
        // S3 acting on 3 points: stabilizer of 0 has index 3.
        let t = CosetTable::from_permutations(2, &[vec![1, 0, 2], vec![0, 2, 1]]).unwrap();
        assert_eq!(t.n_cosets(), 3);
        // orbit restriction
        let t = CosetTable::from_permutations(1, &[vec![1, 0, 3, 2]]).unwrap();
        assert_eq!(t.n_cosets(), 2);
        assert!(CosetTable::from_permutations(1, &[vec![0, 0]]).is_err());
    }

    #[test]
    fn permutation_images_certify_nontriviality() {
        let p = parse_presentation("< a, b | a^2, b^3, (a b)^7 >").unwrap();
        let img = nontrivial_permutation_image(&p, 7, 1_000_000).unwrap();
        assert_eq!(img[0].len(), 7);
        let t = parse_presentation("< a, b | a b^2, b a^2, a^3 b^-1 >").unwrap();
        assert!(nontrivial_permutation_image(&t, 5, 1_000_000).is_none());
        assert_eq!(cycle_type_representatives(5).len(), 7);
        assert_eq!(permutations(4).len(), 24);
    }
}
