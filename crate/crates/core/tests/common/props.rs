//! Randomized property drivers shared by the test suites and the
//! acceptance runner.

use adorn::abelian::{smith_normal_form, IntMatrix};
use adorn::cosets::CosetTable;
use adorn::fpgroup::{GroupPresentation, Word};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_matrix(rng: &mut StdRng) -> (Vec<Vec<i64>>, usize) {
    let rows = rng.gen_range(0..=4);
    let cols = rng.gen_range(1..=4);
    let m = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-5..=5)).collect()).collect();
    (m, cols)
}

/// Checks one matrix against the minor oracle and the SNF contract.
pub fn snf_agrees(m: &[Vec<i64>], cols: usize) -> Result<(), String> {
    let im = IntMatrix::from_rows(cols, m);
    let f = smith_normal_form(&im);
    if f.u.mul(&im).mul(&f.v) != f.d {
        return Err("u·m·v ≠ d".into());
    }
    if !f.d.is_diagonal() {
        return Err("d not diagonal".into());
    }
    for x in [&f.u, &f.v] {
        if !x.determinant().abs().is_one() {
            return Err("transform not unimodular".into());
        }
    }
    let diag: Vec<BigInt> = f.diagonal();
    for w in diag.windows(2) {
        if w[0].is_negative() || (!w[0].is_zero() && !(&w[1] % &w[0]).is_zero()) {
            return Err(format!("divisor chain broken: {diag:?}"));
        }
    }
    let nonzero: Vec<i128> = diag.iter().filter(|d| !d.is_zero()).map(|d| i128::try_from(d).unwrap()).collect();
    let oracle = super::minor_gcd_diagonal(m, cols);
    if nonzero != oracle {
        return Err(format!("diagonal {nonzero:?}, minors give {oracle:?}"));
    }
    Ok(())
}

/// A random presentation on up to 3 generators.
pub fn random_presentation(rng: &mut StdRng) -> GroupPresentation {
    let n = rng.gen_range(1..=3);
    let rels = (0..rng.gen_range(0..=3))
        .map(|_| {
            let syl: Vec<(usize, i64)> = (0..rng.gen_range(1..=5)).map(|_| (rng.gen_range(0..n), rng.gen_range(-3..=3))).collect();
            Word::from_syllables(&syl)
        })
        .collect();
    GroupPresentation::with_fresh_names("", n, rels)
}

/// One Tietze move that preserves the group.
pub fn perturb(rng: &mut StdRng, p: &GroupPresentation) -> GroupPresentation {
    let n = p.n_generators();
    let mut rels: Vec<Word> = p.relators().to_vec();
    match rng.gen_range(0..4) {
        // add a consequence of the existing relators
        0 if !rels.is_empty() => {
            let r = rels[rng.gen_range(0..rels.len())].clone();
            let s = rels[rng.gen_range(0..rels.len())].inverse();
            let c = Word::generator(rng.gen_range(0..n)).pow(rng.gen_range(-2..=2));
            rels.push(r.conjugate_by(&c).mul(&s));
        }
        // replace a relator by an inverse conjugate
        1 if !rels.is_empty() => {
            let i = rng.gen_range(0..rels.len());
            let c = Word::generator(rng.gen_range(0..n));
            rels[i] = rels[i].inverse().conjugate_by(&c);
        }
        // new generator defined by a word in the old ones
        2 => {
            let syl: Vec<(usize, i64)> = (0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(0..n), rng.gen_range(-2..=2))).collect();
            let def = Word::from_syllables(&syl);
            rels.push(Word::generator(n).inverse().mul(&def));
            return GroupPresentation::with_fresh_names("", n + 1, rels);
        }
        // rotate a relator
        _ => {
            if !rels.is_empty() {
                let i = rng.gen_range(0..rels.len());
                let len = rels[i].len().max(1);
                rels[i] = rels[i].rotated(rng.gen_range(0..len));
            }
        }
    }
    GroupPresentation::with_fresh_names("", n, rels)
}

/// Random action of a free group of rank `n_gens` on at most 12 points,
/// restricted to the orbit of 0.
pub fn random_transitive_action(rng: &mut StdRng, n_gens: usize) -> CosetTable {
    let degree = rng.gen_range(1..=12);
    let perms: Vec<Vec<usize>> = (0..n_gens)
        .map(|_| {
            let mut p: Vec<usize> = (0..degree).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    let mut orbit = vec![false; degree];
    let mut stack = vec![0];
    orbit[0] = true;
    while let Some(c) = stack.pop() {
        for p in &perms {
            if !orbit[p[c]] {
                orbit[p[c]] = true;
                stack.push(p[c]);
            }
        }
    }
    let t = CosetTable::from_permutations(n_gens, &perms).expect("valid permutations");
    assert_eq!(t.n_cosets(), orbit.iter().filter(|&&b| b).count());
    t
}
