//! Reidemeister–Schreier rewriting: a presentation of a finite-index
//! subgroup from its coset table.

use std::collections::VecDeque;

use thiserror::Error;

use crate::cosets::CosetTable;
use crate::fpgroup::{
    free_reduce, tietze_simplify, GroupPresentation, Letter, SimplificationCaps, Word,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("coset table is incomplete")]
    IncompleteTable,
    #[error("coset table has {table} generators but the presentation has {presentation}")]
    GeneratorMismatch { table: usize, presentation: usize },
}

/// Breadth-first Schreier transversal: coset representatives, shortest
/// first and lexicographically least among equals (`a < a⁻¹ < b < …`).
/// The set is prefix-closed and coset 0 gets the empty word.
pub fn schreier_transversal(t: &CosetTable) -> Result<Vec<Word>, RewriteError> {
    Ok(spanning_tree(t)?.representatives)
}

struct SpanningTree {
    representatives: Vec<Word>,
    /// `tree_edge[c * n + g]`: the edge `c --g--> c·g` lies in the tree.
    tree_edge: Vec<bool>,
}

fn spanning_tree(t: &CosetTable) -> Result<SpanningTree, RewriteError> {
    if !t.is_complete() {
        return Err(RewriteError::IncompleteTable);
    }
    let n = t.n_generators();
    let mut reps: Vec<Option<Word>> = vec![None; t.n_cosets()];
    let mut tree_edge = vec![false; t.n_cosets() * n];
    reps[0] = Some(Word::empty());
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for col in 0..2 * n {
            let l = Letter::from_column(col);
            let d = t.act(c, l).ok_or(RewriteError::IncompleteTable)?;
            if reps[d].is_some() {
                continue;
            }
            let mut w = reps[c].clone().expect("visited").into_letters();
            w.push(l);
            reps[d] = Some(Word::from_letters(w));
            if l.is_inverse() {
                tree_edge[d * n + l.generator()] = true;
            } else {
                tree_edge[c * n + l.generator()] = true;
            }
            queue.push_back(d);
        }
    }
    let representatives = reps
        .into_iter()
        .map(|r| r.ok_or(RewriteError::IncompleteTable))
        .collect::<Result<_, _>>()?;
    Ok(SpanningTree { representatives, tree_edge })
}

/// A subgroup presentation in Schreier generators together with the
/// bookkeeping needed to rewrite words of the parent group.
#[derive(Debug, Clone)]
pub struct SchreierPresentation {
    pub presentation: GroupPresentation,
    /// `generator_of_edge[c * n + g]` is the Schreier generator for the edge
    /// `c --g--> c·g`, or `None` for tree edges.
    generator_of_edge: Vec<Option<usize>>,
    table: CosetTable,
}

impl SchreierPresentation {
    /// Rewrites a word of the parent group that lies in the subgroup as a
    /// word in the Schreier generators. Returns `None` if the word is not
    /// in the subgroup.
    pub fn rewrite(&self, w: &Word) -> Option<Word> {
        let n = self.table.n_generators();
        let mut c = 0;
        let mut out = Vec::new();
        for &l in w.letters() {
            let d = self.table.act(c, l)?;
            let (src, inv) = if l.is_inverse() { (d, true) } else { (c, false) };
            if let Some(s) = self.generator_of_edge[src * n + l.generator()] {
                out.push(Letter::new(s, inv));
            }
            c = d;
        }
        (c == 0).then(|| free_reduce(&Word::from_letters(out)))
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }
}

/// Unsimplified Reidemeister–Schreier presentation on generators `x0, x1, …`,
/// one per non-tree edge, numbered by `(coset, generator)`.
pub fn reidemeister_schreier_raw(p: &GroupPresentation, t: &CosetTable) -> Result<SchreierPresentation, RewriteError> {
    if t.n_generators() != p.n_generators() {
        return Err(RewriteError::GeneratorMismatch { table: t.n_generators(), presentation: p.n_generators() });
    }
    let tree = spanning_tree(t)?;
    let n = p.n_generators();
    let mut generator_of_edge = vec![None; t.n_cosets() * n];
    let mut count = 0;
    for (edge, slot) in generator_of_edge.iter_mut().enumerate() {
        if !tree.tree_edge[edge] {
            *slot = Some(count);
            count += 1;
        }
    }
    let mut relators = Vec::with_capacity(t.n_cosets() * p.n_relators());
    for c in 0..t.n_cosets() {
        for r in p.relators() {
            let mut cur = c;
            let mut out = Vec::with_capacity(r.len());
            for &l in r.letters() {
                let d = t.act(cur, l).ok_or(RewriteError::IncompleteTable)?;
                let (src, inv) = if l.is_inverse() { (d, true) } else { (cur, false) };
                if let Some(s) = generator_of_edge[src * n + l.generator()] {
                    let letter = Letter::new(s, inv);
                    if out.last() == Some(&letter.inverse()) {
                        out.pop();
                    } else {
                        out.push(letter);
                    }
                }
                cur = d;
            }
            relators.push(Word::from_letters(out));
        }
    }
    let name = format!("{} subgroup of index {}", p.name(), t.n_cosets());
    Ok(SchreierPresentation {
        presentation: GroupPresentation::with_fresh_names(name, count, relators),
        generator_of_edge,
        table: t.clone(),
    })
}

/// A simplified subgroup presentation.
#[derive(Debug, Clone)]
pub struct Rewritten {
    pub presentation: GroupPresentation,
    /// Schreier generator count before simplification.
    pub raw_generators: usize,
    /// Simplification stopped at a cap.
    pub partial: bool,
}

/// Reidemeister–Schreier presentation of the subgroup described by `t`,
/// passed through Tietze simplification.
pub fn reidemeister_schreier(
    p: &GroupPresentation,
    t: &CosetTable,
    caps: &SimplificationCaps,
) -> Result<Rewritten, RewriteError> {
    let raw = reidemeister_schreier_raw(p, t)?;
    let simplified = tietze_simplify(&raw.presentation, caps);
    Ok(Rewritten {
        raw_generators: raw.presentation.n_generators(),
        presentation: simplified.presentation,
        partial: simplified.partial,
    })
}
