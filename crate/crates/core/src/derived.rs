//! The derived-series engine: abelianize, build the commutator coset table,
//! rewrite, simplify, repeat. Also a verifier for explicit filtrations with
//! abelian quotients and perfect terminal term.

use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{abelianization, AbelianInvariants};
use crate::cosets::{commutator_coset_table, todd_coxeter, CosetError, CosetTable, EnumerationCaps};
use crate::fpgroup::{free_reduce, tietze_simplify, GroupPresentation, PresentationStats, SimplificationCaps, Word};
use crate::rewriting::reidemeister_schreier_raw;

/// Resource bounds for a series run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesLimits {
    /// Deepest stage `G^i` the engine may construct.
    pub max_depth: usize,
    pub enumeration: EnumerationCaps,
    pub simplification: SimplificationCaps,
    pub timeout_secs: u64,
}

impl Default for SeriesLimits {
    fn default() -> Self {
        SeriesLimits {
            max_depth: 6,
            enumeration: EnumerationCaps::default(),
            simplification: SimplificationCaps::default(),
            timeout_secs: 60,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("series limit `{0}` must be strictly positive")]
pub struct InvalidLimits(pub &'static str);

impl SeriesLimits {
    pub fn validate(&self) -> Result<(), InvalidLimits> {
        let checks = [
            ("max_depth", self.max_depth),
            ("max_cosets", self.enumeration.max_cosets),
            ("max_deductions", self.enumeration.max_deductions),
            ("max_generators", self.simplification.max_generators),
            ("max_total_relator_length", self.simplification.max_total_relator_length),
            ("max_passes", self.simplification.max_passes),
            ("timeout_secs", self.timeout_secs as usize),
        ];
        match checks.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(InvalidLimits(name)),
            None => Ok(()),
        }
    }

    pub fn budget(&self) -> Duration {
        Duration::from_secs(self.timeout_secs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "flag", content = "value")]
pub enum StageFlag {
    PartiallySimplified,
    CertifiedFree(usize),
    CertifiedTrivial,
}

/// One term `G^i` of the derived series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub depth: usize,
    pub presentation_stats: PresentationStats,
    /// `G^i / G^{i+1}`.
    pub invariants: AbelianInvariants,
    pub flags: Vec<StageFlag>,
    /// Simplified presentation of `G^i`.
    pub presentation: GroupPresentation,
}

impl StageReport {
    pub fn certified_free_rank(&self) -> Option<usize> {
        self.flags.iter().find_map(|f| match f {
            StageFlag::CertifiedFree(r) => Some(*r),
            _ => None,
        })
    }

    pub fn is_partial(&self) -> bool {
        self.flags.contains(&StageFlag::PartiallySimplified)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason")]
pub enum NonAdorableReason {
    /// `G^stage` is free of rank at least 2.
    FreeRankAtLeast2 { stage: usize, rank: usize },
    StructuralPredicate { name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitHit {
    MaxDepth,
    /// The next commutator subgroup has index above `max_cosets`.
    CosetCap,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SeriesVerdict {
    AdorableCertified { doa: usize },
    NonAdorableCertified(NonAdorableReason),
    HaltedInfiniteAbelianization { depth: usize, rank: usize },
    Inconclusive { depth: usize, limits_hit: Vec<LimitHit> },
}

impl SeriesVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            SeriesVerdict::AdorableCertified { .. } => "AdorableCertified",
            SeriesVerdict::NonAdorableCertified(_) => "NonAdorableCertified",
            SeriesVerdict::HaltedInfiniteAbelianization { .. } => "HaltedInfiniteAbelianization",
            SeriesVerdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    pub fn doa(&self) -> Option<usize> {
        match self {
            SeriesVerdict::AdorableCertified { doa } => Some(*doa),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRun {
    pub stages: Vec<StageReport>,
    pub verdict: SeriesVerdict,
    /// Wall-clock time spent on each stage.
    pub stage_timings_ms: Vec<u64>,
}

/// Persistent store for child stages, keyed by parent presentation and limits.
pub trait StageCache {
    fn load(&self, parent: &GroupPresentation, lim: &SeriesLimits) -> Option<GroupPresentation>;
    fn store(&self, parent: &GroupPresentation, lim: &SeriesLimits, child: &GroupPresentation);
}

/// A cache that never hits.
pub struct NoCache;

impl StageCache for NoCache {
    fn load(&self, _: &GroupPresentation, _: &SeriesLimits) -> Option<GroupPresentation> {
        None
    }
    fn store(&self, _: &GroupPresentation, _: &SeriesLimits, _: &GroupPresentation) {}
}

pub fn derived_series(p: &GroupPresentation, lim: &SeriesLimits) -> SeriesRun {
    derived_series_cached(p, lim, &NoCache)
}

/// Runs the derived series until a verdict is reached.
///
/// Stage 0 reports the statistics of `p` as given; all certification uses
/// the simplified presentation. Free-group detection is only trusted on
/// stages whose simplification converged, since a capped presentation with
/// zero relators can still be missing relations that later passes would find.
pub fn derived_series_cached(p: &GroupPresentation, lim: &SeriesLimits, cache: &dyn StageCache) -> SeriesRun {
    let start = Instant::now();
    let mut stages = Vec::new();
    let mut timings = Vec::new();
    let mut current = p.clone();
    let mut depth = 0;
    let verdict = loop {
        let stage_start = Instant::now();
        let simplified = tietze_simplify(&current, &lim.simplification);
        let q = simplified.presentation;
        let invariants = abelianization(&q);
        let mut flags = Vec::new();
        if simplified.partial {
            flags.push(StageFlag::PartiallySimplified);
        }
        let free_rank = (!simplified.partial && q.n_relators() == 0).then(|| q.n_generators());
        match free_rank {
            Some(0) => flags.push(StageFlag::CertifiedTrivial),
            Some(r) => flags.push(StageFlag::CertifiedFree(r)),
            None => {}
        }
        let stats = if depth == 0 { p.stats() } else { q.stats() };
        stages.push(StageReport { depth, presentation_stats: stats, invariants: invariants.clone(), flags, presentation: q.clone() });

        let decided = match free_rank {
            Some(0) => Some(SeriesVerdict::AdorableCertified { doa: depth }),
            Some(1) => Some(SeriesVerdict::AdorableCertified { doa: depth + 1 }),
            Some(rank) => Some(SeriesVerdict::NonAdorableCertified(NonAdorableReason::FreeRankAtLeast2 { stage: depth, rank })),
            None if invariants.is_trivial() => Some(SeriesVerdict::AdorableCertified { doa: depth }),
            None if invariants.rank > 0 => {
                Some(SeriesVerdict::HaltedInfiniteAbelianization { depth, rank: invariants.rank })
            }
            None => None,
        };
        if let Some(v) = decided {
            timings.push(elapsed_ms(stage_start));
            break v;
        }

        let mut limits_hit = Vec::new();
        let index = invariants.order().and_then(|o| o.to_usize());
        if index.is_none_or(|i| i > lim.enumeration.max_cosets) {
            limits_hit.push(LimitHit::CosetCap);
        }
        if depth + 1 > lim.max_depth {
            limits_hit.push(LimitHit::MaxDepth);
        }
        if start.elapsed() > lim.budget() {
            limits_hit.push(LimitHit::Timeout);
        }
        if !limits_hit.is_empty() {
            timings.push(elapsed_ms(stage_start));
            break SeriesVerdict::Inconclusive { depth, limits_hit };
        }

        let next = match cache.load(&q, lim) {
            Some(child) => child,
            None => {
                let table = commutator_coset_table(&q).expect("finite abelianization");
                let child = reidemeister_schreier_raw(&q, &table).expect("complete table").presentation;
                let child = child.with_name(format!("{} derived", p.name()));
                cache.store(&q, lim, &child);
                child
            }
        };
        timings.push(elapsed_ms(stage_start));
        current = next;
        depth += 1;
    };
    SeriesRun { stages, verdict, stage_timings_ms: timings }
}

fn elapsed_ms(since: Instant) -> u64 {
    since.elapsed().as_millis() as u64
}

/// Degree of adorability, or `None` when the engine cannot certify it.
pub fn doa(p: &GroupPresentation, lim: &SeriesLimits) -> Option<usize> {
    derived_series(p, lim).verdict.doa()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiltrationError {
    #[error("level {0} is not contained in the level above it")]
    NotSubgroup(usize),
    #[error("level {0} is not normal in the level above it")]
    NormalityFails(usize),
    #[error("quotient at level {0} is not abelian")]
    QuotientNotAbelian(usize),
    #[error("terminal subgroup is not perfect")]
    TerminalNotPerfect,
    #[error("level {level}: {source}")]
    CapExceeded { level: usize, source: CosetError },
}

/// Certificate that a filtration `G = G_0 ⊵ G_1 ⊵ … ⊵ G_n` has abelian
/// quotients and a perfect last term, so that `G` is adorable with
/// `doa(G) ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdorabilityWitness {
    pub length: usize,
    /// Index of each level in `G`, when it is finite.
    pub indices: Vec<Option<usize>>,
}

/// Checks an explicit subgroup chain, given as generating words for each
/// level `G_1, …, G_n` (an empty list is the trivial subgroup).
///
/// Each level is enumerated in `G`. Normality and abelian quotients are
/// decided by membership of conjugates and commutators of the previous
/// level's generators. A trivial level cannot be enumerated when the group
/// is infinite, so its predecessor is instead shown to be abelian from its
/// own rewritten presentation.
pub fn verify_filtration(
    p: &GroupPresentation,
    chain: &[Vec<Word>],
    lim: &SeriesLimits,
) -> Result<AdorabilityWitness, FiltrationError> {
    let all_gens: Vec<Word> = (0..p.n_generators()).map(Word::generator).collect();
    let mut tables: Vec<Option<CosetTable>> = vec![None];
    let mut indices = Vec::new();

    for (k, gens) in chain.iter().enumerate() {
        let level = k + 1;
        let gens: Vec<Word> = gens.iter().map(free_reduce).filter(|w| !w.is_empty()).collect();
        let prev_gens: Vec<Word> = if k == 0 {
            all_gens.clone()
        } else {
            chain[k - 1].iter().map(free_reduce).filter(|w| !w.is_empty()).collect()
        };
        let parent_trivial = k > 0 && tables[k].is_none();
        if gens.is_empty() {
            if !parent_trivial {
                let prev = level_presentation(p, tables[k].as_ref(), lim);
                if !is_abelian(&prev, lim).map_err(|source| FiltrationError::CapExceeded { level, source })? {
                    return Err(FiltrationError::QuotientNotAbelian(level));
                }
            }
            indices.push(todd_coxeter(p, &[], &lim.enumeration).ok().map(|t| t.n_cosets()));
            tables.push(None);
            continue;
        }
        if parent_trivial {
            return Err(FiltrationError::NotSubgroup(level));
        }
        let t = todd_coxeter(p, &gens, &lim.enumeration).map_err(|source| FiltrationError::CapExceeded { level, source })?;
        let member = |w: &Word| t.contains(w).expect("complete table");
        if let Some(parent) = &tables[k] {
            if !gens.iter().all(|w| parent.contains(w).expect("complete table")) {
                return Err(FiltrationError::NotSubgroup(level));
            }
        }
        for h in &prev_gens {
            for w in &gens {
                if !member(&w.conjugate_by(h)) || !member(&w.conjugate_by(&h.inverse())) {
                    return Err(FiltrationError::NormalityFails(level));
                }
            }
        }
        for (i, u) in prev_gens.iter().enumerate() {
            for v in &prev_gens[i + 1..] {
                if !member(&Word::commutator(u, v)) {
                    return Err(FiltrationError::QuotientNotAbelian(level));
                }
            }
        }
        indices.push(Some(t.n_cosets()));
        tables.push(Some(t));
    }

    let terminal_trivial = !chain.is_empty() && tables.last().is_some_and(|t| t.is_none());
    if !terminal_trivial {
        let q = level_presentation(p, tables.last().and_then(|t| t.as_ref()), lim);
        if !abelianization(&q).is_trivial() {
            return Err(FiltrationError::TerminalNotPerfect);
        }
    }
    Ok(AdorabilityWitness { length: chain.len(), indices })
}

/// Simplified presentation of a level: `p` itself for the top, otherwise the
/// rewritten presentation of the subgroup behind `table`.
fn level_presentation(p: &GroupPresentation, table: Option<&CosetTable>, lim: &SeriesLimits) -> GroupPresentation {
    let raw = match table {
        None => p.clone(),
        Some(t) => reidemeister_schreier_raw(p, t).expect("complete table").presentation,
    };
    tietze_simplify(&raw, &lim.simplification).presentation
}

fn is_abelian(q: &GroupPresentation, lim: &SeriesLimits) -> Result<bool, CosetError> {
    if q.n_generators() <= 1 {
        return Ok(true);
    }
    let t = todd_coxeter(q, &[], &lim.enumeration)?;
    let gens: Vec<Word> = (0..q.n_generators()).map(Word::generator).collect();
    Ok(gens
        .iter()
        .enumerate()
        .all(|(i, u)| gens[i + 1..].iter().all(|v| t.contains(&Word::commutator(u, v)) == Some(true))))
}
