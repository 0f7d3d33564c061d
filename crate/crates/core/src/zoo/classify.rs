use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::families::fuchsian;
use super::ZooError;
use crate::abelian::{abelianization, is_perfect};
use crate::cosets::{group_order, nontrivial_permutation_image, EnumerationCaps};
use crate::derived::{derived_series, SeriesLimits};
use crate::fpgroup::GroupPresentation;

/// Note attached to nonadorable free products and splittings.
pub const RANK_NOTE: &str = "rank of G^i/G^{i+1} is at least 2 for every i ≥ 1";

/// How a free-product factor was shown to be non-trivial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "by", content = "value")]
pub enum NontrivialityCertificate {
    Abelianization(String),
    FiniteOrder(usize),
    PermutationImage { degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSummary {
    pub certificate: NontrivialityCertificate,
    pub perfect: bool,
    pub order: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FreeProductBranch {
    /// Both factors perfect, so the product is perfect (doa 0).
    PerfectProduct,
    /// `Z/2 * Z/2`, solvable with doa 2.
    Dinfty,
    /// Exactly one factor is perfect. Then `(P * B)^i` is a free product
    /// of conjugates of `P` with `B^i`, so the product is adorable exactly
    /// when `B` is, and of the same degree.
    PerfectFactor,
    NonAdorable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeProductVerdict {
    pub branch: FreeProductBranch,
    pub doa: Option<usize>,
    pub factors: [FactorSummary; 2],
    pub rank_note: Option<String>,
}

/// Largest permutation degree tried when certifying a factor is non-trivial.
const IMAGE_DEGREE: usize = 7;
const IMAGE_BUDGET: usize = 2_000_000;

fn summarize(p: &GroupPresentation, caps: &EnumerationCaps) -> Result<FactorSummary, ZooError> {
    let ab = abelianization(p);
    let order = group_order(p, caps).ok();
    if order == Some(1) {
        return Err(ZooError::TrivialFactor(p.to_string()));
    }
    let certificate = if !ab.is_trivial() {
        NontrivialityCertificate::Abelianization(ab.to_string())
    } else if let Some(n) = order {
        NontrivialityCertificate::FiniteOrder(n)
    } else if let Some(image) = nontrivial_permutation_image(p, IMAGE_DEGREE, IMAGE_BUDGET) {
        NontrivialityCertificate::PermutationImage { degree: image[0].len() }
    } else {
        return Err(ZooError::CannotCertifyFactorTriviality(p.to_string()));
    };
    Ok(FactorSummary { certificate, perfect: ab.is_trivial(), order })
}

/// Adorability of `A * B` for non-trivial factors.
///
/// When neither factor is perfect the product is `D∞` or not adorable. When
/// exactly one is, the degree is that of the other factor, computed with the
/// derived series engine (`None` if the run is not conclusive).
///
/// Non-triviality is certified by a non-trivial abelianization, a finite
/// enumeration, or a homomorphism onto a non-trivial permutation group.
pub fn free_product_verdict(
    a: &GroupPresentation,
    b: &GroupPresentation,
    caps: &EnumerationCaps,
) -> Result<FreeProductVerdict, ZooError> {
    let factors = [summarize(a, caps)?, summarize(b, caps)?];
    let (branch, doa) = if factors.iter().all(|f| f.perfect) {
        (FreeProductBranch::PerfectProduct, Some(0))
    } else if factors.iter().all(|f| f.order == Some(2)) {
        (FreeProductBranch::Dinfty, Some(2))
    } else if factors[0].perfect || factors[1].perfect {
        let other = if factors[0].perfect { b } else { a };
        let lim = SeriesLimits { enumeration: *caps, ..SeriesLimits::default() };
        (FreeProductBranch::PerfectFactor, derived_series(other, &lim).verdict.doa())
    } else {
        (FreeProductBranch::NonAdorable, None)
    };
    let rank_note = (branch == FreeProductBranch::NonAdorable).then(|| RANK_NOTE.to_string());
    Ok(FreeProductVerdict { branch, doa, factors, rank_note })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplittingKind {
    Amalgam,
    Hnn,
}

/// A group splitting over a subgroup `H`, with the caller's claim that `H`
/// is `n`-step G-solvable (`G^n ∩ H = 1`, `G^(n−1) ∩ H ≠ 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingDecl {
    pub kind: SplittingKind,
    pub solvability_step: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SplittingBranch {
    /// Adorable of degree `n` and not solvable.
    AdorableDegreeNotSolvable(usize),
    /// `G^n` is infinite dihedral.
    DerivedStageIsDinfty(usize),
    NonAdorable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingVerdict {
    /// The possible outcomes; exactly one holds.
    pub branches: Vec<SplittingBranch>,
    pub rank_note: Option<String>,
}

pub fn splitting_verdict(decl: &SplittingDecl) -> Result<SplittingVerdict, ZooError> {
    let n = decl.solvability_step.ok_or(ZooError::UnknownSolvabilityStep)?;
    let branches = match decl.kind {
        SplittingKind::Amalgam => vec![
            SplittingBranch::AdorableDegreeNotSolvable(n),
            SplittingBranch::DerivedStageIsDinfty(n),
            SplittingBranch::NonAdorable,
        ],
        SplittingKind::Hnn => vec![SplittingBranch::NonAdorable],
    };
    Ok(SplittingVerdict { branches, rank_note: Some(RANK_NOTE.to_string()) })
}

/// Base orbifold data of a Seifert fibered space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertData {
    pub base_genus: usize,
    #[serde(default = "yes")]
    pub orientable_base: bool,
    #[serde(default)]
    pub cone_indices: Vec<usize>,
    #[serde(default)]
    pub has_boundary: bool,
}

fn yes() -> bool {
    true
}

impl SeifertData {
    pub fn closed(base_genus: usize, cone_indices: &[usize]) -> Self {
        SeifertData { base_genus, orientable_base: true, cone_indices: cone_indices.to_vec(), has_boundary: false }
    }

    pub fn bounded(base_genus: usize, cone_indices: &[usize]) -> Self {
        SeifertData { has_boundary: true, ..Self::closed(base_genus, cone_indices) }
    }

    /// Orbifold fundamental group of a closed base.
    pub fn orbifold_group(&self) -> GroupPresentation {
        fuchsian(self.base_genus, &self.cone_indices)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeifertBranch {
    /// Some `G^i` with `i ≤ 2` is finite.
    FiniteDerived,
    Solvable,
    NonAdorable,
    Perfect,
    /// Five cone points, no pair with gcd ≥ 3: not decided.
    ReaderCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertClassification {
    pub branch: SeifertBranch,
    pub trace: Vec<String>,
}

fn pairwise_coprime(xs: &[usize]) -> bool {
    xs.iter().enumerate().all(|(i, a)| xs[i + 1..].iter().all(|b| a.gcd(b) == 1))
}

/// Classifies `π1(M)` for a Seifert fibered `M` from its base orbifold.
pub fn classify_seifert(s: &SeifertData) -> Result<SeifertClassification, ZooError> {
    if !s.orientable_base {
        return Err(ZooError::UnsupportedOrbifold("nonorientable base".into()));
    }
    if let Some(&p) = s.cone_indices.iter().find(|&&p| p < 2) {
        return Err(ZooError::InvalidConeIndex(p));
    }
    let g = s.base_genus;
    let cones = &s.cone_indices;
    let n = cones.len();
    let mut trace = Vec::new();
    let done = |branch, trace: &mut Vec<String>, why: String| {
        trace.push(why);
        Ok(SeifertClassification { branch, trace: std::mem::take(trace) })
    };

    if s.has_boundary {
        let free = 2 * g;
        trace.push(format!("boundary: orbifold group is a free product of {free} copies of Z and cyclic groups of orders {cones:?}"));
        let factors = free + n;
        return if factors <= 1 {
            done(SeifertBranch::Solvable, &mut trace, "at most one cyclic factor: π1(M) is solvable".into())
        } else if free == 0 && cones.iter().all(|&p| p == 2) && n == 2 {
            done(SeifertBranch::Solvable, &mut trace, "Z/2 * Z/2 is infinite dihedral: π1(M) is solvable".into())
        } else {
            done(SeifertBranch::NonAdorable, &mut trace, "non-trivial free product other than Z/2 * Z/2: not adorable, and neither is π1(M)".into())
        };
    }

    trace.push(format!("closed base of genus {g} with {n} cone points {cones:?}"));
    if g >= 1 {
        return if g == 1 && n == 0 {
            done(SeifertBranch::Solvable, &mut trace, "circle bundle over the torus: solvable".into())
        } else {
            done(
                SeifertBranch::NonAdorable,
                &mut trace,
                "G' has infinite index in a cocompact Fuchsian group, so it is an infinitely generated free \
                 product of cyclic groups: not adorable"
                    .into(),
            )
        };
    }

    if n <= 2 {
        return done(SeifertBranch::FiniteDerived, &mut trace, "sphere with at most two cone points: finite orbifold group".into());
    }
    let lcm = cones.iter().fold(1usize, |l, &p| l.lcm(&p));
    let euler_sum: usize = cones.iter().map(|&p| lcm / p).sum();
    let coprime = pairwise_coprime(cones);
    if n == 3 {
        let verdict = match euler_sum.cmp(&lcm) {
            std::cmp::Ordering::Greater => {
                (SeifertBranch::FiniteDerived, "1/p + 1/q + 1/r > 1: spherical, finite orbifold group".to_string())
            }
            std::cmp::Ordering::Equal => {
                trace.push("1/p + 1/q + 1/r = 1: Euclidean, the orbifold group is perfect or solvable".into());
                if is_perfect(&s.orbifold_group()) {
                    (SeifertBranch::Perfect, "orbifold group is perfect".into())
                } else {
                    (SeifertBranch::Solvable, "orbifold group is not perfect, hence solvable".into())
                }
            }
            std::cmp::Ordering::Less => {
                trace.push("1/p + 1/q + 1/r < 1: hyperbolic".into());
                if coprime {
                    (SeifertBranch::Perfect, "pairwise coprime indices: perfect, homology sphere case".into())
                } else {
                    (
                        SeifertBranch::NonAdorable,
                        "indices not pairwise coprime: infinite non-perfect, and a hyperbolic group is not solvable".into(),
                    )
                }
            }
        };
        return done(verdict.0, &mut trace, verdict.1);
    }
    if n == 4 {
        if cones.iter().all(|&p| p == 2) {
            return done(SeifertBranch::Solvable, &mut trace, "(2,2,2,2): Euclidean, solvable".into());
        }
        trace.push("four cone points, hyperbolic".into());
        return if coprime {
            done(SeifertBranch::Perfect, &mut trace, "pairwise coprime indices: perfect".into())
        } else {
            done(
                SeifertBranch::NonAdorable,
                &mut trace,
                "indices not pairwise coprime: infinite non-perfect, and a hyperbolic group is not solvable".into(),
            )
        };
    }
    if n == 5 {
        let big_pair = (0..n).any(|i| (i + 1..n).any(|j| cones[i].gcd(&cones[j]) >= 3));
        if !big_pair {
            return done(SeifertBranch::ReaderCase, &mut trace, "five cone points and no pair with gcd ≥ 3: left open".into());
        }
        return done(SeifertBranch::NonAdorable, &mut trace, "five cone points with a pair of gcd ≥ 3: not adorable".into());
    }
    trace.push("at least six cone points: x1 x2 x3 = 1 splits off a free product of two triangle-type groups of order ≥ 3".into());
    if is_perfect(&s.orbifold_group()) {
        done(SeifertBranch::Perfect, &mut trace, "orbifold group is perfect".into())
    } else {
        done(SeifertBranch::NonAdorable, &mut trace, "orbifold group is not perfect: not adorable".into())
    }
}
