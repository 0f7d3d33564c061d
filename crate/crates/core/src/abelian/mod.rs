//! Integer linear algebra on relator exponent matrices: Smith normal form
//! and abelianization.

mod matrix;
mod snf;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fpgroup::GroupPresentation;

pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};

/// A finitely generated abelian group `Z^rank ⊕ Z/t1 ⊕ … ⊕ Z/tk` with
/// `t1 | t2 | … | tk` and every `ti ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub rank: usize,
    #[serde(with = "biguint_list")]
    pub torsion: Vec<BigUint>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants { rank: 0, torsion: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        AbelianInvariants { rank, torsion: vec![] }
    }

    /// Builds invariants from arbitrary diagonal entries (zeros count as free
    /// rank, units are dropped) by normalizing to a divisor chain.
    pub fn from_diagonal(free_rank: usize, entries: &[u64]) -> Self {
        let m = IntMatrix::new(
            entries.len(),
            entries.len(),
            (0..entries.len() * entries.len())
                .map(|k| {
                    let (i, j) = (k / entries.len(), k % entries.len());
                    if i == j { BigInt::from(entries[i]) } else { BigInt::zero() }
                })
                .collect(),
        );
        let diag = smith_normal_form(&m).diagonal();
        let mut inv = invariants_from_diagonal(&diag, entries.len());
        inv.rank += free_rank;
        inv
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Group order, if finite.
    pub fn order(&self) -> Option<BigUint> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Total count of cyclic factors (free and torsion).
    pub fn n_factors(&self) -> usize {
        self.rank + self.torsion.len()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot read abelian group from {0:?}")]
pub struct InvariantsParseError(pub String);

impl FromStr for AbelianInvariants {
    type Err = InvariantsParseError;

    /// Accepts `trivial`, `1`, or summands `Z`, `Z^r`, `Z/d` joined by `⊕` or `+`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || InvariantsParseError(s.to_string());
        let t = s.trim();
        if t == "trivial" || t == "1" || t == "0" {
            return Ok(Self::trivial());
        }
        let mut rank = 0usize;
        let mut cyclic = Vec::new();
        for part in t.split(['⊕', '+']) {
            let part = part.trim();
            if part == "Z" {
                rank += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                rank += r.trim().parse::<usize>().map_err(|_| err())?;
            } else if let Some(d) = part.strip_prefix("Z/") {
                cyclic.push(d.trim().parse::<u64>().map_err(|_| err())?);
            } else {
                return Err(err());
            }
        }
        Ok(Self::from_diagonal(rank, &cyclic))
    }
}

mod biguint_list {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Small(u64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| match u64::try_from(x) {
                Ok(small) => Entry::Small(small),
                Err(_) => Entry::Big(x.to_string()),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Entry>::deserialize(d)?
            .into_iter()
            .map(|e| match e {
                Entry::Small(x) => Ok(BigUint::from(x)),
                Entry::Big(s) => s.parse().map_err(serde::de::Error::custom),
            })
            .collect()
    }
}

fn invariants_from_diagonal(diag: &[BigInt], cols: usize) -> AbelianInvariants {
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d| d.magnitude().clone())
        .collect();
    AbelianInvariants { rank: cols - nonzero, torsion }
}

/// Relator exponent-sum matrix: one row per relator, one column per generator.
pub fn relator_matrix(p: &GroupPresentation) -> IntMatrix {
    let rows: Vec<Vec<i64>> = p
        .relators()
        .iter()
        .map(|r| (0..p.n_generators()).map(|g| r.exponent_sum(g)).collect())
        .collect();
    IntMatrix::from_rows(p.n_generators(), &rows)
}

/// The abelianization `G/[G,G]` as invariants of the cokernel of the relator
/// matrix.
pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let m = relator_matrix(p);
    let s = smith_normal_form(&m);
    invariants_from_diagonal(&s.diagonal(), m.cols())
}

pub fn is_perfect(p: &GroupPresentation) -> bool {
    abelianization(p).is_trivial()
}

/// Rank of `H_2(A; Z) = Λ²A` for a finitely generated abelian group of rank `r`.
pub fn exterior_square_rank(r: usize) -> usize {
    r * r.saturating_sub(1) / 2
}

/// Explicit map from the generators onto `Z^rank ⊕ Z/t1 ⊕ … ⊕ Z/tk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianCoordinates {
    pub invariants: AbelianInvariants,
    /// `images[g]` lists the torsion coordinates (reduced mod `ti`, in chain
    /// order) followed by the free coordinates of generator `g`.
    pub images: Vec<Vec<BigInt>>,
}

pub fn abelian_coordinates(p: &GroupPresentation) -> AbelianCoordinates {
    let m = relator_matrix(p);
    let s = smith_normal_form(&m);
    let diag = s.diagonal();
    let n = m.cols();
    // Cokernel Z^n / row(m) ≅ Z^n / row(d) via x ↦ x·v.
    let mut torsion_cols = Vec::new();
    let mut free_cols = Vec::new();
    for k in 0..n {
        match diag.get(k) {
            Some(d) if d.is_one() => {}
            Some(d) if !d.is_zero() => torsion_cols.push((k, d.clone())),
            _ => free_cols.push(k),
        }
    }
    let images = (0..n)
        .map(|g| {
            let row = s.v.row(g);
            let mut coords: Vec<BigInt> = torsion_cols
                .iter()
                .map(|(k, d)| num_integer::Integer::mod_floor(&row[*k], d))
                .collect();
            coords.extend(free_cols.iter().map(|&k| row[k].clone()));
            coords
        })
        .collect();
    AbelianCoordinates { invariants: invariants_from_diagonal(&diag, n), images }
}

impl AbelianCoordinates {
    /// Torsion moduli as machine integers, if they fit.
    pub fn torsion_moduli(&self) -> Option<Vec<usize>> {
        self.invariants.torsion.iter().map(|t| t.to_usize()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::parse_presentation;

    fn ab(src: &str) -> AbelianInvariants {
        abelianization(&parse_presentation(src).unwrap())
    }

    #[test]
    fn worked_abelianizations() {
        assert_eq!(ab("< a, b | a b a b^-1 a^-1 b^-1 >"), AbelianInvariants::free(1));
        assert_eq!(ab("< a, b | a^4, a^2 b^-3 >").to_string(), "Z/12");
        assert!(ab("< a, b | a^2, b^3, (a b)^5 >").is_trivial());
        assert_eq!(ab("< a, b | a^4, a^2 b^-2, b^-1 a b a >").to_string(), "Z/2 ⊕ Z/2");
        assert_eq!(ab("< a, b, c | a^2, b^4 >").to_string(), "Z ⊕ Z/2 ⊕ Z/4");
    }

    #[test]
    fn perfectness() {
        assert!(is_perfect(&parse_presentation("< a, b | a^2, b^3, (a b)^5 >").unwrap()));
        assert!(!is_perfect(&parse_presentation("< a | >").unwrap()));
        assert!(is_perfect(&parse_presentation("< | >").unwrap()));
    }

    #[test]
    fn exterior_square() {
        assert_eq!(exterior_square_rank(3), 3);
        assert_eq!(exterior_square_rank(1), 0);
        assert_eq!(exterior_square_rank(4), 6);
        assert_eq!(exterior_square_rank(0), 0);
    }

    #[test]
    fn display_and_parse() {
        for s in ["trivial", "Z", "Z^3", "Z/12", "Z^2 ⊕ Z/2 ⊕ Z/6"] {
            let a: AbelianInvariants = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
        let a: AbelianInvariants = "Z/2 + Z/3".parse().unwrap();
        assert_eq!(a.to_string(), "Z/6");
        assert!("Q".parse::<AbelianInvariants>().is_err());
    }

    #[test]
    fn coordinates_respect_relators() {
        let p = parse_presentation("< a, b | a^4, a^2 b^-3 >").unwrap();
        let c = abelian_coordinates(&p);
        assert_eq!(c.invariants.torsion, vec![BigUint::from(12u32)]);
        // a ↦ x, b ↦ y with 4x = 0 and 2x = 3y (mod 12).
        let x = &c.images[0][0];
        let y = &c.images[1][0];
        let twelve = BigInt::from(12);
        use num_integer::Integer;
        assert!((BigInt::from(4) * x).mod_floor(&twelve).is_zero());
        assert!((BigInt::from(2) * x - BigInt::from(3) * y).mod_floor(&twelve).is_zero());
    }

    #[test]
    fn invariants_json() {
        let a: AbelianInvariants = "Z ⊕ Z/2".parse().unwrap();
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"rank":1,"torsion":[2]}"#);
        assert_eq!(serde_json::from_str::<AbelianInvariants>(&j).unwrap(), a);
    }
}
