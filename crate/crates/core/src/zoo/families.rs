use crate::fpgroup::{GroupPresentation, Word};

use super::ZooError;

/// A named family of presentations and the parameters it takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Family {
    pub name: &'static str,
    pub params: &'static str,
    pub summary: &'static str,
}

pub const FAMILIES: &[Family] = &[
    Family { name: "trivial", params: "", summary: "the trivial group < | >" },
    Family { name: "free", params: "n", summary: "free group of rank n" },
    Family { name: "cyclic", params: "n", summary: "Z/n, or Z when n = 0" },
    Family { name: "dihedral_inf", params: "", summary: "Z/2 * Z/2" },
    Family { name: "dihedral", params: "n", summary: "dihedral group of order 2n" },
    Family { name: "free_product", params: "p,q", summary: "Z/p * Z/q (0 means Z)" },
    Family { name: "direct_product", params: "p,q", summary: "Z/p × Z/q (0 means Z)" },
    Family { name: "braid", params: "n", summary: "Artin braid group on n strands" },
    Family { name: "torus_knot", params: "p,q", summary: "< x, y | x^p y^-q >" },
    Family { name: "sl2z", params: "", summary: "SL(2,Z) = < a, b | a^4, a^2 b^-3 >" },
    Family { name: "triangle", params: "p,q,r", summary: "< a, b | a^p, b^q, (a b)^r >" },
    Family { name: "surface", params: "g", summary: "closed orientable surface of genus g" },
    Family { name: "klein_bottle", params: "", summary: "< a, b | a b a b^-1 >" },
    Family { name: "fuchsian", params: "g,p1,...,pn", summary: "orbifold group of a genus g surface with cone points" },
    Family { name: "baumslag_solitar", params: "m,n", summary: "< a, b | b a^m b^-1 = a^n >" },
    Family { name: "trefoil", params: "", summary: "trefoil knot group" },
    Family { name: "figure_eight", params: "", summary: "figure-eight knot group" },
    Family { name: "sl3z", params: "", summary: "SL(3,Z) by Steinberg relations" },
    Family { name: "symmetric", params: "n", summary: "symmetric group by Coxeter relations" },
    Family { name: "quaternion", params: "", summary: "quaternion group of order 8" },
];

/// Builds the standard presentation of a family member.
pub fn make(family: &str, params: &[i64]) -> Result<GroupPresentation, ZooError> {
    let arity = |n: usize| -> Result<(), ZooError> {
        if params.len() == n {
            Ok(())
        } else {
            Err(ZooError::Arity { family: family.to_string(), expected: n, found: params.len() })
        }
    };
    let p = |i: usize, min: i64| -> Result<usize, ZooError> {
        let v = params[i];
        if v < min {
            return Err(ZooError::InvalidParameter { family: family.to_string(), detail: format!("parameter {} = {v} must be ≥ {min}", i + 1) });
        }
        Ok(v as usize)
    };
    let label = if params.is_empty() {
        family.to_string()
    } else {
        format!("{family}({})", params.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
    };
    let g = match family {
        "trivial" => {
            arity(0)?;
            GroupPresentation::trivial()
        }
        "free" => {
            arity(1)?;
            GroupPresentation::free(p(0, 0)?)
        }
        "cyclic" => {
            arity(1)?;
            cyclic(p(0, 0)?)
        }
        "dihedral_inf" => {
            arity(0)?;
            build(&["a", "b"], &[&[(0, 2)], &[(1, 2)]])
        }
        "dihedral" => {
            arity(1)?;
            let n = p(0, 1)? as i64;
            build(&["a", "b"], &[&[(0, 2)], &[(1, 2)], &[(0, 1), (1, 1)].repeat(n as usize)])
        }
        "free_product" => {
            arity(2)?;
            free_product_of(&cyclic(p(0, 0)?), &cyclic(p(1, 0)?))
        }
        "direct_product" => {
            arity(2)?;
            direct_product_of(&cyclic(p(0, 0)?), &cyclic(p(1, 0)?))
        }
        "braid" => {
            arity(1)?;
            braid(p(0, 1)?)
        }
        "torus_knot" => {
            arity(2)?;
            let (a, b) = (p(0, 1)? as i64, p(1, 1)? as i64);
            build(&["x", "y"], &[&[(0, a), (1, -b)]])
        }
        "sl2z" => {
            arity(0)?;
            build(&["a", "b"], &[&[(0, 4)], &[(0, 2), (1, -3)]])
        }
        "triangle" => {
            arity(3)?;
            let (a, b, c) = (p(0, 1)? as i64, p(1, 1)? as i64, p(2, 1)?);
            build(&["a", "b"], &[&[(0, a)], &[(1, b)], &[(0, 1), (1, 1)].repeat(c)])
        }
        "surface" => {
            arity(1)?;
            fuchsian(p(0, 0)?, &[])
        }
        "klein_bottle" => {
            arity(0)?;
            build(&["a", "b"], &[&[(0, 1), (1, 1), (0, 1), (1, -1)]])
        }
        "fuchsian" => {
            if params.is_empty() {
                return Err(ZooError::Arity { family: family.into(), expected: 1, found: 0 });
            }
            let genus = p(0, 0)?;
            let cones = (1..params.len()).map(|i| p(i, 2)).collect::<Result<Vec<_>, _>>()?;
            fuchsian(genus, &cones)
        }
        "baumslag_solitar" => {
            arity(2)?;
            let (m, n) = (params[0], params[1]);
            if m == 0 || n == 0 {
                return Err(ZooError::InvalidParameter { family: family.into(), detail: "m and n must be non-zero".into() });
            }
            build(&["a", "b"], &[&[(1, 1), (0, m), (1, -1), (0, -n)]])
        }
        "trefoil" => {
            arity(0)?;
            build(&["a", "b"], &[&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]])
        }
        "figure_eight" => {
            arity(0)?;
            // y x y⁻¹ x y = x y x⁻¹ y x
            build(
                &["x", "y"],
                &[&[(1, 1), (0, 1), (1, -1), (0, 1), (1, 1), (0, -1), (1, -1), (0, 1), (1, -1), (0, -1)]],
            )
        }
        "sl3z" => {
            arity(0)?;
            sl3z()
        }
        "symmetric" => {
            arity(1)?;
            symmetric(p(0, 1)?)
        }
        "quaternion" => {
            arity(0)?;
            build(&["a", "b"], &[&[(0, 4)], &[(0, 2), (1, -2)], &[(1, -1), (0, 1), (1, 1), (0, 1)]])
        }
        _ => return Err(ZooError::UnknownFamily(family.to_string())),
    };
    Ok(g.with_name(label))
}

fn build(names: &[&str], relators: &[&[(usize, i64)]]) -> GroupPresentation {
    GroupPresentation::new(
        "",
        names.iter().map(|s| s.to_string()).collect(),
        relators.iter().map(|r| Word::from_syllables(r)).collect(),
    )
    .expect("well-formed family presentation")
}

fn named(prefix: &str, n: usize, relators: Vec<Word>) -> GroupPresentation {
    GroupPresentation::new("", (1..=n).map(|i| format!("{prefix}{i}")).collect(), relators)
        .expect("well-formed family presentation")
}

/// `Z/n`, or `Z` for `n = 0`.
pub fn cyclic(n: usize) -> GroupPresentation {
    let relators = if n == 0 { vec![] } else { vec![Word::from_syllables(&[(0, n as i64)])] };
    GroupPresentation::new(format!("cyclic({n})"), vec!["a".into()], relators).expect("valid")
}

/// Artin presentation on generators `s1, …, s(n−1)`.
pub fn braid(n: usize) -> GroupPresentation {
    let k = n.saturating_sub(1);
    let mut rels = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (Word::generator(i), Word::generator(j));
            if j == i + 1 {
                // s_i s_j s_i = s_j s_i s_j
                let lhs = a.mul(&b).mul(&a);
                let rhs = b.mul(&a).mul(&b);
                rels.push(lhs.mul(&rhs.inverse()));
            } else {
                rels.push(Word::commutator(&a, &b));
            }
        }
    }
    named("s", k, rels)
}

/// `< a1, b1, …, ag, bg, x1, …, xn | x1^p1, …, xn^pn, [a1,b1]⋯[ag,bg] x1⋯xn >`.
pub fn fuchsian(genus: usize, cones: &[usize]) -> GroupPresentation {
    let mut names = Vec::new();
    for j in 1..=genus {
        names.push(format!("a{j}"));
        names.push(format!("b{j}"));
    }
    names.extend((1..=cones.len()).map(|i| format!("x{i}")));
    let mut rels: Vec<Word> = cones
        .iter()
        .enumerate()
        .map(|(i, &p)| Word::from_syllables(&[(2 * genus + i, p as i64)]))
        .collect();
    let mut long = Word::empty();
    for j in 0..genus {
        long = long.mul(&Word::commutator(&Word::generator(2 * j), &Word::generator(2 * j + 1)));
    }
    for i in 0..cones.len() {
        long = long.mul(&Word::generator(2 * genus + i));
    }
    rels.push(long);
    GroupPresentation::new("", names, rels).expect("valid")
}

/// Coxeter presentation of `S_n` on adjacent transpositions `s1, …, s(n−1)`.
pub fn symmetric(n: usize) -> GroupPresentation {
    let k = n.saturating_sub(1);
    let mut rels = Vec::new();
    for i in 0..k {
        rels.push(Word::from_syllables(&[(i, 2)]));
        for j in i + 1..k {
            let m = if j == i + 1 { 3 } else { 2 };
            rels.push(Word::from_syllables(&[(i, 1), (j, 1)]).pow(m));
        }
    }
    named("s", k, rels)
}

/// Steinberg presentation of `SL(3, Z)` on elementary matrices `e_ij`.
pub fn sl3z() -> GroupPresentation {
    let pairs: Vec<(usize, usize)> = (1..=3).flat_map(|i| (1..=3).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let idx = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("off-diagonal");
    let mut rels = Vec::new();
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let c = Word::commutator(&Word::generator(idx(i, j)), &Word::generator(idx(k, l)));
            if j == k && i != l {
                // [e_ij, e_jl] = e_il
                rels.push(c.mul(&Word::generator(idx(i, l)).inverse()));
            } else if j != k && i != l && (i, j) < (k, l) {
                rels.push(c);
            }
        }
    }
    let (e12, e21) = (Word::generator(idx(1, 2)), Word::generator(idx(2, 1)));
    rels.push(e12.mul(&e21.inverse()).mul(&e12).pow(4));
    let names = pairs.iter().map(|(i, j)| format!("e{i}{j}")).collect();
    GroupPresentation::new("", names, rels).expect("valid")
}

/// Renames generators so the two lists are disjoint: clashes get a `_1`
/// or `_2` suffix on the respective side.
fn disjoint_names(a: &GroupPresentation, b: &GroupPresentation) -> Vec<String> {
    let clash = |n: &String, other: &GroupPresentation| other.generator_names().contains(n);
    let left = a.generator_names().iter().map(|n| if clash(n, b) { format!("{n}_1") } else { n.clone() });
    let right = b.generator_names().iter().map(|n| if clash(n, a) { format!("{n}_2") } else { n.clone() });
    left.chain(right).collect()
}

fn shifted(b: &GroupPresentation, offset: usize) -> Vec<Word> {
    b.relators().iter().map(|r| r.map_generators(|g| g + offset)).collect()
}

/// `A * B` on the disjoint union of generators.
pub fn free_product_of(a: &GroupPresentation, b: &GroupPresentation) -> GroupPresentation {
    let mut rels = a.relators().to_vec();
    rels.extend(shifted(b, a.n_generators()));
    GroupPresentation::new(format!("{} * {}", a.name(), b.name()), disjoint_names(a, b), rels).expect("valid")
}

/// `A × B`: the free product plus commutators of all cross pairs.
pub fn direct_product_of(a: &GroupPresentation, b: &GroupPresentation) -> GroupPresentation {
    let mut rels = a.relators().to_vec();
    rels.extend(shifted(b, a.n_generators()));
    for i in 0..a.n_generators() {
        for j in 0..b.n_generators() {
            rels.push(Word::commutator(&Word::generator(i), &Word::generator(a.n_generators() + j)));
        }
    }
    GroupPresentation::new(format!("{} x {}", a.name(), b.name()), disjoint_names(a, b), rels).expect("valid")
}
