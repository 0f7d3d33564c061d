//! Independent oracles shared by the integration tests and the acceptance
//! runner. The oracles never call into the engine's algorithms: finite
//! groups are handled as concrete permutation groups and Smith forms come
//! from determinants of minors. `props` drives the engine against them.
#![allow(dead_code)]

pub mod props;

use std::collections::{HashMap, HashSet, VecDeque};

use adorn::abelian::AbelianInvariants;
use adorn::fpgroup::{parse_presentation, GroupPresentation, Word};
use adorn::zoo::{direct_product_of, make};
use num_bigint::BigUint;

pub type Perm = Vec<usize>;

/// Right action: `(x · y)(i) = y(x(i))`, matching left-to-right words.
pub fn compose(x: &Perm, y: &Perm) -> Perm {
    x.iter().map(|&i| y[i]).collect()
}

pub fn invert(x: &Perm) -> Perm {
    let mut inv = vec![0; x.len()];
    for (i, &j) in x.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn cycles(n: usize, cs: &[&[usize]]) -> Perm {
    let mut p = identity(n);
    for c in cs {
        for k in 0..c.len() {
            p[c[k]] = c[(k + 1) % c.len()];
        }
    }
    p
}

/// A permutation group given by generators, with its elements listed.
#[derive(Debug, Clone)]
pub struct PermGroup {
    pub degree: usize,
    pub gens: Vec<Perm>,
    pub elements: HashSet<Perm>,
}

impl PermGroup {
    pub fn generated(degree: usize, gens: Vec<Perm>) -> Self {
        let id = identity(degree);
        let mut elements = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = compose(&x, g);
                if elements.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        PermGroup { degree, gens, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Normal closure in `self` of the commutators of its generators, which
    /// is the commutator subgroup.
    pub fn derived(&self) -> PermGroup {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                let c = compose(&compose(&invert(a), &invert(b)), &compose(a, b));
                if !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        let mut h = PermGroup::generated(self.degree, gens);
        'grow: loop {
            for s in &h.gens {
                for g in &self.gens {
                    let c = compose(&compose(&invert(g), s), g);
                    if !h.elements.contains(&c) {
                        let mut gens = h.gens.clone();
                        gens.push(c);
                        h = PermGroup::generated(self.degree, gens);
                        continue 'grow;
                    }
                }
            }
            return h;
        }
    }

    /// Invariants of `self / h` for a normal subgroup `h` with abelian
    /// quotient, read off from element orders in the quotient.
    pub fn abelian_quotient(&self, h: &PermGroup) -> AbelianInvariants {
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut orders = Vec::new();
        for g in &self.elements {
            if seen.contains(g) {
                continue;
            }
            for x in &h.elements {
                seen.insert(compose(g, x));
            }
            let mut k = 1;
            let mut pow = g.clone();
            while !h.elements.contains(&pow) {
                pow = compose(&pow, g);
                k += 1;
            }
            orders.push(k as u64);
        }
        invariants_from_orders(&orders)
    }
}

/// Invariant factors of a finite abelian group from the multiset of its
/// element orders.
pub fn invariants_from_orders(orders: &[u64]) -> AbelianInvariants {
    let n = orders.len() as u64;
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // Exponents of each p-primary cyclic factor, largest first.
    let mut parts: HashMap<u64, Vec<u32>> = HashMap::new();
    for &p in &primes {
        let count = |k: u32| orders.iter().filter(|&&o| p.pow(k) % o == 0).count() as u64;
        let mut at_least = Vec::new();
        let mut k = 1;
        loop {
            let ratio = count(k) / count(k - 1);
            if ratio == 1 {
                break;
            }
            at_least.push(ratio.ilog(p));
            k += 1;
        }
        let ncyc = at_least.first().copied().unwrap_or(0) as usize;
        let exps: Vec<u32> = (0..ncyc).map(|i| at_least.iter().filter(|&&c| c as usize > i).count() as u32).collect();
        parts.insert(p, exps);
    }
    let len = parts.values().map(Vec::len).max().unwrap_or(0);
    let mut torsion: Vec<BigUint> = (0..len)
        .map(|i| {
            parts
                .iter()
                .map(|(&p, e)| BigUint::from(p.pow(e.get(i).copied().unwrap_or(0))))
                .product()
        })
        .collect();
    torsion.reverse();
    AbelianInvariants { rank: 0, torsion }
}

/// Derived series of a finite permutation group: the quotients
/// `G^i / G^{i+1}` up to the first perfect term, and that term's depth.
pub fn oracle_series(g: &PermGroup) -> (Vec<AbelianInvariants>, usize) {
    let mut quotients = Vec::new();
    let mut cur = g.clone();
    loop {
        let next = cur.derived();
        let q = cur.abelian_quotient(&next);
        if next.order() == cur.order() {
            quotients.push(q);
            return (quotients.clone(), quotients.len() - 1);
        }
        quotients.push(q);
        cur = next;
    }
}

pub fn eval_word(w: &Word, gens: &[Perm], degree: usize) -> Perm {
    let mut x = identity(degree);
    for l in w.letters() {
        let g = &gens[l.generator()];
        x = if l.is_inverse() { compose(&x, &invert(g)) } else { compose(&x, g) };
    }
    x
}

/// A finite presentation together with a permutation model of it.
#[derive(Debug, Clone)]
pub struct FiniteModel {
    pub name: String,
    pub presentation: GroupPresentation,
    pub degree: usize,
    pub images: Vec<Perm>,
    /// Known group order, checked against the model.
    pub order: usize,
}

impl FiniteModel {
    pub fn group(&self) -> PermGroup {
        PermGroup::generated(self.degree, self.images.clone())
    }

    /// The model is a homomorphism onto a group of the stated order.
    pub fn is_valid(&self) -> bool {
        let id = identity(self.degree);
        self.presentation.relators().iter().all(|r| eval_word(r, &self.images, self.degree) == id)
            && self.group().order() == self.order
    }

    pub fn product(&self, other: &FiniteModel) -> FiniteModel {
        let d = self.degree + other.degree;
        let mut images: Vec<Perm> = self.images.iter().map(|g| g.iter().copied().chain(self.degree..d).collect()).collect();
        images.extend(other.images.iter().map(|g| (0..self.degree).chain(g.iter().map(|&i| i + self.degree)).collect()));
        FiniteModel {
            name: format!("{} x {}", self.name, other.name),
            presentation: direct_product_of(&self.presentation, &other.presentation),
            degree: d,
            images,
            order: self.order * other.order,
        }
    }
}

fn model(name: &str, p: GroupPresentation, degree: usize, images: Vec<Perm>, order: usize) -> FiniteModel {
    FiniteModel { name: name.into(), presentation: p, degree, images, order }
}

/// Reflections `i ↦ −i` and `i ↦ 1 − i` of the n-gon.
fn dihedral_images(n: usize) -> Vec<Perm> {
    vec![(0..n).map(|i| (n - i) % n).collect(), (0..n).map(|i| (n + 1 - i) % n).collect()]
}

/// Right-regular action of `i` and `j` on the unit quaternions
/// `±1, ±i, ±j, ±k`, indexed `unit + 4·sign`.
fn quaternion_images() -> Vec<Perm> {
    // unit products: table[a][b] = (sign, unit) for a·b with units 1,i,j,k.
    const T: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let right = |a: usize| -> Perm {
        (0..8)
            .map(|x| {
                let (s, u) = T[x % 4][a];
                u + 4 * ((s + x / 4) % 2)
            })
            .collect()
    };
    vec![right(1), right(2)]
}

/// Finite groups with hand-built permutation models.
pub fn finite_models() -> Vec<FiniteModel> {
    let z = |s: &str| parse_presentation(s).unwrap();
    let mut out = vec![
        model("trivial", GroupPresentation::trivial(), 1, vec![], 1),
        model("Z/2", make("cyclic", &[2]).unwrap(), 2, vec![cycles(2, &[&[0, 1]])], 2),
        model("Z/5", make("cyclic", &[5]).unwrap(), 5, vec![cycles(5, &[&[0, 1, 2, 3, 4]])], 5),
        model(
            "Z/2 x Z/3",
            make("direct_product", &[2, 3]).unwrap(),
            5,
            vec![cycles(5, &[&[0, 1]]), cycles(5, &[&[2, 3, 4]])],
            6,
        ),
        model("S3", z("< a, b | a^2, b^2, (a b)^3 >"), 3, vec![cycles(3, &[&[0, 1]]), cycles(3, &[&[1, 2]])], 6),
        model("Q8", make("quaternion", &[]).unwrap(), 8, quaternion_images(), 8),
        model(
            "A4",
            make("triangle", &[2, 3, 3]).unwrap(),
            4,
            vec![cycles(4, &[&[0, 1], &[2, 3]]), cycles(4, &[&[0, 1, 2]])],
            12,
        ),
        model("S4", make("symmetric", &[4]).unwrap(), 4, (0..3).map(|i| cycles(4, &[&[i, i + 1]])).collect(), 24),
        model(
            "triangle(2,3,4)",
            make("triangle", &[2, 3, 4]).unwrap(),
            4,
            vec![cycles(4, &[&[0, 1]]), cycles(4, &[&[1, 2, 3]])],
            24,
        ),
        model(
            "A5",
            make("triangle", &[2, 3, 5]).unwrap(),
            5,
            vec![cycles(5, &[&[0, 1], &[2, 3]]), cycles(5, &[&[0, 2, 4]])],
            60,
        ),
        model(
            "S5",
            z("< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3 >"),
            5,
            vec![cycles(5, &[&[0, 1]]), cycles(5, &[&[0, 1, 2, 3, 4]])],
            120,
        ),
    ];
    for n in 3..=6 {
        out.push(model(&format!("D{n}"), make("dihedral", &[n]).unwrap(), n as usize, dihedral_images(n as usize), 2 * n as usize));
    }
    out
}

/// Exact integer determinant by cofactor expansion (small matrices only).
pub fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Non-zero Smith diagonal as quotients `d_k / d_{k−1}` of the gcds of
/// `k × k` minors.
pub fn minor_gcd_diagonal(m: &[Vec<i64>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}
