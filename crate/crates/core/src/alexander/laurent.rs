use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Integer Laurent polynomial `Σ c_k t^k`, stored densely from the lowest
/// exponent. Leading and trailing coefficients are non-zero unless the
/// polynomial is zero, in which case `coeffs` is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c · t^e`
    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    /// `t^e`
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    /// Polynomial with `coeffs[k]` the coefficient of `t^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            *self = LaurentPoly { low: 0, coeffs: vec![] };
            return;
        }
        self.coeffs.drain(..lead_zeros);
        self.low += lead_zeros as i64;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Width of the exponent range; the degree of the normalized form.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        usize::try_from(e - self.low)
            .ok()
            .and_then(|k| self.coeffs.get(k).cloned())
            .unwrap_or_default()
    }

    /// Non-zero terms as `(exponent, coefficient)`, lowest first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// `p(t⁻¹)`
    pub fn reversed(&self) -> Self {
        match self.high_exponent() {
            None => Self::zero(),
            Some(high) => LaurentPoly { low: -high, coeffs: self.coeffs.iter().rev().cloned().collect() },
        }
    }

    /// Gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Canonical representative up to units `±t^k`: lowest exponent 0 and
    /// positive leading coefficient.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut p = self.shift(-self.low);
        if p.coeffs.last().is_some_and(Signed::is_negative) {
            p = -p;
        }
        p
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x / c).collect())
    }

    /// Exact quotient `self / d` in `Z[t, t⁻¹]`, or `None` if `d` does not
    /// divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = d.leading_coeff().expect("non-zero");
        let d_high = d.high_exponent().expect("non-zero");
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while !rem.is_zero() && rem.span() >= d.span() {
            let (q, r) = rem.leading_coeff().expect("non-zero").div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            let e = rem.high_exponent().expect("non-zero") - d_high;
            rem = &rem - &(d * &Self::monomial(q.clone(), e));
            quotient.push((e, q));
        }
        if !rem.is_zero() {
            return None;
        }
        Some(quotient.into_iter().fold(Self::zero(), |acc, (e, q)| &acc + &Self::monomial(q, e)))
    }

    /// Greatest common divisor up to units, in normalized form. Computed by
    /// primitive pseudo-remainder sequences on the shifted polynomials.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let content = self.content().gcd(&other.content());
        let mut a = primitive(&self.normalized());
        let mut b = primitive(&other.normalized());
        if a.span() < b.span() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_remainder(&a, &b);
            a = b;
            b = if r.is_zero() { r } else { primitive(&r.normalized()) };
        }
        a.scale(&content).normalized()
    }
}

fn primitive(p: &LaurentPoly) -> LaurentPoly {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        p.clone()
    } else {
        p.div_scalar_exact(&c)
    }
}

/// `lc(b)^(deg a − deg b + 1) · a mod b` for polynomials with lowest exponent 0.
fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let lead = b.leading_coeff().expect("non-zero").clone();
    let b_high = b.high_exponent().expect("non-zero");
    let mut r = a.clone();
    while !r.is_zero() && r.high_exponent().expect("non-zero") >= b_high {
        let e = r.high_exponent().expect("non-zero") - b_high;
        let c = r.leading_coeff().expect("non-zero").clone();
        r = &r.scale(&lead) - &(b * &LaurentPoly::monomial(c, e));
    }
    r
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exponent().max(rhs.high_exponent()).expect("non-zero");
        let coeffs = (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest power first: `t^2 - 3t + 1`, `5 - 2t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i64, &BigInt)> = self.terms().collect();
        for (k, (e, c)) in terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let show_mag = !mag.is_one() || *e == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot read Laurent polynomial from {0:?}")]
pub struct PolyParseError(pub String);

impl FromStr for LaurentPoly {
    type Err = PolyParseError;

    /// Reads sums of terms `c`, `c t`, `c t^e`, `t^e` with optional `*`
    /// between coefficient and `t`, as printed by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PolyParseError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..=bytes.len() {
            let boundary = i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
            if boundary {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        let mut acc = LaurentPoly::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, exp) = match body.find('t') {
                None => (body, 0),
                Some(pos) => {
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').and_then(|x| x.parse().ok()).ok_or_else(err)?
                    };
                    (&body[..pos], e)
                }
            };
            let mut c: BigInt = if coef.is_empty() { BigInt::one() } else { coef.parse().map_err(|_| err())? };
            if neg {
                c = -c;
            }
            acc = &acc + &LaurentPoly::monomial(c, exp);
        }
        Ok(acc)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
