//! Exact arithmetic in the cyclotomic integers `Z[ζ_n]`.
//!
//! A [`CycValue`] is stored as its coefficient vector in the power basis
//! `1, ζ_n, …, ζ_n^{φ(n)-1}`, i.e. as a polynomial reduced modulo the n-th
//! cyclotomic polynomial `Φ_n`. Values at different levels `m` and `n` are
//! combined in `Z[ζ_lcm(m,n)]` through the embedding `ζ_m ↦ ζ_L^{L/m}`.
//!
//! Cyclotomic polynomials are precomputed for every divisor of a base level
//! in a [`CycloTower`]. A prime field owns the tower for `p - 1`, so every
//! character-sum value produced over that field shares it and no polynomial
//! is ever rebuilt in a hot loop.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Cyclotomic polynomials `Φ_d` for every divisor `d` of a base level.
#[derive(Debug)]
pub struct CycloTower {
    base: u64,
    /// Sorted divisors of `base`, paired with the monic coefficient vector
    /// of `Φ_d` (constant term first).
    rings: Vec<(u64, Vec<i64>)>,
}

impl CycloTower {
    pub fn new(base: u64) -> Arc<Self> {
        assert!(base > 0, "cyclotomic level must be positive");
        let divisors = divisors(base);
        let rings = divisors.iter().map(|&d| (d, cyclotomic_polynomial(d))).collect();
        Arc::new(CycloTower { base, rings })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// `Φ_level`, monic, constant term first. Panics if `level ∤ base`.
    pub fn phi(&self, level: u64) -> &[i64] {
        match self.rings.binary_search_by_key(&level, |(d, _)| *d) {
            Ok(i) => &self.rings[i].1,
            Err(_) => panic!("level {level} does not divide tower base {}", self.base),
        }
    }

    pub fn degree(&self, level: u64) -> usize {
        self.phi(level).len() - 1
    }

    pub fn contains(&self, level: u64) -> bool {
        self.base % level == 0
    }

    /// Reduces an arbitrary integer polynomial modulo `Φ_level`.
    fn reduce(&self, level: u64, mut poly: Vec<i64>) -> Vec<i64> {
        let phi = self.phi(level);
        let deg = phi.len() - 1;
        if poly.len() > deg {
            for k in (deg..poly.len()).rev() {
                let c = poly[k];
                if c == 0 {
                    continue;
                }
                let shift = k - deg;
                for (i, &f) in phi[..deg].iter().enumerate() {
                    poly[shift + i] -= c * f;
                }
                poly[k] = 0;
            }
        }
        poly.resize(deg, 0);
        poly
    }
}

/// All positive divisors of `n`, ascending.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mobius(mut n: u64) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `Φ_n = ∏_{d | n} (x^d - 1)^{μ(n/d)}`, multiplying first and then dividing
/// out the factors with negative exponent exactly.
fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut poly = vec![1i64];
    let ds = divisors(n);
    for &d in &ds {
        if mobius(n / d) == 1 {
            let d = d as usize;
            let mut next = vec![0i64; poly.len() + d];
            for (k, &c) in poly.iter().enumerate() {
                next[k + d] += c;
                next[k] -= c;
            }
            poly = next;
        }
    }
    for &d in &ds {
        if mobius(n / d) == -1 {
            // poly = q * (x^d - 1)  =>  q[k] = q[k - d] - poly[k]
            let d = d as usize;
            let qlen = poly.len() - d;
            let mut q = vec![0i64; qlen];
            for k in 0..qlen {
                q[k] = if k >= d { q[k - d] } else { 0 } - poly[k];
            }
            poly = q;
        }
    }
    // (x^d - 1) factors carry a sign (-1)^{#factors}; Φ_n is monic.
    if poly.last().copied() == Some(-1) {
        for c in &mut poly {
            *c = -*c;
        }
    }
    debug_assert_eq!(poly.last().copied(), Some(1));
    poly
}

/// Exact element of `Z[ζ_n]`.
#[derive(Clone)]
pub struct CycValue {
    tower: Arc<CycloTower>,
    level: u64,
    coeffs: Vec<i64>,
}

impl CycValue {
    /// Builds a value from any integer polynomial in `ζ_level`; the input is
    /// reduced modulo `Φ_level`.
    pub fn from_coeffs(level: u64, coeffs: Vec<i64>) -> CycValue {
        Self::in_tower(&CycloTower::new(level), level, coeffs)
    }

    pub(crate) fn in_tower(tower: &Arc<CycloTower>, level: u64, coeffs: Vec<i64>) -> CycValue {
        let coeffs = tower.reduce(level, coeffs);
        CycValue { tower: Arc::clone(tower), level, coeffs }
    }

    /// Folds a table of exponent multiplicities at the tower base into a
    /// value at `level`. Entry `e` stands for `counts[e] · ζ_base^e`; every
    /// nonzero entry must be a multiple of `base / level`.
    pub(crate) fn from_exponent_counts(tower: &Arc<CycloTower>, counts: &[i64], level: u64) -> CycValue {
        let base = tower.base();
        debug_assert_eq!(counts.len() as u64, base);
        let step = (base / level) as usize;
        let mut poly = vec![0i64; level as usize];
        for (e, &c) in counts.iter().enumerate() {
            if c != 0 {
                debug_assert_eq!(e % step, 0, "exponent {e} does not live at level {level}");
                poly[e / step] += c;
            }
        }
        Self::in_tower(tower, level, poly)
    }

    pub fn integer(n: i64) -> CycValue {
        CycValue::from_coeffs(1, vec![n])
    }

    pub(crate) fn integer_in(tower: &Arc<CycloTower>, n: i64) -> CycValue {
        CycValue { tower: Arc::clone(tower), level: 1, coeffs: vec![n] }
    }

    pub fn zero() -> CycValue {
        CycValue::integer(0)
    }

    pub fn one() -> CycValue {
        CycValue::integer(1)
    }

    /// `ζ_level^k`.
    pub fn root_of_unity(level: u64, k: i64) -> CycValue {
        Self::root_in(&CycloTower::new(level), level, k)
    }

    pub(crate) fn root_in(tower: &Arc<CycloTower>, level: u64, k: i64) -> CycValue {
        let e = k.rem_euclid(level as i64) as usize;
        let mut poly = vec![0i64; e + 1];
        poly[e] = 1;
        Self::in_tower(tower, level, poly)
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Coefficients in the basis `1, ζ, …, ζ^{φ(n)-1}`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `Some(n)` when the value is the rational integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        match self.coeffs.split_first() {
            None => Some(0),
            Some((&c0, rest)) if rest.iter().all(|&c| c == 0) => Some(c0),
            _ => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.as_integer().is_some()
    }

    /// Image under `ζ_level ↦ ζ_target^{target/level}`. `None` unless
    /// `level | target`.
    pub fn embed(&self, target: u64) -> Option<CycValue> {
        if target % self.level != 0 {
            return None;
        }
        let tower = if self.tower.contains(target) {
            Arc::clone(&self.tower)
        } else {
            CycloTower::new(self.tower.base().lcm(&target))
        };
        Some(self.embed_in(&tower, target))
    }

    fn embed_in(&self, tower: &Arc<CycloTower>, target: u64) -> CycValue {
        if target == self.level && Arc::ptr_eq(tower, &self.tower) {
            return self.clone();
        }
        let step = (target / self.level) as usize;
        let mut poly = vec![0i64; (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c;
        }
        Self::in_tower(tower, target, poly)
    }

    /// Brings two values to a common level in a shared tower.
    fn align(&self, other: &CycValue) -> (CycValue, CycValue) {
        if self.level == other.level && Arc::ptr_eq(&self.tower, &other.tower) {
            return (self.clone(), other.clone());
        }
        let level = self.level.lcm(&other.level);
        let tower = if self.tower.contains(level) {
            Arc::clone(&self.tower)
        } else if other.tower.contains(level) {
            Arc::clone(&other.tower)
        } else {
            CycloTower::new(self.tower.base().lcm(&other.tower.base()))
        };
        (self.embed_in(&tower, level), other.embed_in(&tower, level))
    }

    /// `self / k` when every coefficient is divisible by `k`. Exact because
    /// the power basis is a Z-basis of `Z[ζ_n]`.
    pub fn div_exact(&self, k: i64) -> Option<CycValue> {
        if k == 0 || self.coeffs.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(CycValue {
            tower: Arc::clone(&self.tower),
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c / k).collect(),
        })
    }

    /// Coefficients as a length-`level` representative in `Z[x]/(x^level - 1)`.
    pub(crate) fn cyclic(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.level as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k] += c;
        }
        out
    }

    pub(crate) fn from_cyclic(tower: &Arc<CycloTower>, level: u64, poly: Vec<i64>) -> CycValue {
        Self::in_tower(tower, level, poly)
    }

    pub fn scale(&self, k: i64) -> CycValue {
        CycValue {
            tower: Arc::clone(&self.tower),
            level: self.level,
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    fn add_ref(&self, other: &CycValue, sign: i64) -> CycValue {
        let (mut a, b) = if self.level == other.level && Arc::ptr_eq(&self.tower, &other.tower) {
            (self.clone(), std::borrow::Cow::Borrowed(other))
        } else {
            let (a, b) = self.align(other);
            (a, std::borrow::Cow::Owned(b))
        };
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += sign * y;
        }
        a
    }

    fn mul_ref(&self, other: &CycValue) -> CycValue {
        let (a, b) = self.align(other);
        let n = a.coeffs.len();
        if n == 1 {
            return CycValue { tower: a.tower, level: a.level, coeffs: vec![a.coeffs[0] * b.coeffs[0]] };
        }
        let mut prod = vec![0i64; 2 * n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        CycValue::in_tower(&a.tower, a.level, prod)
    }
}

impl PartialEq for CycValue {
    fn eq(&self, other: &CycValue) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.align(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycValue {}

impl fmt::Debug for CycValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycValue({self})")
    }
}

impl fmt::Display for CycValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let mag = c.unsigned_abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z{}", self.level)?;
                    } else {
                        write!(f, "z{}^{k}", self.level)?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&CycValue> for &CycValue {
            type Output = CycValue;
            fn $method(self, rhs: &CycValue) -> CycValue {
                $body(self, rhs)
            }
        }
        impl $trait<CycValue> for CycValue {
            type Output = CycValue;
            fn $method(self, rhs: CycValue) -> CycValue {
                $body(&self, &rhs)
            }
        }
        impl $trait<&CycValue> for CycValue {
            type Output = CycValue;
            fn $method(self, rhs: &CycValue) -> CycValue {
                $body(&self, rhs)
            }
        }
        impl $trait<CycValue> for &CycValue {
            type Output = CycValue;
            fn $method(self, rhs: CycValue) -> CycValue {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycValue, b: &CycValue| a.add_ref(b, 1));
forward_binop!(Sub, sub, |a: &CycValue, b: &CycValue| a.add_ref(b, -1));
forward_binop!(Mul, mul, |a: &CycValue, b: &CycValue| a.mul_ref(b));

impl Mul<i64> for &CycValue {
    type Output = CycValue;
    fn mul(self, k: i64) -> CycValue {
        self.scale(k)
    }
}

impl Mul<i64> for CycValue {
    type Output = CycValue;
    fn mul(self, k: i64) -> CycValue {
        self.scale(k)
    }
}

impl AddAssign<&CycValue> for CycValue {
    fn add_assign(&mut self, rhs: &CycValue) {
        if self.level == rhs.level && Arc::ptr_eq(&self.tower, &rhs.tower) {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = self.add_ref(rhs, 1);
        }
    }
}

impl SubAssign<&CycValue> for CycValue {
    fn sub_assign(&mut self, rhs: &CycValue) {
        if self.level == rhs.level && Arc::ptr_eq(&self.tower, &rhs.tower) {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = self.add_ref(rhs, -1);
        }
    }
}

impl Neg for CycValue {
    type Output = CycValue;
    fn neg(self) -> CycValue {
        self.scale(-1)
    }
}

impl Neg for &CycValue {
    type Output = CycValue;
    fn neg(self) -> CycValue {
        self.scale(-1)
    }
}

impl std::iter::Sum for CycValue {
    fn sum<I: Iterator<Item = CycValue>>(iter: I) -> CycValue {
        iter.fold(CycValue::zero(), |acc, v| acc + v)
    }
}

#[derive(Serialize, Deserialize)]
struct CycValueRepr {
    level: u64,
    coeffs: Vec<i64>,
}

impl Serialize for CycValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycValueRepr { level: self.level, coeffs: self.coeffs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<CycValue, D::Error> {
        let repr = CycValueRepr::deserialize(d)?;
        if repr.level == 0 {
            return Err(serde::de::Error::custom("cyclotomic level must be positive"));
        }
        Ok(CycValue::from_coeffs(repr.level, repr.coeffs))
    }
}

/// A quotient `num / den` of cyclotomic integers. Never divided out:
/// equality is decided by cross-multiplication in the integral domain.
#[derive(Clone, Debug, Serialize)]
pub struct CycFraction {
    num: CycValue,
    den: CycValue,
}

impl CycFraction {
    pub fn new(num: CycValue, den: CycValue) -> Result<CycFraction> {
        if den.is_zero() {
            return Err(Error::ZeroNormalizer);
        }
        Ok(CycFraction { num, den })
    }

    pub fn from_value(v: CycValue) -> CycFraction {
        CycFraction { num: v, den: CycValue::one() }
    }

    pub fn numerator(&self) -> &CycValue {
        &self.num
    }

    pub fn denominator(&self) -> &CycValue {
        &self.den
    }

    /// Multiplies the fraction by a value.
    pub fn times(&self, v: &CycValue) -> CycFraction {
        CycFraction { num: &self.num * v, den: self.den.clone() }
    }

    /// Divides by a nonzero value.
    pub fn over(&self, v: &CycValue) -> Result<CycFraction> {
        CycFraction::new(self.num.clone(), &self.den * v)
    }

    pub fn mul(&self, other: &CycFraction) -> CycFraction {
        CycFraction { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn add(&self, other: &CycFraction) -> CycFraction {
        CycFraction {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl PartialEq for CycFraction {
    fn eq(&self, other: &CycFraction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for CycFraction {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
        assert_eq!(cyclotomic_polynomial(105).len() - 1, 48);
    }

    #[test]
    fn phi_degree_is_totient() {
        for n in 1..200u64 {
            let totient = (1..=n).filter(|k| k.gcd(&n) == 1).count();
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient, "n = {n}");
        }
    }

    #[test]
    fn roots_of_unity_multiply() {
        let z = CycValue::root_of_unity(6, 1);
        let mut acc = CycValue::one();
        for _ in 0..6 {
            acc = &acc * &z;
        }
        assert_eq!(acc, CycValue::one());
        // 1 + ζ_3 + ζ_3^2 = 0
        let w = CycValue::root_of_unity(3, 1);
        assert!((CycValue::one() + &w + &w * &w).is_zero());
    }

    #[test]
    fn embedding_coherence() {
        // ζ_3 is ζ_6^2 and ζ_2 = -1.
        assert_eq!(CycValue::root_of_unity(3, 1), CycValue::root_of_unity(6, 2));
        assert_eq!(CycValue::root_of_unity(2, 1), CycValue::integer(-1));
        assert_eq!(CycValue::root_of_unity(4, 2), CycValue::integer(-1));
        let x = CycValue::from_coeffs(3, vec![2, -5]);
        let y = x.embed(12).unwrap();
        assert_eq!(y.level(), 12);
        assert_eq!(x, y);
        assert!(x.embed(10).is_none());
    }

    #[test]
    fn mixed_level_arithmetic() {
        // i * ζ_3 lives at level 12.
        let i = CycValue::root_of_unity(4, 1);
        let w = CycValue::root_of_unity(3, 1);
        let prod = &i * &w;
        assert_eq!(prod.level(), 12);
        assert_eq!(prod, CycValue::root_of_unity(12, 7));
    }

    #[test]
    fn integer_detection() {
        assert_eq!(CycValue::integer(7).as_integer(), Some(7));
        let w = CycValue::root_of_unity(3, 1);
        assert_eq!(w.as_integer(), None);
        // ζ_3 + ζ_3^2 = -1
        assert_eq!((&w + &w * &w).as_integer(), Some(-1));
    }

    #[test]
    fn fraction_cross_multiplication() {
        let a = CycFraction::new(CycValue::integer(2), CycValue::integer(4)).unwrap();
        let b = CycFraction::new(CycValue::integer(-3), CycValue::integer(-6)).unwrap();
        assert_eq!(a, b);
        assert!(CycFraction::new(CycValue::one(), CycValue::zero()).is_err());
    }

    #[test]
    fn serde_shape() {
        let v = CycValue::from_coeffs(6, vec![1, 2]);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"level":6,"coeffs":[1,2]}"#);
        let back: CycValue = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
