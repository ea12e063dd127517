//! Prime fields with a canonical generator and a complete discrete-log table.

use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::CycloTower;
use crate::error::{Error, Result};

/// The prime field `F_p` for an odd prime `p`.
///
/// Elements are plain `u64` residues in `0..p`. The generator is the
/// smallest primitive root, and `log[a]` satisfies `g^log[a] = a` for every
/// nonzero `a`. The field also owns the cyclotomic tower for `p - 1`, in
/// which every character value over the field lives.
pub struct PrimeField {
    p: u64,
    g: u64,
    log: Vec<u32>,
    pow: Vec<u32>,
    tower: Arc<CycloTower>,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrimeField").field("p", &self.p).field("g", &self.g).finish()
    }
}

impl PartialEq for PrimeField {
    fn eq(&self, other: &PrimeField) -> bool {
        self.p == other.p
    }
}

impl Eq for PrimeField {}

/// Deterministic trial division; the fields used here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField> {
        if p < 3 || !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotAnOddPrime(p));
        }
        let order = p - 1;
        let factors = prime_factors(order);
        let g = (2..p)
            .find(|&c| factors.iter().all(|&q| pow_mod(c, order / q, p) != 1))
            .expect("every prime has a primitive root");
        let mut log = vec![0u32; p as usize];
        let mut pow = vec![0u32; order as usize];
        let mut x = 1u64;
        for k in 0..order {
            pow[k as usize] = x as u32;
            log[x as usize] = k as u32;
            x = x * g % p;
        }
        debug_assert_eq!(x, 1);
        Ok(PrimeField { p, g, log, pow, tower: CycloTower::new(order) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Order of the multiplicative group, `p - 1`.
    pub fn order(&self) -> u64 {
        self.p - 1
    }

    /// The canonical generator: the smallest primitive root.
    pub fn generator(&self) -> u64 {
        self.g
    }

    pub(crate) fn tower(&self) -> &Arc<CycloTower> {
        &self.tower
    }

    pub fn dlog(&self, a: u64) -> Result<u64> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::ZeroHasNoLog);
        }
        Ok(self.log[a as usize] as u64)
    }

    /// Discrete log without the zero check; `a` must be a nonzero residue.
    #[inline]
    pub(crate) fn log_unchecked(&self, a: u64) -> u64 {
        debug_assert!(a != 0 && a < self.p);
        self.log[a as usize] as u64
    }

    /// `g^k`.
    #[inline]
    pub fn gen_pow(&self, k: u64) -> u64 {
        self.pow[(k % self.order()) as usize] as u64
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        let k = self.log[a as usize] as u64;
        Some(self.gen_pow(self.order() - k))
    }

    /// `a / b`, with `None` when `b = 0`.
    pub fn div(&self, a: u64, b: u64) -> Option<u64> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a / b` extended by `x / 0 = 0`. Character values at the resulting
    /// point are then `0` except for the trivial character, so callers must
    /// only use this where the printed formula multiplies the term by a
    /// vanishing factor.
    pub(crate) fn div_or_zero(&self, a: u64, b: u64) -> u64 {
        self.div(a, b).unwrap_or(0)
    }

    /// The residue of the rational number `num / den`.
    pub fn rational(&self, num: i64, den: i64) -> Result<u64> {
        let d = self.reduce(den);
        let inv = self.inv(d).ok_or(Error::BadDenominator { den, p: self.p })?;
        Ok(self.mul(self.reduce(num), inv))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u64) -> Result<u64> {
        let k = self.dlog(a)?;
        Ok(self.order() / num_integer::gcd(k, self.order()))
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}
