//! Multiplicative characters of `F_p^×`, extended by `χ(0) = 0`.

use std::fmt;
use std::ops::{Div, Mul};

use num_integer::Integer;

use crate::cyclotomic::CycValue;
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// The character `g^k ↦ ζ_{p-1}^{m k}`, addressed by its exponent `m`.
///
/// Characters are `Copy` handles borrowing their field. `m = 0` is the
/// trivial character ε, which is also `0` at `0`.
#[derive(Clone, Copy)]
pub struct Character<'f> {
    field: &'f PrimeField,
    exp: u64,
}

impl<'f> Character<'f> {
    pub fn new(field: &'f PrimeField, m: i64) -> Character<'f> {
        let exp = m.rem_euclid(field.order() as i64) as u64;
        Character { field, exp }
    }

    pub fn trivial(field: &'f PrimeField) -> Character<'f> {
        Character { field, exp: 0 }
    }

    /// The canonical character of exact order `n`, with exponent `(p-1)/n`.
    pub fn of_order(field: &'f PrimeField, n: u64) -> Result<Character<'f>> {
        if n == 0 || field.order() % n != 0 {
            return Err(Error::OrderDoesNotDivide { order: n, p: field.p() });
        }
        Ok(Character { field, exp: field.order() / n })
    }

    /// Every character of the field, ordered by exponent.
    pub fn all(field: &'f PrimeField) -> impl Iterator<Item = Character<'f>> {
        (0..field.order()).map(move |exp| Character { field, exp })
    }

    pub fn field(&self) -> &'f PrimeField {
        self.field
    }

    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn order(&self) -> u64 {
        let n = self.field.order();
        n / self.exp.gcd(&n)
    }

    pub fn is_trivial(&self) -> bool {
        self.exp == 0
    }

    /// The complex conjugate (= inverse) character.
    pub fn conj(&self) -> Character<'f> {
        Character::new(self.field, -(self.exp as i64))
    }

    pub fn pow(&self, k: i64) -> Character<'f> {
        let n = self.field.order() as i128;
        let e = (self.exp as i128 * (k as i128).rem_euclid(n)) % n;
        Character::new(self.field, e as i64)
    }

    pub fn same_field(&self, other: &Character<'_>) -> bool {
        std::ptr::eq(self.field, other.field) || self.field.p() == other.field.p()
    }

    /// Exponent of `χ(a)` as a power of `ζ_{p-1}`, or `None` when `a = 0`.
    #[inline]
    pub(crate) fn log_value(&self, a: u64) -> Option<u64> {
        if a == 0 {
            None
        } else {
            let n = self.field.order();
            Some(self.exp * self.field.log_unchecked(a) % n)
        }
    }

    /// `χ(-1) = (-1)^m`, as `±1`.
    pub fn sign(&self) -> i64 {
        if self.exp % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `χ(a)` as an exact value at level `order(χ)`; `0` when `a = 0`.
    pub fn eval(&self, a: u64) -> CycValue {
        let a = a % self.field.p();
        let tower = self.field.tower();
        match self.log_value(a) {
            None => CycValue::integer_in(tower, 0),
            Some(e) => {
                let level = self.order();
                let step = self.field.order() / level;
                CycValue::root_in(tower, level, (e / step) as i64)
            }
        }
    }

    /// `χ(a)` embedded at the full level `p - 1`.
    pub fn eval_full(&self, a: u64) -> CycValue {
        let a = a % self.field.p();
        let tower = self.field.tower();
        match self.log_value(a) {
            None => CycValue::integer_in(tower, 0),
            Some(e) => CycValue::root_in(tower, self.field.order(), e as i64),
        }
    }

    /// Least common multiple of the orders: the cyclotomic level at which a
    /// sum of products of these characters is computed.
    pub fn common_level(chars: &[Character<'_>]) -> u64 {
        chars.iter().fold(1u64, |acc, c| acc.lcm(&c.order()))
    }
}

impl PartialEq for Character<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.exp == other.exp
    }
}

impl Eq for Character<'_> {}

impl fmt::Debug for Character<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi[{} mod {}]", self.exp, self.field.order())
    }
}

impl<'f> Mul for Character<'f> {
    type Output = Character<'f>;
    fn mul(self, rhs: Character<'f>) -> Character<'f> {
        debug_assert!(self.same_field(&rhs));
        Character::new(self.field, (self.exp + rhs.exp) as i64)
    }
}

impl<'f> Div for Character<'f> {
    type Output = Character<'f>;
    fn div(self, rhs: Character<'f>) -> Character<'f> {
        debug_assert!(self.same_field(&rhs));
        Character::new(self.field, self.exp as i64 - rhs.exp as i64)
    }
}

/// `δ(χ)`: 1 for the trivial character, else 0.
pub fn delta_char(chi: &Character<'_>) -> i64 {
    chi.is_trivial() as i64
}

/// `δ(x)`: 1 for `x = 0`, else 0.
pub fn delta_elem(x: u64) -> i64 {
    (x == 0) as i64
}

/// Errors unless every character lives over the same field.
pub(crate) fn check_same_field(chars: &[Character<'_>]) -> Result<()> {
    match chars.split_first() {
        Some((first, rest)) if rest.iter().any(|c| !first.same_field(c)) => Err(Error::FieldMismatch),
        _ => Ok(()),
    }
}

/// Accumulates `∑ ζ_{p-1}^{e}` over exponents, then folds the result into
/// `Z[ζ_level]`.
pub(crate) struct ExpAccumulator<'f> {
    field: &'f PrimeField,
    counts: Vec<i64>,
}

impl<'f> ExpAccumulator<'f> {
    pub(crate) fn new(field: &'f PrimeField) -> Self {
        ExpAccumulator { field, counts: vec![0; field.order() as usize] }
    }

    #[inline]
    pub(crate) fn add(&mut self, e: u64) {
        self.counts[e as usize] += 1;
    }

    pub(crate) fn finish(self, level: u64) -> CycValue {
        CycValue::from_exponent_counts(self.field.tower(), &self.counts, level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_characters() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(Character::of_order(&f, 3).unwrap().exponent(), 2);
        assert_eq!(Character::of_order(&f, 4).unwrap_err(), Error::OrderDoesNotDivide { order: 4, p: 7 });
        assert!(Character::new(&f, 0).is_trivial());
        assert_eq!(Character::new(&f, 6), Character::trivial(&f));
    }

    #[test]
    fn evaluation_examples() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(Character::trivial(&f).eval(5), CycValue::one());
        for m in 0..6 {
            assert!(Character::new(&f, m).eval(0).is_zero());
        }
        let eta3 = Character::of_order(&f, 3).unwrap();
        let v = eta3.eval(3);
        assert_eq!(v.level(), 3);
        assert_eq!(v, CycValue::root_of_unity(3, 1));
    }

    #[test]
    fn deltas() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(delta_char(&Character::trivial(&f)), 1);
        assert_eq!(delta_char(&Character::of_order(&f, 3).unwrap()), 0);
        assert_eq!(delta_elem(0), 1);
        assert_eq!(delta_elem(4), 0);
    }

    #[test]
    fn sign_matches_value_at_minus_one() {
        for p in [7u64, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            for chi in Character::all(&f) {
                assert_eq!(chi.eval(p - 1), CycValue::integer(chi.sign()));
            }
        }
    }
}
