//! Jacobi sums and the character binomial coefficient.

use crate::character::{check_same_field, Character, ExpAccumulator};
use crate::cyclotomic::CycValue;
use crate::error::Result;
use crate::field::PrimeField;

/// `J(A, B) = ∑_x A(x) B(1 - x)`, computed exactly at level
/// `lcm(ord A, ord B)`.
pub fn jacobi_sum(a: Character<'_>, b: Character<'_>) -> Result<CycValue> {
    check_same_field(&[a, b])?;
    let field = a.field();
    let level = Character::common_level(&[a, b]);
    let n = field.order();
    let mut acc = ExpAccumulator::new(field);
    // x = 0 and x = 1 contribute nothing since χ(0) = 0 for every χ.
    for x in 2..field.p() {
        let ea = a.log_value(x).unwrap();
        let eb = b.log_value(field.sub(1, x)).unwrap();
        acc.add((ea + eb) % n);
    }
    Ok(acc.finish(level))
}

/// The character binomial `(A choose χ) = -χ(-1) J(A, χ̄)`.
pub fn ff_binom(a: Character<'_>, chi: Character<'_>) -> Result<CycValue> {
    let j = jacobi_sum(a, chi.conj())?;
    Ok(j.scale(-chi.sign()))
}

/// Every Jacobi sum `J(χ_a, χ_b)` over one field, indexed by exponents and
/// stored at the full level `p - 1`.
///
/// Building the table costs `(p-1)^2 · p` steps; it is meant for the small
/// fields over which the Jacobi-sum representations are verified.
pub struct JacobiTable<'f> {
    field: &'f PrimeField,
    values: Vec<CycValue>,
}

impl<'f> JacobiTable<'f> {
    pub fn new(field: &'f PrimeField) -> JacobiTable<'f> {
        let n = field.order();
        let p = field.p();
        // Reuse one log pass: J(χ_a, χ_b) = ∑_x ζ^{a·log x + b·log(1-x)}.
        let pairs: Vec<(u64, u64)> =
            (2..p).map(|x| (field.log_unchecked(x), field.log_unchecked(field.sub(1, x)))).collect();
        let mut values = Vec::with_capacity((n * n) as usize);
        for a in 0..n {
            for b in 0..n {
                let mut acc = ExpAccumulator::new(field);
                for &(lx, l1x) in &pairs {
                    acc.add((a * lx + b * l1x) % n);
                }
                values.push(acc.finish(n));
            }
        }
        JacobiTable { field, values }
    }

    pub fn field(&self) -> &'f PrimeField {
        self.field
    }

    /// `J(χ_a, χ_b)` by exponents (taken modulo `p - 1`).
    pub fn get(&self, a: i64, b: i64) -> &CycValue {
        let n = self.field.order() as i64;
        let i = a.rem_euclid(n) * n + b.rem_euclid(n);
        &self.values[i as usize]
    }

    pub fn jacobi(&self, a: Character<'_>, b: Character<'_>) -> &CycValue {
        self.get(a.exponent() as i64, b.exponent() as i64)
    }

    /// `(A choose χ)` from the table.
    pub fn binom(&self, a: Character<'_>, chi: Character<'_>) -> CycValue {
        self.get(a.exponent() as i64, -(chi.exponent() as i64)).scale(-chi.sign())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_jacobi_sums() {
        for p in [5u64, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            let eps = Character::trivial(&f);
            assert_eq!(jacobi_sum(eps, eps).unwrap(), CycValue::integer(p as i64 - 2));
            for a in Character::all(&f).skip(1) {
                assert_eq!(jacobi_sum(a, eps).unwrap(), CycValue::integer(-1));
                assert_eq!(ff_binom(a, eps).unwrap(), CycValue::one());
            }
            assert_eq!(ff_binom(eps, eps).unwrap(), CycValue::integer(-(p as i64 - 2)));
        }
    }

    #[test]
    fn legendre_jacobi_over_f7() {
        // Legendre symbol mod 7 on x = 2..6 is (+,-,+,-,-); 1 - x is 6,5,4,3,2.
        // Terms: (1)(-1) + (-1)(-1) + (1)(1) + (-1)(-1) + (-1)(1) = 1.
        let f = PrimeField::new(7).unwrap();
        let eta2 = Character::of_order(&f, 2).unwrap();
        assert_eq!(jacobi_sum(eta2, eta2).unwrap(), CycValue::one());
        // J(A, Ā) = -A(-1) for A ≠ ε, and η_2(-1) = -1 at p = 7.
        assert_eq!(jacobi_sum(eta2, eta2.conj()).unwrap(), CycValue::integer(-eta2.sign()));
        assert_eq!(ff_binom(eta2, eta2).unwrap(), CycValue::one());
    }

    #[test]
    fn field_mismatch() {
        let f7 = PrimeField::new(7).unwrap();
        let f11 = PrimeField::new(11).unwrap();
        let a = Character::new(&f7, 1);
        let b = Character::new(&f11, 1);
        assert_eq!(jacobi_sum(a, b), Err(crate::Error::FieldMismatch));
    }

    #[test]
    fn table_agrees_with_direct_sums() {
        let f = PrimeField::new(13).unwrap();
        let table = JacobiTable::new(&f);
        for a in Character::all(&f) {
            for b in Character::all(&f) {
                assert_eq!(table.jacobi(a, b), &jacobi_sum(a, b).unwrap());
                assert_eq!(table.binom(a, b), ff_binom(a, b).unwrap());
            }
        }
    }

    #[test]
    fn jacobi_sums_never_vanish() {
        for p in [7u64, 11, 13, 19] {
            let f = PrimeField::new(p).unwrap();
            let table = JacobiTable::new(&f);
            let n = f.order() as i64;
            for a in 0..n {
                for b in 0..n {
                    assert!(!table.get(a, b).is_zero());
                }
            }
        }
    }
}
