use std::sync::OnceLock;

use crate::appell::{pdn, AppellParams};
use crate::character::Character;
use crate::charsum::JacobiTable;
use crate::cyclotomic::{CycFraction, CycValue};
use crate::curves::CurveSpec;
use crate::field::PrimeField;

use super::Options;

/// Shared per-prime state. The Jacobi table and curve configurations are
/// built on first use so identities that need neither stay cheap.
pub(crate) struct Ctx<'f> {
    pub field: &'f PrimeField,
    orders: Vec<u64>,
    table: OnceLock<JacobiTable<'f>>,
    configs: OnceLock<Vec<CurveSpec>>,
}

impl<'f> Ctx<'f> {
    pub fn new(field: &'f PrimeField, opts: &Options) -> Ctx<'f> {
        Ctx { field, orders: opts.orders.clone(), table: OnceLock::new(), configs: OnceLock::new() }
    }

    pub fn table(&self) -> &JacobiTable<'f> {
        self.table.get_or_init(|| JacobiTable::new(self.field))
    }

    pub fn ch(&self, e: u64) -> Character<'f> {
        Character::new(self.field, e as i64)
    }

    pub fn eps(&self) -> Character<'f> {
        Character::trivial(self.field)
    }

    pub fn int(&self, n: i64) -> CycValue {
        CycValue::integer_in(self.field.tower(), n)
    }

    /// `χ(x)` at the full level.
    pub fn at(&self, chi: Character<'f>, x: u64) -> CycValue {
        chi.eval_full(x)
    }

    pub fn j(&self, a: Character<'f>, b: Character<'f>) -> CycValue {
        self.table().jacobi(a, b).clone()
    }

    pub fn binom(&self, a: Character<'f>, chi: Character<'f>) -> CycValue {
        self.table().binom(a, chi)
    }

    /// `δ(x)` as an exact value.
    pub fn delta(&self, x: u64) -> CycValue {
        self.int(i64::from(x % self.field.p() == 0))
    }

    /// `(q-1) δ(χ)`.
    pub fn delta_char(&self, chi: Character<'f>) -> CycValue {
        self.int(if chi.is_trivial() { self.field.order() as i64 } else { 0 })
    }

    /// `P_D^(1)[A; B; C; λ]`.
    pub fn p1(&self, a: Character<'f>, b: Character<'f>, c: Character<'f>, l: u64) -> CycValue {
        pdn(&AppellParams::new(a, vec![b], c, vec![l]).expect("same field")).expect("valid parameters")
    }

    /// `P_D^(2)[A; B_1, B_2; C; λ_1, λ_2]`.
    #[allow(clippy::too_many_arguments)]
    pub fn p2(
        &self,
        a: Character<'f>,
        b1: Character<'f>,
        b2: Character<'f>,
        c: Character<'f>,
        l1: u64,
        l2: u64,
    ) -> CycValue {
        pdn(&AppellParams::two(a, b1, b2, c, l1, l2).expect("same field")).expect("valid parameters")
    }

    /// `₂P₁[A, B; C; λ] = P_D^(1)[B; A; C; λ]`.
    pub fn pp1(&self, a: Character<'f>, b: Character<'f>, c: Character<'f>, l: u64) -> CycValue {
        self.p1(b, a, c, l)
    }

    /// `num / den`, or `None` when `den = 0`.
    pub fn frac(&self, num: CycValue, den: CycValue) -> Option<CycFraction> {
        CycFraction::new(num, den).ok()
    }

    /// `1/x` with the convention `1/0 = 0`; every use is multiplied by a
    /// character value that vanishes when the denominator does.
    pub fn inv(&self, x: u64) -> u64 {
        self.field.div_or_zero(1, x)
    }

    pub fn div(&self, x: u64, y: u64) -> u64 {
        self.field.div_or_zero(x, y)
    }

    /// Curve configurations for the point-count identity at this prime.
    pub fn configs(&self) -> &[CurveSpec] {
        self.configs.get_or_init(|| curve_configs(self.field.p(), &self.orders))
    }
}

/// Every valid `(N, i, j, k)` with `N` among `orders` dividing `p - 1`,
/// one or two `k`, and exponents in `1..=3`.
pub(crate) fn curve_configs(p: u64, orders: &[u64]) -> Vec<CurveSpec> {
    let mut ns: Vec<u64> = orders.iter().copied().filter(|&n| n >= 2 && (p - 1) % n == 0).collect();
    ns.sort_unstable();
    ns.dedup();
    let mut out = Vec::new();
    for n in ns {
        for i in 1..=3 {
            for j in 1..=3 {
                for k1 in 1..=3 {
                    if let Ok(s) = CurveSpec::new(n, i, j, vec![k1]) {
                        out.push(s);
                    }
                    for k2 in 1..=3 {
                        if let Ok(s) = CurveSpec::new(n, i, j, vec![k1, k2]) {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    out
}
