//! Finite-field Appell–Lauricella period functions `P_D^(n)`, their
//! normalizations `F_D^(n)`, and the one-variable `₂P₁` / `₂F₁`.
//!
//! The period function is the character sum
//!
//! ```text
//! P_D^(n)[A; B_1..B_n; C; λ_1..λ_n] = ∑_y A(y) CĀ(1-y) B̄_1(1-λ_1 y) ⋯ B̄_n(1-λ_n y)
//! ```
//!
//! and `F_D^(n)` divides it by its value at `λ = 0`, the Jacobi sum
//! `J(A, CĀ)`. Values of `F` are returned as [`CycFraction`]s and never
//! divided out.

use crate::character::{check_same_field, Character, ExpAccumulator};
use crate::charsum::{jacobi_sum, JacobiTable};
use crate::cyclotomic::{CycFraction, CycValue};
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Parameters `[A; B_1..B_n; C; λ_1..λ_n]` of a period function.
#[derive(Clone, Debug)]
pub struct AppellParams<'f> {
    pub a: Character<'f>,
    pub bs: Vec<Character<'f>>,
    pub c: Character<'f>,
    pub lambdas: Vec<u64>,
}

impl<'f> AppellParams<'f> {
    pub fn new(a: Character<'f>, bs: Vec<Character<'f>>, c: Character<'f>, lambdas: Vec<u64>) -> Result<Self> {
        if bs.is_empty() {
            return Err(Error::PreconditionViolated("at least one B parameter is required".into()));
        }
        if bs.len() != lambdas.len() {
            return Err(Error::PreconditionViolated(format!(
                "{} B parameters but {} lambda values",
                bs.len(),
                lambdas.len()
            )));
        }
        let mut all = vec![a, c];
        all.extend(bs.iter().copied());
        check_same_field(&all)?;
        let p = a.field().p();
        let lambdas = lambdas.into_iter().map(|l| l % p).collect();
        Ok(AppellParams { a, bs, c, lambdas })
    }

    /// Shorthand for the two-variable case.
    pub fn two(
        a: Character<'f>,
        b1: Character<'f>,
        b2: Character<'f>,
        c: Character<'f>,
        l1: u64,
        l2: u64,
    ) -> Result<Self> {
        Self::new(a, vec![b1, b2], c, vec![l1, l2])
    }

    pub fn n(&self) -> usize {
        self.bs.len()
    }

    pub fn field(&self) -> &'f PrimeField {
        self.a.field()
    }

    /// `A, B_i ≠ ε` and `A, B_i ≠ C` for all `i`.
    pub fn is_primitive(&self) -> bool {
        is_primitive(self.a, &self.bs, self.c)
    }

    fn level(&self) -> u64 {
        let mut chars = vec![self.a, self.c / self.a];
        chars.extend(self.bs.iter().map(|b| b.conj()));
        Character::common_level(&chars)
    }
}

/// Primitivity of a parameter tuple: `A, B_i ≠ ε` and `A, B_i ≠ C`.
pub fn is_primitive(a: Character<'_>, bs: &[Character<'_>], c: Character<'_>) -> bool {
    !a.is_trivial() && a != c && bs.iter().all(|b| !b.is_trivial() && *b != c)
}

/// The period function `P_D^(n)` by its defining `p`-term sum.
pub fn pdn(params: &AppellParams<'_>) -> Result<CycValue> {
    let field = params.field();
    let n = field.order();
    let a = params.a;
    let ca = params.c / params.a;
    let bbar: Vec<(Character<'_>, u64)> =
        params.bs.iter().zip(&params.lambdas).map(|(b, &l)| (b.conj(), l)).collect();
    let mut acc = ExpAccumulator::new(field);
    'y: for y in 1..field.p() {
        let one_minus_y = field.sub(1, y);
        if one_minus_y == 0 {
            continue;
        }
        let mut e = a.log_value(y).unwrap() + ca.log_value(one_minus_y).unwrap();
        for &(b, l) in &bbar {
            match b.log_value(field.sub(1, field.mul(l, y))) {
                Some(t) => e += t,
                None => continue 'y,
            }
        }
        acc.add(e % n);
    }
    Ok(acc.finish(params.level()))
}

/// `F_D^(n) = P_D^(n) / J(A, CĀ)`.
pub fn fdn(params: &AppellParams<'_>) -> Result<CycFraction> {
    let num = pdn(params)?;
    let den = jacobi_sum(params.a, params.c / params.a)?;
    CycFraction::new(num, den)
}

/// `₂P₁[A, B; C; λ] = P_D^(1)[B; A; C; λ]`.
pub fn pp1<'f>(a: Character<'f>, b: Character<'f>, c: Character<'f>, lambda: u64) -> Result<CycValue> {
    pdn(&AppellParams::new(b, vec![a], c, vec![lambda])?)
}

/// `₂F₁[A, B; C; λ] = ₂P₁[A, B; C; λ] / J(B, CB̄)`.
pub fn ff2f1<'f>(a: Character<'f>, b: Character<'f>, c: Character<'f>, lambda: u64) -> Result<CycFraction> {
    let num = pp1(a, b, c, lambda)?;
    CycFraction::new(num, jacobi_sum(b, c / b)?)
}

/// `P_D^(n)` through its Jacobi-sum expansion, building a [`JacobiTable`].
pub fn pdn_via_jacobi(params: &AppellParams<'_>) -> Result<CycValue> {
    let table = JacobiTable::new(params.field());
    pdn_via_jacobi_with(&table, params)
}

/// The Jacobi-sum expansion
///
/// ```text
/// n = 1:  A(-1)/(q-1) ∑_χ J(Bχ, χ̄) J(Aχ, \overline{Cχ}) χ(λ) + δ(λ) J(A, CĀ)
/// n ≥ 2:  A(-1)/(q-1)^n ∑_{χ_1..χ_n} J(Aχ_1⋯χ_n, \overline{Cχ_1⋯χ_n}) ∏ J(B_iχ_i, χ̄_i) χ_i(λ_i)
/// ```
///
/// The `n ≥ 2` branch needs every `λ_i ≠ 0`. Costs `(q-1)^n` products; it is
/// a verification target, not an evaluator.
pub fn pdn_via_jacobi_with(table: &JacobiTable<'_>, params: &AppellParams<'_>) -> Result<CycValue> {
    let field = params.field();
    if table.field() != field {
        return Err(Error::FieldMismatch);
    }
    let n = params.n();
    if n >= 2 && params.lambdas.contains(&0) {
        return Err(Error::DomainError("the n >= 2 Jacobi expansion requires every lambda != 0".into()));
    }
    let q1 = field.order() as i64;
    let a = params.a.exponent() as i64;
    let c = params.c.exponent() as i64;
    let logs: Vec<Option<u64>> =
        params.lambdas.iter().map(|&l| if l == 0 { None } else { Some(field.log_unchecked(l)) }).collect();

    // Depth-first over (χ_1..χ_n), carrying the partial product of the
    // J(B_iχ_i, χ̄_i) factors and the exponent of ∏ χ_i(λ_i).
    fn walk(
        table: &JacobiTable<'_>,
        params: &AppellParams<'_>,
        logs: &[Option<u64>],
        depth: usize,
        chi_sum: i64,
        root_exp: u64,
        partial: CycValue,
        out: &mut CycValue,
    ) {
        let field = params.field();
        let q1 = field.order();
        if depth == params.n() {
            let a = params.a.exponent() as i64;
            let c = params.c.exponent() as i64;
            let head = table.get(a + chi_sum, -(c + chi_sum));
            let zeta = CycValue::root_in(field.tower(), q1, root_exp as i64);
            *out += &(&(head * &partial) * &zeta);
            return;
        }
        let b = params.bs[depth].exponent() as i64;
        for k in 0..q1 as i64 {
            let Some(lg) = logs[depth] else {
                // χ(0) = 0 kills every term but none is needed: only the
                // n = 1 branch reaches here with λ = 0.
                return;
            };
            let factor = table.get(b + k, -k);
            walk(
                table,
                params,
                logs,
                depth + 1,
                chi_sum + k,
                (root_exp + (k as u64) * lg) % q1,
                &partial * factor,
                out,
            );
        }
    }

    let mut total = CycValue::integer_in(field.tower(), 0);
    walk(table, params, &logs, 0, 0, 0, CycValue::integer_in(field.tower(), 1), &mut total);
    let scaled = total.scale(params.a.sign());
    let divisor = q1.pow(n as u32);
    let mut value = scaled.div_exact(divisor).ok_or(Error::NonIntegerResult)?;
    if n == 1 && params.lambdas[0] == 0 {
        value += table.get(a, c - a);
    }
    Ok(value)
}

/// The binomial form of the expansion:
///
/// ```text
/// (-1)^{n+1} AC(-1)/(q-1)^n ∑ (Aχ_1⋯χ_n choose Cχ_1⋯χ_n) ∏ (B_iχ_i choose χ_i) χ_i(λ_i)
/// ```
///
/// plus `δ(λ) J(A, CĀ)` when `n = 1`.
pub fn pdn_via_binomials_with(table: &JacobiTable<'_>, params: &AppellParams<'_>) -> Result<CycValue> {
    let field = params.field();
    let n = params.n();
    if n >= 2 && params.lambdas.contains(&0) {
        return Err(Error::DomainError("the n >= 2 Jacobi expansion requires every lambda != 0".into()));
    }
    let q1 = field.order() as i64;
    let mut total = CycValue::integer_in(field.tower(), 0);
    let mut chis = vec![0i64; n];
    loop {
        let s: i64 = chis.iter().sum();
        let head = table.binom(params.a * Character::new(field, s), params.c * Character::new(field, s));
        let mut term = head;
        let mut root = 0u64;
        let mut zero = false;
        for (i, &k) in chis.iter().enumerate() {
            let chi = Character::new(field, k);
            term = &term * &table.binom(params.bs[i] * chi, chi);
            match chi.log_value(params.lambdas[i]) {
                Some(e) => root += e,
                None => zero = true,
            }
        }
        if !zero {
            total += &(&term * &CycValue::root_in(field.tower(), q1 as u64, root as i64));
        }
        // odometer
        let mut i = 0;
        while i < n {
            chis[i] += 1;
            if chis[i] < q1 {
                break;
            }
            chis[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    let sign = if n % 2 == 1 { 1 } else { -1 } * (params.a * params.c).sign();
    let mut value = total.scale(sign).div_exact(q1.pow(n as u32)).ok_or(Error::NonIntegerResult)?;
    if n == 1 && params.lambdas[0] == 0 {
        value += table.jacobi(params.a, params.c / params.a);
    }
    Ok(value)
}

/// The two-variable binomial expansion valid for every `(λ_1, λ_2)`, with
/// the three δ-correction terms for vanishing arguments:
///
/// ```text
/// -AC(-1)/(q-1)^2 ∑_{χ,ψ} (B_1χ choose χ)(B_2ψ choose ψ)(Aχψ choose Cχψ) χ(λ_1)ψ(λ_2)
///   + δ(λ_2) AC(-1)/(q-1) ∑_χ (B_1χ choose χ)(Aχ choose Cχ) χ(λ_1)
///   + δ(λ_1) AC(-1)/(q-1) ∑_χ (B_2χ choose χ)(Aχ choose Cχ) χ(λ_2)
///   + δ(λ_1)δ(λ_2) J(A, CĀ)
/// ```
pub fn pd2_via_binomials_all(table: &JacobiTable<'_>, params: &AppellParams<'_>) -> Result<CycValue> {
    if params.n() != 2 {
        return Err(Error::PreconditionViolated("two-variable expansion needs n = 2".into()));
    }
    let field = params.field();
    let q1 = field.order() as i64;
    let (a, c) = (params.a, params.c);
    let (b1, b2) = (params.bs[0], params.bs[1]);
    let (l1, l2) = (params.lambdas[0], params.lambdas[1]);
    let ac = (a * c).sign();

    let mut value = CycValue::integer_in(field.tower(), 0);
    if l1 != 0 && l2 != 0 {
        value += &pdn_via_binomials_with(table, params)?;
    }
    let single = |b: Character<'_>, l: u64| -> Result<CycValue> {
        let mut s = CycValue::integer_in(field.tower(), 0);
        for chi in Character::all(field) {
            let v = chi.eval_full(l);
            if v.is_zero() {
                continue;
            }
            s += &(&(&table.binom(b * chi, chi) * &table.binom(a * chi, c * chi)) * &v);
        }
        s.scale(ac).div_exact(q1).ok_or(Error::NonIntegerResult)
    };
    if l2 == 0 {
        value += &single(b1, l1)?;
    }
    if l1 == 0 {
        value += &single(b2, l2)?;
    }
    if l1 == 0 && l2 == 0 {
        value += table.jacobi(a, c / a);
    }
    Ok(value)
}

/// `P_D^(2)` through the Jacobi expansion for every `(λ_1, λ_2)` with both
/// entries nonzero, for fixed characters. Entry `[u][v]` is the value at
/// `(g^u, g^v)`.
pub fn pd2_jacobi_grid<'f>(
    table: &JacobiTable<'f>,
    a: Character<'f>,
    b1: Character<'f>,
    b2: Character<'f>,
    c: Character<'f>,
) -> Vec<Vec<CycValue>> {
    let l = table.field().order() as i64;
    let (ea, eb1, eb2, ec) = (a.exponent() as i64, b1.exponent() as i64, b2.exponent() as i64, c.exponent() as i64);
    let t1: Vec<CycValue> = (0..l).map(|k| table.get(eb1 + k, -k).clone()).collect();
    let t2: Vec<CycValue> = (0..l).map(|k| table.get(eb2 + k, -k).clone()).collect();
    let head: Vec<CycValue> = (0..l).map(|s| table.get(ea + s, -(ec + s)).clone()).collect();
    double_transform(table.field(), &t1, &t2, &head, a.sign())
}

/// The binomial form of the same expansion,
/// `-AC(-1)/(q-1)^2 ∑ (B_1χ choose χ)(B_2ψ choose ψ)(Aχψ choose Cχψ) χ(λ_1)ψ(λ_2)`,
/// on the grid of nonzero `(λ_1, λ_2)`.
pub fn pd2_binomial_grid<'f>(
    table: &JacobiTable<'f>,
    a: Character<'f>,
    b1: Character<'f>,
    b2: Character<'f>,
    c: Character<'f>,
) -> Vec<Vec<CycValue>> {
    let field = table.field();
    let chi = |k: usize| Character::new(field, k as i64);
    let l = field.order() as usize;
    let t1: Vec<CycValue> = (0..l).map(|k| table.binom(b1 * chi(k), chi(k))).collect();
    let t2: Vec<CycValue> = (0..l).map(|k| table.binom(b2 * chi(k), chi(k))).collect();
    let head: Vec<CycValue> = (0..l).map(|s| table.binom(a * chi(s), c * chi(s))).collect();
    double_transform(field, &t1, &t2, &head, -(a * c).sign())
}

/// `AC(-1)/(q-1) ∑_χ (Bχ choose χ)(Aχ choose Cχ) χ(g^u)` for every `u`: the
/// single-sum correction terms of the two-variable binomial expansion.
pub fn binomial_single_transform<'f>(
    table: &JacobiTable<'f>,
    a: Character<'f>,
    b: Character<'f>,
    c: Character<'f>,
) -> Vec<CycValue> {
    let field = table.field();
    let l = field.order() as usize;
    let chi = |k: usize| Character::new(field, k as i64);
    let terms: Vec<Vec<i64>> =
        (0..l).map(|k| (&table.binom(b * chi(k), chi(k)) * &table.binom(a * chi(k), c * chi(k))).cyclic()).collect();
    let sign = (a * c).sign();
    (0..l)
        .map(|u| {
            let mut acc = vec![0i64; l];
            for (k, t) in terms.iter().enumerate() {
                rotate_add(&mut acc, t, (k * u) % l);
            }
            CycValue::from_cyclic(field.tower(), l as u64, acc)
                .scale(sign)
                .div_exact(l as i64)
                .expect("single binomial transform is divisible by q-1")
        })
        .collect()
}

/// The two-variable expansion with every δ correction, evaluated for all
/// `(λ_1, λ_2) ∈ F_p^2` at once. Entry `[x][y]` is the value at `(x, y)`.
pub fn pd2_binomial_all<'f>(
    table: &JacobiTable<'f>,
    a: Character<'f>,
    b1: Character<'f>,
    b2: Character<'f>,
    c: Character<'f>,
) -> Vec<Vec<CycValue>> {
    let field = table.field();
    let p = field.p() as usize;
    let grid = pd2_binomial_grid(table, a, b1, b2, c);
    let s1 = binomial_single_transform(table, a, b1, c);
    let s2 = binomial_single_transform(table, a, b2, c);
    let zero = CycValue::integer_in(field.tower(), 0);
    let mut out = vec![vec![zero; p]; p];
    for (x, row) in out.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = match (x, y) {
                (0, 0) => table.jacobi(a, c / a).clone(),
                (0, y) => s2[field.log_unchecked(y as u64) as usize].clone(),
                (x, 0) => s1[field.log_unchecked(x as u64) as usize].clone(),
                (x, y) => grid[field.log_unchecked(x as u64) as usize][field.log_unchecked(y as u64) as usize].clone(),
            };
        }
    }
    out
}

fn rotate_add(dst: &mut [i64], src: &[i64], shift: usize) {
    let l = dst.len();
    for (k, &c) in src.iter().enumerate() {
        if c != 0 {
            dst[(k + shift) % l] += c;
        }
    }
}

/// `sign/(q-1)^2 ∑_{a,b} t1[a] t2[b] head[a+b] ζ^{a u + b v}` for every
/// `(u, v)`, as a separable transform in `Z[x]/(x^{q-1} - 1)`: `O((q-1)^4)`
/// additions instead of `(q-1)^2` products per point.
fn double_transform(
    field: &PrimeField,
    t1: &[CycValue],
    t2: &[CycValue],
    head: &[CycValue],
    sign: i64,
) -> Vec<Vec<CycValue>> {
    let l = field.order() as usize;
    let tower = field.tower();

    // inner[a][v] = t1[a] · ∑_b head[a+b] t2[b] ζ^{b v}
    let mut inner: Vec<Vec<Vec<i64>>> = Vec::with_capacity(l);
    for (ia, t1a) in t1.iter().enumerate() {
        let prods: Vec<Vec<i64>> = (0..l).map(|ib| (&head[(ia + ib) % l] * &t2[ib]).cyclic()).collect();
        let mut row = Vec::with_capacity(l);
        for v in 0..l {
            let mut acc = vec![0i64; l];
            for (ib, prod) in prods.iter().enumerate() {
                rotate_add(&mut acc, prod, (ib * v) % l);
            }
            let reduced = CycValue::from_cyclic(tower, l as u64, acc);
            row.push((&reduced * t1a).cyclic());
        }
        inner.push(row);
    }

    let norm = (l * l) as i64;
    (0..l)
        .map(|u| {
            (0..l)
                .map(|v| {
                    let mut acc = vec![0i64; l];
                    for (ia, terms) in inner.iter().enumerate() {
                        rotate_add(&mut acc, &terms[v], (ia * u) % l);
                    }
                    CycValue::from_cyclic(tower, l as u64, acc)
                        .scale(sign)
                        .div_exact(norm)
                        .expect("double Jacobi expansion is divisible by (q-1)^2")
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    /// Literal evaluation with `Character::eval`, independent of the
    /// exponent-accumulator path.
    fn pdn_literal(params: &AppellParams<'_>) -> CycValue {
        let field = params.field();
        let mut s = CycValue::zero();
        for y in field.elements() {
            let mut t = &params.a.eval(y) * &(params.c / params.a).eval(field.sub(1, y));
            for (b, &l) in params.bs.iter().zip(&params.lambdas) {
                t = &t * &b.conj().eval(field.sub(1, field.mul(l, y)));
            }
            s += &t;
        }
        s
    }

    #[test]
    fn zero_lambdas_give_jacobi_sum() {
        let f = f7();
        for a in Character::all(&f) {
            for c in Character::all(&f) {
                let b = Character::new(&f, 1);
                let params = AppellParams::two(a, b, b, c, 0, 0).unwrap();
                assert_eq!(pdn(&params).unwrap(), jacobi_sum(a, c / a).unwrap());
                assert!(fdn(&params).unwrap().is_one());
            }
        }
    }

    #[test]
    fn cubic_example_over_f7() {
        let f = f7();
        let eta3 = Character::of_order(&f, 3).unwrap();
        let eps = Character::trivial(&f);
        let params = AppellParams::two(eta3, eta3, eta3, eps, 0, 0).unwrap();
        assert_eq!(pdn(&params).unwrap(), CycValue::integer(-1));
        let params = AppellParams::two(eta3, eta3, eta3, eps, 2, 3).unwrap();
        let expected = CycFraction::new(pdn_literal(&params), CycValue::integer(-1)).unwrap();
        assert_eq!(fdn(&params).unwrap(), expected);
    }

    #[test]
    fn agrees_with_literal_sum() {
        let f = f7();
        for a in Character::all(&f) {
            for b in Character::all(&f) {
                for c in Character::all(&f) {
                    for l in f.elements() {
                        let params = AppellParams::two(a, b, Character::new(&f, 2), c, l, 3).unwrap();
                        assert_eq!(pdn(&params).unwrap(), pdn_literal(&params));
                    }
                }
            }
        }
    }

    #[test]
    fn pp1_reductions() {
        let f = f7();
        for a in Character::all(&f) {
            for b in Character::all(&f) {
                for c in Character::all(&f) {
                    assert_eq!(pp1(a, b, c, 0).unwrap(), jacobi_sum(b, c / b).unwrap());
                    assert_eq!(pp1(a, b, c, 1).unwrap(), jacobi_sum(b, c / (a * b)).unwrap());
                    assert!(ff2f1(a, b, c, 0).unwrap().is_one());
                }
            }
        }
        let eta2 = Character::of_order(&f, 2).unwrap();
        let eta3 = Character::of_order(&f, 3).unwrap();
        let eps = Character::trivial(&f);
        let literal = pdn_literal(&AppellParams::new(eta3, vec![eta2], eps, vec![3]).unwrap());
        assert_eq!(pp1(eta2, eta3, eps, 3).unwrap(), literal);
    }

    #[test]
    fn ff2f1_matches_fdn_with_swap() {
        let f = f7();
        let eta3 = Character::of_order(&f, 3).unwrap();
        let eps = Character::trivial(&f);
        let lhs = ff2f1(eta3, eta3.pow(2), eps, 2).unwrap();
        let rhs = fdn(&AppellParams::new(eta3.pow(2), vec![eta3], eps, vec![2]).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_one_reduction() {
        let f = f7();
        for a in Character::all(&f) {
            for b1 in Character::all(&f) {
                for b2 in Character::all(&f) {
                    let c = Character::new(&f, 1);
                    for l in f.elements() {
                        let full = pdn(&AppellParams::two(a, b1, b2, c, l, 1).unwrap()).unwrap();
                        let reduced = pdn(&AppellParams::new(a, vec![b1], c / b2, vec![l]).unwrap()).unwrap();
                        assert_eq!(full, reduced);
                        // F-level: J(A, CĀB̄_2)/J(A, CĀ) times the reduced F.
                        let f_full = fdn(&AppellParams::two(a, b1, b2, c, l, 1).unwrap()).unwrap();
                        let f_red = fdn(&AppellParams::new(a, vec![b1], c / b2, vec![l]).unwrap()).unwrap();
                        let ratio =
                            CycFraction::new(jacobi_sum(a, c / (b2 * a)).unwrap(), jacobi_sum(a, c / a).unwrap())
                                .unwrap();
                        assert_eq!(f_full, ratio.mul(&f_red));
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_expansion_n1_includes_delta_term() {
        let f = f7();
        let table = JacobiTable::new(&f);
        for a in Character::all(&f) {
            for c in Character::all(&f) {
                let params = AppellParams::new(a, vec![Character::new(&f, 4)], c, vec![0]).unwrap();
                assert_eq!(pdn_via_jacobi_with(&table, &params).unwrap(), jacobi_sum(a, c / a).unwrap());
            }
        }
    }

    #[test]
    fn jacobi_expansion_rejects_zero_lambda() {
        let f = f7();
        let chi = Character::new(&f, 1);
        let params = AppellParams::two(chi, chi, chi, chi, 0, 2).unwrap();
        assert!(matches!(pdn_via_jacobi(&params), Err(Error::DomainError(_))));
    }

    #[test]
    fn jacobi_expansion_n3() {
        let f = PrimeField::new(5).unwrap();
        let table = JacobiTable::new(&f);
        for a in Character::all(&f) {
            for c in Character::all(&f) {
                let bs = vec![Character::new(&f, 1), Character::new(&f, 2), Character::new(&f, 3)];
                let params = AppellParams::new(a, bs, c, vec![2, 3, 4]).unwrap();
                let direct = pdn(&params).unwrap();
                assert_eq!(pdn_via_jacobi_with(&table, &params).unwrap(), direct);
                assert_eq!(pdn_via_binomials_with(&table, &params).unwrap(), direct);
            }
        }
    }

    #[test]
    fn grid_matches_pointwise_expansion() {
        let f = f7();
        let table = JacobiTable::new(&f);
        let (a, b1, b2, c) =
            (Character::new(&f, 1), Character::new(&f, 2), Character::new(&f, 3), Character::new(&f, 5));
        let grid = pd2_jacobi_grid(&table, a, b1, b2, c);
        for u in 0..6 {
            for v in 0..6 {
                let params = AppellParams::two(a, b1, b2, c, f.gen_pow(u), f.gen_pow(v)).unwrap();
                assert_eq!(grid[u as usize][v as usize], pdn_via_jacobi_with(&table, &params).unwrap());
            }
        }
    }

    #[test]
    fn binomial_grid_covers_every_lambda() {
        let f = PrimeField::new(5).unwrap();
        let table = JacobiTable::new(&f);
        for a in Character::all(&f) {
            for b1 in Character::all(&f) {
                for c in Character::all(&f) {
                    let b2 = Character::new(&f, 3);
                    let all = pd2_binomial_all(&table, a, b1, b2, c);
                    for x in f.elements() {
                        for y in f.elements() {
                            let params = AppellParams::two(a, b1, b2, c, x, y).unwrap();
                            let direct = pdn(&params).unwrap();
                            assert_eq!(all[x as usize][y as usize], direct);
                            assert_eq!(pd2_via_binomials_all(&table, &params).unwrap(), direct);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn primitivity() {
        let f = f7();
        let (a, b, c) = (Character::new(&f, 1), Character::new(&f, 2), Character::new(&f, 3));
        assert!(is_primitive(a, &[b], c));
        assert!(!is_primitive(a, &[c], c));
        assert!(!is_primitive(Character::trivial(&f), &[b], c));
        assert!(!is_primitive(a, &[Character::trivial(&f)], c));
    }
}
