//! Generalized Picard curves `y^N = x^i (1-x)^j (1-λ_1 x)^{k_1} ⋯ (1-λ_n x)^{k_n}`.
//!
//! Point counts use the singular plane model with exactly one point at
//! infinity, the convention under which the period-function count is an
//! equality.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::appell::{pdn, AppellParams};
use crate::character::Character;
use crate::cyclotomic::CycValue;
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Exponent data `(N, i, j, k_1..k_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub n: u64,
    pub i: u64,
    pub j: u64,
    pub ks: Vec<u64>,
}

impl CurveSpec {
    /// Validates `gcd(N, i, j, k) = 1` and `N ∤ i + j + ∑k`.
    pub fn new(n: u64, i: u64, j: u64, ks: Vec<u64>) -> Result<CurveSpec> {
        let spec = CurveSpec { n, i, j, ks };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.i == 0 || self.j == 0 || self.ks.is_empty() || self.ks.contains(&0) {
            return Err(Error::PreconditionViolated("N, i, j and every k must be positive".into()));
        }
        let g = self.ks.iter().fold(self.n.gcd(&self.i).gcd(&self.j), |g, k| g.gcd(k));
        if g != 1 {
            return Err(Error::PreconditionViolated(format!("gcd(N, i, j, k) = {g}, expected 1")));
        }
        if self.degree() % self.n == 0 {
            return Err(Error::PreconditionViolated(format!("N = {} divides i + j + sum(k)", self.n)));
        }
        Ok(())
    }

    /// `i + j + k_1 + ⋯ + k_n`.
    pub fn degree(&self) -> u64 {
        self.i + self.j + self.ks.iter().sum::<u64>()
    }

    /// Exponents `A_0..A_r` of the isomorphic model `y^N = ∏ (x - μ_t)^{A_t}`
    /// with roots `0, 1, 1/λ_1, …`.
    pub fn model_exponents(&self) -> Vec<u64> {
        let mut out = vec![self.i, self.j];
        out.extend(&self.ks);
        out
    }
}

/// Genus of the smooth model of `y^N = ∏_{t=0}^r (x - μ_t)^{A_t}` with
/// distinct roots.
pub fn genus_xn(n: u64, exps: &[u64]) -> Result<u64> {
    let chi = euler_characteristic_xn(n, exps)?;
    Ok(((2 - chi) / 2) as u64)
}

/// Euler characteristic `-rN + gcd(N, N - ∑A) + ∑ gcd(N, A_t)`.
pub fn euler_characteristic_xn(n: u64, exps: &[u64]) -> Result<i64> {
    if n == 0 || exps.len() < 2 || exps.contains(&0) {
        return Err(Error::PreconditionViolated("need N > 0 and at least two positive exponents".into()));
    }
    if exps.iter().fold(n, |g, a| g.gcd(a)) != 1 {
        return Err(Error::PreconditionViolated("gcd(N, A_0, ..., A_r) must be 1".into()));
    }
    let total: u64 = exps.iter().sum();
    if total == n {
        return Err(Error::PreconditionViolated("N must differ from the exponent sum".into()));
    }
    let r = (exps.len() - 1) as i64;
    let n_i = n as i64;
    let at_infinity = n_i.gcd(&(n_i - total as i64));
    let finite: i64 = exps.iter().map(|&a| n_i.gcd(&(a as i64))).sum();
    Ok(-r * n_i + at_infinity + finite)
}

/// `1 + ((n+1)N - gcd(N, i+j+∑k) - gcd(N,i) - gcd(N,j) - ∑ gcd(N,k_t)) / 2`.
pub fn genus_picard(spec: &CurveSpec) -> Result<u64> {
    spec.validate()?;
    // Signed: heavily repeated factors can push the bracket below zero.
    let n = spec.n as i64;
    let g = |a: u64| n.gcd(&(a as i64));
    let twice = (spec.ks.len() as i64 + 1) * n
        - g(spec.degree())
        - g(spec.i)
        - g(spec.j)
        - spec.ks.iter().map(|&k| g(k)).sum::<i64>();
    Ok((1 + twice / 2) as u64)
}

/// `#{x : x^n = a}` as `∑_{χ^n = ε} χ(a)`.
pub fn nth_power_count(field: &PrimeField, a: u64, n: u64) -> Result<u64> {
    let a = a % field.p();
    if a == 0 {
        return Err(Error::DomainError("nth_power_count needs a != 0".into()));
    }
    if n == 0 || field.order() % n != 0 {
        return Err(Error::DomainError(format!("{n} does not divide p - 1 = {}", field.order())));
    }
    let eta = Character::of_order(field, n)?;
    let total: CycValue = (0..n as i64).map(|m| eta.pow(m).eval_full(a)).sum();
    total
        .as_integer()
        .and_then(|v| u64::try_from(v).ok())
        .ok_or(Error::NonIntegerResult)
}

/// A curve spec with concrete `λ` values over a prime field.
#[derive(Clone, Debug)]
pub struct CurveInstance<'f> {
    pub spec: CurveSpec,
    pub lambdas: Vec<u64>,
    pub field: &'f PrimeField,
}

impl<'f> CurveInstance<'f> {
    pub fn new(field: &'f PrimeField, spec: CurveSpec, lambdas: Vec<u64>) -> Result<CurveInstance<'f>> {
        if lambdas.len() != spec.ks.len() {
            return Err(Error::PreconditionViolated(format!(
                "{} k exponents but {} lambda values",
                spec.ks.len(),
                lambdas.len()
            )));
        }
        let lambdas = lambdas.into_iter().map(|l| l % field.p()).collect();
        Ok(CurveInstance { spec, lambdas, field })
    }

    /// Distinct `λ_t ∉ {0, 1}`: the hypothesis of the genus and Weil-bound claims.
    pub fn is_smooth_family_member(&self) -> bool {
        let mut seen = self.lambdas.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.lambdas.len() && self.lambdas.iter().all(|&l| l > 1)
    }

    /// `f(x) = x^i (1-x)^j ∏ (1-λ_t x)^{k_t}` over `F_p`.
    pub fn rhs(&self, x: u64) -> u64 {
        let f = self.field;
        let mut v = f.mul(f.pow(x, self.spec.i), f.pow(f.sub(1, x), self.spec.j));
        for (&l, &k) in self.lambdas.iter().zip(&self.spec.ks) {
            v = f.mul(v, f.pow(f.sub(1, f.mul(l, x)), k));
        }
        v
    }
}

/// `1 + p + ∑_{m=1}^{N-1} P_D^(n)[η^{mi}; η^{-mk_1}, …; η^{m(i+j)}; λ]` with the
/// canonical `η_N`.
pub fn count_points_formula(inst: &CurveInstance<'_>) -> Result<u64> {
    let eta = check_prime(inst)?;
    count_points_formula_with(inst, eta)
}

/// The period-function count with an explicit primitive `η_N`.
pub fn count_points_formula_with<'f>(inst: &CurveInstance<'f>, eta: Character<'f>) -> Result<u64> {
    let spec = &inst.spec;
    if eta.order() != spec.n {
        return Err(Error::PreconditionViolated(format!("character of order {} is not primitive of order {}", eta.order(), spec.n)));
    }
    let mut total = CycValue::integer(0);
    for m in 1..spec.n as i64 {
        let a = eta.pow(m * spec.i as i64);
        let c = eta.pow(m * (spec.i + spec.j) as i64);
        let bs = spec.ks.iter().map(|&k| eta.pow(-m * k as i64)).collect();
        total += &pdn(&AppellParams::new(a, bs, c, inst.lambdas.clone())?)?;
    }
    let s = total.as_integer().ok_or(Error::NonIntegerResult)?;
    u64::try_from(1 + inst.field.p() as i64 + s).map_err(|_| Error::NonIntegerResult)
}

/// Exhaustive count of affine solutions plus one point at infinity.
pub fn count_points_naive(inst: &CurveInstance<'_>) -> u64 {
    let f = inst.field;
    let n = inst.spec.n;
    // fibre[a] = #{y : y^N = a}
    let mut fibre = vec![0u64; f.p() as usize];
    for y in f.elements() {
        fibre[f.pow(y, n) as usize] += 1;
    }
    1 + f.elements().map(|x| fibre[inst.rhs(x) as usize]).sum::<u64>()
}

/// `a_p = 1 + p - #C(F_p)` from the period-function count.
pub fn trace(inst: &CurveInstance<'_>) -> Result<i64> {
    Ok(1 + inst.field.p() as i64 - count_points_formula(inst)? as i64)
}

/// `a_p` from the exhaustive count; valid for every prime.
pub fn trace_naive(inst: &CurveInstance<'_>) -> i64 {
    1 + inst.field.p() as i64 - count_points_naive(inst) as i64
}

fn check_prime<'f>(inst: &CurveInstance<'f>) -> Result<Character<'f>> {
    let p = inst.field.p();
    if (p - 1) % inst.spec.n != 0 {
        return Err(Error::BadPrime { p, reason: format!("p is not 1 mod N = {}", inst.spec.n) });
    }
    Character::of_order(inst.field, inst.spec.n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_examples() {
        assert_eq!(genus_xn(2, &[1, 1, 1]).unwrap(), 1);
        assert_eq!(genus_xn(3, &[2, 1, 1, 1]).unwrap(), 3);
        assert!(matches!(genus_xn(2, &[1, 1]), Err(Error::PreconditionViolated(_))));
        assert_eq!(genus_picard(&CurveSpec::new(3, 2, 1, vec![1, 1]).unwrap()).unwrap(), 3);
        assert_eq!(genus_picard(&CurveSpec::new(2, 1, 1, vec![1]).unwrap()).unwrap(), 1);
        // y^2 = x^2 (1-x)(1-λx)^2 is rational.
        assert_eq!(genus_picard(&CurveSpec::new(2, 2, 1, vec![2]).unwrap()).unwrap(), 0);
        assert!(matches!(CurveSpec::new(3, 3, 3, vec![3]), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn power_counts() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(nth_power_count(&f, 2, 2).unwrap(), 2);
        assert_eq!(nth_power_count(&f, 3, 2).unwrap(), 0);
        assert_eq!(nth_power_count(&f, 1, 1).unwrap(), 1);
        assert!(nth_power_count(&f, 0, 2).is_err());
        assert!(nth_power_count(&f, 2, 4).is_err());
    }

    #[test]
    fn elliptic_over_f3() {
        let f = PrimeField::new(3).unwrap();
        let inst = CurveInstance::new(&f, CurveSpec::new(2, 1, 1, vec![1]).unwrap(), vec![2]).unwrap();
        assert_eq!(count_points_naive(&inst), 4);
        assert_eq!(count_points_formula(&inst).unwrap(), 4);
        assert_eq!(trace(&inst).unwrap(), 0);
        let degenerate = CurveInstance::new(&f, CurveSpec::new(2, 1, 1, vec![1]).unwrap(), vec![0]).unwrap();
        assert_eq!(count_points_naive(&degenerate), count_points_formula(&degenerate).unwrap());
    }

    #[test]
    fn picard_over_f7_every_eta() {
        for p in [7u64, 13] {
            let f = PrimeField::new(p).unwrap();
            let inst = CurveInstance::new(&f, CurveSpec::new(3, 2, 1, vec![1, 1]).unwrap(), vec![2, 3]).unwrap();
            let naive = count_points_naive(&inst);
            for eta in Character::all(&f).filter(|c| c.order() == 3) {
                assert_eq!(count_points_formula_with(&inst, eta).unwrap(), naive);
            }
        }
    }

    #[test]
    fn bad_prime() {
        let f = PrimeField::new(11).unwrap();
        let inst = CurveInstance::new(&f, CurveSpec::new(3, 2, 1, vec![1, 1]).unwrap(), vec![2, 3]).unwrap();
        assert!(matches!(count_points_formula(&inst), Err(Error::BadPrime { .. })));
        // No cubic characters: every x has exactly one cube root.
        assert_eq!(trace_naive(&inst), 0);
    }
}
