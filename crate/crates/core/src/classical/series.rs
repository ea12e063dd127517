use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `num / den` as a [`BigRational`]. Panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rising factorial `(a)_n = a (a+1) ⋯ (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut t = a.clone();
    for _ in 0..n {
        acc *= &t;
        t += BigRational::one();
    }
    acc
}

/// Parameters `[a; b_1..b_n; c; x_1..x_n]` of the classical series.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesParams {
    pub a: BigRational,
    pub bs: Vec<BigRational>,
    pub c: BigRational,
    pub xs: Vec<BigRational>,
}

impl SeriesParams {
    pub fn new(a: BigRational, bs: Vec<BigRational>, c: BigRational, xs: Vec<BigRational>) -> Result<Self> {
        if bs.is_empty() || bs.len() != xs.len() {
            return Err(Error::PreconditionViolated("need n >= 1 b parameters and as many arguments".into()));
        }
        Ok(SeriesParams { a, bs, c, xs })
    }
}

/// Rising factorials `(a)_0..(a)_M`.
fn pochhammer_table(a: &BigRational, m: u64) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut acc = BigRational::one();
    out.push(acc.clone());
    for k in 0..m {
        acc *= a + BigRational::from_integer(BigInt::from(k));
        out.push(acc.clone());
    }
    out
}

/// `(a)_m / (c)_m` for `m = 0..=M`, or [`Error::PoleInC`] at the first
/// vanishing `(c)_m`.
fn ratio_table(a: &BigRational, c: &BigRational, m: u64) -> Result<Vec<BigRational>> {
    let pa = pochhammer_table(a, m);
    let pc = pochhammer_table(c, m);
    pa.into_iter()
        .zip(pc)
        .enumerate()
        .map(|(k, (x, y))| if y.is_zero() { Err(Error::PoleInC { index: k as u64 }) } else { Ok(x / y) })
        .collect()
}

/// Per-variable factors `(b)_k x^k / k!` for `k = 0..=M`.
fn variable_table(b: &BigRational, x: &BigRational, m: u64) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut acc = BigRational::one();
    out.push(acc.clone());
    for k in 0..m {
        let k1 = BigRational::from_integer(BigInt::from(k + 1));
        acc = acc * (b + BigRational::from_integer(BigInt::from(k))) * x / k1;
        out.push(acc.clone());
    }
    out
}

/// Slice sums `∑_{|i| = m} ∏ u_t[i_t]` for `m = 0..=M`: the iterated
/// convolution of the per-variable tables.
fn slices(tables: &[Vec<BigRational>], m: u64) -> Vec<BigRational> {
    let len = m as usize + 1;
    let mut acc = tables[0].clone();
    for t in &tables[1..] {
        let mut next = vec![BigRational::zero(); len];
        for (i, x) in acc.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in t.iter().take(len - i).enumerate() {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    acc
}

/// The partial sum of `F_D^(n)` over all index tuples of total degree `≤ M`.
pub fn classical_fdn_truncated(params: &SeriesParams, order: u64) -> Result<BigRational> {
    let ratios = ratio_table(&params.a, &params.c, order)?;
    let tables: Vec<_> = params.bs.iter().zip(&params.xs).map(|(b, x)| variable_table(b, x, order)).collect();
    let slice = slices(&tables, order);
    Ok(ratios.iter().zip(&slice).map(|(r, s)| r * s).sum())
}

/// Coefficient of `x^m` in `F_D^(n)[a; b; c; x, …, x]`.
pub fn diagonal_coefficient(a: &BigRational, bs: &[BigRational], c: &BigRational, m: u64) -> Result<BigRational> {
    let ratios = ratio_table(a, c, m)?;
    let one = BigRational::one();
    let tables: Vec<_> = bs.iter().map(|b| variable_table(b, &one, m)).collect();
    let slice = slices(&tables, m);
    Ok(&ratios[m as usize] * &slice[m as usize])
}

/// Coefficient of `x^m` in `₂F₁[a, b; c; x]`.
pub fn f21_coefficient(a: &BigRational, b: &BigRational, c: &BigRational, m: u64) -> Result<BigRational> {
    let ratios = ratio_table(a, c, m)?;
    let tail = variable_table(b, &BigRational::one(), m);
    Ok(&ratios[m as usize] * &tail[m as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rational(5, 7), 0), BigRational::one());
        assert_eq!(pochhammer(&rational(1, 1), 4), rational(24, 1));
        assert_eq!(pochhammer(&rational(1, 3), 2), rational(4, 9));
        assert!(pochhammer(&rational(-2, 1), 3).is_zero());
    }

    #[test]
    fn truncation_anchors() {
        let third = rational(1, 3);
        let params =
            SeriesParams::new(third.clone(), vec![third.clone(), third.clone()], rational(1, 1), vec![rational(0, 1); 2])
                .unwrap();
        for m in 0..5 {
            assert_eq!(classical_fdn_truncated(&params, m).unwrap(), BigRational::one());
        }
        let params = SeriesParams { xs: vec![rational(1, 2), rational(1, 5)], ..params };
        assert_eq!(classical_fdn_truncated(&params, 0).unwrap(), BigRational::one());
        // Degree one: 1 + (1/3)(1/3)(1/2 + 1/5) = 1 + 7/90.
        assert_eq!(classical_fdn_truncated(&params, 1).unwrap(), rational(97, 90));
    }

    #[test]
    fn diagonal_first_coefficient() {
        let third = rational(1, 3);
        let lhs = diagonal_coefficient(&third, &[third.clone(), third.clone()], &rational(1, 1), 1).unwrap();
        assert_eq!(lhs, rational(2, 9));
        assert_eq!(f21_coefficient(&third, &rational(2, 3), &rational(1, 1), 1).unwrap(), lhs);
    }

    #[test]
    fn pole_in_c() {
        let params =
            SeriesParams::new(rational(1, 2), vec![rational(1, 2)], rational(-2, 1), vec![rational(1, 3)]).unwrap();
        assert!(classical_fdn_truncated(&params, 2).is_ok());
        assert_eq!(classical_fdn_truncated(&params, 3), Err(Error::PoleInC { index: 3 }));
    }
}
