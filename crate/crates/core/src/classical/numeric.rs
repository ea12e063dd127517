use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Hard cap on the total degree summed before giving up.
pub const MAX_DEGREE: usize = 20_000;

/// A numerically summed series together with its stopping data.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct NumericValue {
    pub value: Complex64,
    /// Last total degree included in the sum.
    pub degree: usize,
    /// Tail bound at the stopping degree.
    pub tail_bound: f64,
}

/// `F_D^(n)[a; b; c; x]` for real parameters and complex arguments in the
/// open unit polydisk.
///
/// Slices of equal total degree `m` are summed as the iterated convolution of
/// the per-variable factors `(b_t)_k x_t^k / k!`. With `r = max |x_t|` and
/// `K_d` the largest coefficient-slice magnitude seen up to degree `d`, the
/// sum stops at the first `d` with `K_d r^{d+1} / (1 - r) < tol`. The bound
/// is rigorous when slice magnitudes never exceed their running maximum.
pub fn classical_fdn_numeric(a: f64, bs: &[f64], c: f64, xs: &[Complex64], tol: f64) -> Result<NumericValue> {
    if bs.is_empty() || bs.len() != xs.len() {
        return Err(Error::PreconditionViolated("need n >= 1 b parameters and as many arguments".into()));
    }
    let r = xs.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if !(r < 1.0) {
        return Err(Error::NotConvergent(format!("max |x_i| = {r} is not below 1")));
    }
    if !(tol > 0.0) {
        return Err(Error::PreconditionViolated("tolerance must be positive".into()));
    }
    let n = bs.len();
    // u[t][k] = (b_t)_k x_t^k / k!, w[t][k] = |(b_t)_k / k!|
    let mut u: Vec<Vec<Complex64>> = vec![vec![Complex64::new(1.0, 0.0)]; n];
    let mut w: Vec<Vec<f64>> = vec![vec![1.0]; n];
    // conv[t][m] = ∑_{i_1+…+i_{t+1} = m} ∏ u, and likewise for magnitudes.
    let mut conv: Vec<Vec<Complex64>> = vec![Vec::new(); n];
    let mut conv_abs: Vec<Vec<f64>> = vec![Vec::new(); n];
    let mut ratio = 1.0f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut running_max = 0.0f64;
    for m in 0..=MAX_DEGREE {
        if m > 0 {
            let k = (m - 1) as f64;
            let cm = c + k;
            if cm == 0.0 {
                return Err(Error::PoleInC { index: m as u64 });
            }
            ratio *= (a + k) / cm;
            for t in 0..n {
                let next = u[t][m - 1] * (bs[t] + k) * xs[t] / m as f64;
                let next_abs = w[t][m - 1] * (bs[t] + k).abs() / m as f64;
                u[t].push(next);
                w[t].push(next_abs);
            }
        }
        for t in 0..n {
            let (value, magnitude) = if t == 0 {
                (u[0][m], w[0][m])
            } else {
                let mut v = Complex64::new(0.0, 0.0);
                let mut s = 0.0;
                for j in 0..=m {
                    v += conv[t - 1][j] * u[t][m - j];
                    s += conv_abs[t - 1][j] * w[t][m - j];
                }
                (v, s)
            };
            conv[t].push(value);
            conv_abs[t].push(magnitude);
        }
        sum += conv[n - 1][m] * ratio;
        running_max = running_max.max(conv_abs[n - 1][m] * ratio.abs());
        let tail = running_max * r.powi(m as i32 + 1) / (1.0 - r);
        if tail < tol {
            return Ok(NumericValue { value: sum, degree: m, tail_bound: tail });
        }
    }
    Err(Error::NotConvergent(format!("tail bound not below {tol} by degree {MAX_DEGREE}")))
}

/// `₂F₁[a, b; c; x]` as the one-variable case.
pub fn classical_f21_numeric(a: f64, b: f64, c: f64, x: Complex64, tol: f64) -> Result<NumericValue> {
    classical_fdn_numeric(a, &[b], c, &[x], tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_is_one() {
        let v = classical_fdn_numeric(1.0 / 3.0, &[1.0 / 3.0; 2], 1.0, &[Complex64::new(0.0, 0.0); 2], 1e-12).unwrap();
        assert_eq!(v.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn geometric_series() {
        // ₂F₁[1, 1; 1; x] = 1/(1-x)
        let v = classical_f21_numeric(1.0, 1.0, 1.0, Complex64::new(0.5, 0.0), 1e-12).unwrap();
        assert!((v.value.re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn log_series() {
        // x ₂F₁[1, 1; 2; x] = -log(1-x)
        let x = 0.7;
        let v = classical_f21_numeric(1.0, 1.0, 2.0, Complex64::new(x, 0.0), 1e-12).unwrap();
        assert!((x * v.value.re + (1.0f64 - x).ln()).abs() < 1e-11);
    }

    #[test]
    fn rejects_outside_polydisk() {
        let err = classical_fdn_numeric(0.5, &[0.5], 1.0, &[Complex64::new(1.0, 0.0)], 1e-8).unwrap_err();
        assert!(matches!(err, Error::NotConvergent(_)));
    }
}
