//! Classical identities over `C`. They do not depend on `p`; the prime only
//! labels the report. Each side is summed to a certified tail below
//! [`SERIES_TOL`] and the two sides must agree within [`NUMERIC_TOL`].

use num_complex::Complex64;
use num_rational::BigRational;

use crate::classical::{classical_fdn_numeric, diagonal_coefficient, f21_coefficient, rational};
use crate::error::Result;

use super::ctx::Ctx;
use super::{any_prime, Coord, Definition, IdentityId, Outcome};

/// Agreement required between the two sides of a numeric identity.
pub const NUMERIC_TOL: f64 = 1e-8;
/// Tail bound each side is summed to.
pub const SERIES_TOL: f64 = 1e-12;
/// Highest degree compared termwise in the diagonal identity.
pub const DIAG_DEGREE: u64 = 8;

const NOTES: &[&str] = &["numeric: sides agree within 1e-8, each summed to a tail bound below 1e-12"];

/// Points `(x, y)` for the cubic transformation of `F_1`.
pub const KOIKE_SHIGA_POINTS: &[(f64, f64)] = &[(0.9, 0.95), (0.8, 0.9), (0.95, 0.85), (0.75, 0.7), (0.99, 0.9)];
/// Points `x` for the cubic transformation of `₂F₁`.
pub const BORWEIN_POINTS: &[f64] = &[0.3, 0.2, 0.5, 0.7, 0.9, 0.99];

/// `(a, b_1, b_2, c)` for the two-variable transformations.
const F1_PARAMS: &[(f64, f64, f64, f64)] =
    &[(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1.0), (0.5, 0.25, 0.75, 1.5), (1.2, -0.4, 0.7, 2.3), (-0.6, 1.1, 0.3, 0.8)];

/// Points with `x`, `y`, `x/(x-1)`, `y/(y-1)` and `(x-y)/(1-y)` in the unit disk.
const F1_POINTS: &[((f64, f64), (f64, f64))] = &[
    ((0.3, 0.0), (-0.4, 0.0)),
    ((-0.5, 0.0), (0.2, 0.0)),
    ((0.1, 0.2), (-0.3, 0.1)),
    ((0.4, 0.0), (0.45, 0.0)),
    ((-0.7, 0.0), (-0.6, 0.0)),
];

/// Rational `(a, b_1, b_2, c)` as numerator/denominator pairs.
const DIAG_PARAMS: &[[(i64, i64); 4]] = &[
    [(1, 3), (1, 3), (1, 3), (1, 1)],
    [(1, 2), (1, 4), (3, 4), (5, 3)],
    [(-2, 5), (7, 3), (-1, 2), (3, 2)],
    [(2, 1), (1, 1), (3, 1), (7, 2)],
];

pub(super) fn definition(id: IdentityId) -> Option<Definition> {
    use IdentityId::*;
    let base = |coords: fn(&Ctx<'_>) -> Vec<Coord>, case: fn(&Ctx<'_>, &[u64]) -> Outcome| Definition {
        coords,
        readings: &["within tolerance"],
        case,
        block: None,
        compatible: any_prime,
        notes: NOTES,
    };
    let d = match id {
        ClassicalPfaff => base(|_| params_points(), classical_pfaff),
        ClassicalEuler => base(|_| params_points(), classical_euler),
        ClassicalDiag => Definition {
            readings: &["coefficients equal exactly"],
            notes: &["exact rational coefficients of degree 0 through 8"],
            ..base(
                |_| {
                    vec![
                        Coord { name: "params", size: DIAG_PARAMS.len() as u64 },
                        Coord { name: "degree", size: DIAG_DEGREE + 1 },
                    ]
                },
                classical_diag,
            )
        },
        KoikeShiga => base(
            |_| vec![Coord { name: "point", size: KOIKE_SHIGA_POINTS.len() as u64 }, Coord { name: "omega", size: 2 }],
            koike_shiga,
        ),
        Borwein => base(|_| vec![Coord { name: "point", size: BORWEIN_POINTS.len() as u64 }], borwein),
        _ => return None,
    };
    Some(d)
}

fn params_points() -> Vec<Coord> {
    vec![
        Coord { name: "params", size: F1_PARAMS.len() as u64 },
        Coord { name: "point", size: F1_POINTS.len() as u64 },
    ]
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn f1(a: f64, b1: f64, b2: f64, cc: f64, x: Complex64, y: Complex64) -> Result<Complex64> {
    Ok(classical_fdn_numeric(a, &[b1, b2], cc, &[x, y], SERIES_TOL)?.value)
}

fn close(lhs: Result<Complex64>, rhs: Result<Complex64>) -> Outcome {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => vec![Some((l - r).norm() <= NUMERIC_TOL)],
        _ => vec![Some(false)],
    }
}

/// `(1 - x)^s` on the principal branch.
fn power(x: Complex64, s: f64) -> Complex64 {
    (c(1.0, 0.0) - x).powf(s)
}

fn point(t: &[u64]) -> ((f64, f64, f64, f64), Complex64, Complex64) {
    let ((xr, xi), (yr, yi)) = F1_POINTS[t[1] as usize];
    (F1_PARAMS[t[0] as usize], c(xr, xi), c(yr, yi))
}

fn classical_pfaff(_: &Ctx<'_>, t: &[u64]) -> Outcome {
    let ((a, b1, b2, cc), x, y) = point(t);
    let one = c(1.0, 0.0);
    let lhs = f1(a, b1, b2, cc, x, y);
    let rhs = f1(cc - a, b1, b2, cc, x / (x - one), y / (y - one)).map(|v| power(x, -b1) * power(y, -b2) * v);
    close(lhs, rhs)
}

fn classical_euler(_: &Ctx<'_>, t: &[u64]) -> Outcome {
    let ((a, b1, b2, cc), x, y) = point(t);
    let one = c(1.0, 0.0);
    let lhs = f1(a, b1, b2, cc, x, y);
    let rhs = f1(cc - a, cc - b1 - b2, b2, cc, x, (x - y) / (one - y))
        .map(|v| power(x, cc - a - b1) * power(y, -b2) * v);
    close(lhs, rhs)
}

fn classical_diag(_: &Ctx<'_>, t: &[u64]) -> Outcome {
    let [a, b1, b2, cc]: [BigRational; 4] = DIAG_PARAMS[t[0] as usize].map(|(n, d)| rational(n, d));
    let m = t[1];
    let lhs = diagonal_coefficient(&a, &[b1.clone(), b2.clone()], &cc, m);
    let rhs = f21_coefficient(&a, &(b1 + b2), &cc, m);
    vec![Some(lhs.is_ok() && lhs == rhs)]
}

fn koike_shiga(_: &Ctx<'_>, t: &[u64]) -> Outcome {
    let (x, y) = KOIKE_SHIGA_POINTS[t[0] as usize];
    let third = 1.0 / 3.0;
    let arg = std::f64::consts::TAU / 3.0 * if t[1] == 0 { 1.0 } else { -1.0 };
    let w = Complex64::from_polar(1.0, arg);
    let (xc, yc) = (c(x, 0.0), c(y, 0.0));
    let s = c(1.0 + x + y, 0.0);
    let z1 = (c(1.0, 0.0) + w * xc + w * w * yc) / s;
    let z2 = (c(1.0, 0.0) + w * w * xc + w * yc) / s;
    let lhs = f1(third, third, third, 1.0, c(1.0 - x.powi(3), 0.0), c(1.0 - y.powi(3), 0.0));
    let rhs = f1(third, third, third, 1.0, z1.powi(3), z2.powi(3)).map(|v| v * 3.0 / s);
    close(lhs, rhs)
}

fn borwein(_: &Ctx<'_>, t: &[u64]) -> Outcome {
    let x = BORWEIN_POINTS[t[0] as usize];
    let f21 = |z: f64| Ok(classical_fdn_numeric(1.0 / 3.0, &[2.0 / 3.0], 1.0, &[c(z, 0.0)], SERIES_TOL)?.value);
    let lhs = f21(1.0 - x.powi(3));
    let rhs = f21(((1.0 - x) / (1.0 + 2.0 * x)).powi(3)).map(|v| v * (3.0 / (1.0 + 2.0 * x)));
    close(lhs, rhs)
}
