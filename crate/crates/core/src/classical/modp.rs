use crate::error::{Error, Result};
use crate::field::PrimeField;

/// `F_D^(n)[a; b; c; x]` truncated at total degree `M`, summed in `F_p`.
///
/// Parameters are residues; a rational `k/d` enters as `k·d^{-1}` (see
/// [`PrimeField::rational`]).
pub fn truncated_fdn_fp(field: &PrimeField, a: u64, bs: &[u64], c: u64, xs: &[u64], order: u64) -> Result<u64> {
    if bs.is_empty() || bs.len() != xs.len() {
        return Err(Error::PreconditionViolated("need n >= 1 b parameters and as many arguments".into()));
    }
    if order >= field.p() {
        return Err(Error::DomainError(format!("truncation degree {order} must be below p = {}", field.p())));
    }
    let len = order as usize + 1;
    // ratio[m] = (a)_m / (c)_m
    let mut ratio = vec![1u64; len];
    let (mut pa, mut pc) = (1u64, 1u64);
    for m in 1..len {
        pa = field.mul(pa, field.add(a, m as u64 - 1));
        pc = field.mul(pc, field.add(c, m as u64 - 1));
        let inv = field.inv(pc).ok_or(Error::PoleInC { index: m as u64 })?;
        ratio[m] = field.mul(pa, inv);
    }
    let mut acc: Option<Vec<u64>> = None;
    for (&b, &x) in bs.iter().zip(xs) {
        // (b)_k x^k / k!
        let mut t = vec![1u64; len];
        for k in 1..len {
            let step = field.mul(field.add(b, k as u64 - 1), x);
            t[k] = field.mul(field.mul(t[k - 1], step), field.inv(k as u64).expect("k < p"));
        }
        acc = Some(match acc {
            None => t,
            Some(prev) => {
                let mut next = vec![0u64; len];
                for (i, &u) in prev.iter().enumerate() {
                    for (j, &v) in t.iter().take(len - i).enumerate() {
                        next[i + j] = field.add(next[i + j], field.mul(u, v));
                    }
                }
                next
            }
        });
    }
    let slices = acc.expect("at least one variable");
    Ok(slices.iter().zip(&ratio).fold(0, |s, (&x, &r)| field.add(s, field.mul(x, r))))
}

/// Two-variable case of [`truncated_fdn_fp`].
#[allow(clippy::too_many_arguments)]
pub fn truncated_fd2_fp(
    field: &PrimeField,
    a: u64,
    b1: u64,
    b2: u64,
    c: u64,
    s: u64,
    t: u64,
    order: u64,
) -> Result<u64> {
    truncated_fdn_fp(field, a, &[b1, b2], c, &[s, t], order)
}

fn cubic_exponent(field: &PrimeField) -> Result<u64> {
    let p = field.p();
    if p % 3 != 1 {
        return Err(Error::BadPrime { p, reason: "p is not 1 mod 3".into() });
    }
    Ok((p - 1) / 3)
}

/// Coefficient of `x^{p-1}` in `(x^2 (1-x)(1-sx)(1-tx))^{(p-1)/3}`, by
/// direct expansion.
pub fn hasse_invariant(field: &PrimeField, s: u64, t: u64) -> Result<u64> {
    let m = cubic_exponent(field)?;
    let (s, t) = (s % field.p(), t % field.p());
    // Only the cubic factor matters: x^{2m} shifts the target down to x^{p-1-2m} = x^m.
    let base = [1, field.neg(field.add(field.add(1, s), t)), field.add(field.add(s, t), field.mul(s, t)), field.neg(field.mul(s, t))];
    let mut poly = vec![1u64];
    for _ in 0..m {
        let mut next = vec![0u64; poly.len() + 3];
        for (i, &u) in poly.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (j, &v) in base.iter().enumerate() {
                next[i + j] = field.add(next[i + j], field.mul(u, v));
            }
        }
        next.truncate(m as usize + 1);
        poly = next;
    }
    Ok(poly.get(m as usize).copied().unwrap_or(0))
}

/// `(-1)^m ∑_{j+k ≤ m} C(m, j+k) C(m, j) C(m, k) s^j t^k` with `m = (p-1)/3`.
pub fn hasse_binomial_form(field: &PrimeField, s: u64, t: u64) -> Result<u64> {
    let m = cubic_exponent(field)? as usize;
    let mut binom = vec![1u64; m + 1];
    for k in 1..=m {
        binom[k] = field.mul(field.mul(binom[k - 1], (m - k + 1) as u64), field.inv(k as u64).expect("k < p"));
    }
    let mut total = 0;
    for j in 0..=m {
        for k in 0..=m - j {
            let term = field.mul(field.mul(binom[j + k], binom[j]), binom[k]);
            let mono = field.mul(field.pow(s, j as u64), field.pow(t, k as u64));
            total = field.add(total, field.mul(term, mono));
        }
    }
    Ok(if m % 2 == 1 { field.neg(total) } else { total })
}

/// `(ζ_1, ζ_2)` with `ζ_1 = (1+ωλ+ω²μ)/(1+λ+μ)`, `ζ_2 = (1+ω²λ+ωμ)/(1+λ+μ)`
/// and `ω = g^{(p-1)/3}`.
pub fn zeta_pair(field: &PrimeField, lambda: u64, mu: u64) -> Result<(u64, u64)> {
    let m = cubic_exponent(field)?;
    zeta_pair_with(field, lambda, mu, field.gen_pow(m))
}

/// [`zeta_pair`] for an explicit primitive cube root of unity `ω`.
pub fn zeta_pair_with(field: &PrimeField, lambda: u64, mu: u64, omega: u64) -> Result<(u64, u64)> {
    cubic_exponent(field)?;
    if omega == 1 || field.pow(omega, 3) != 1 {
        return Err(Error::PreconditionViolated(format!("{omega} is not a primitive cube root of unity")));
    }
    let den = field.add(field.add(1, lambda), mu);
    let inv = field.inv(den).ok_or(Error::DegenerateDenominator)?;
    let w2 = field.mul(omega, omega);
    let z1 = field.add(field.add(1, field.mul(omega, lambda)), field.mul(w2, mu));
    let z2 = field.add(field.add(1, field.mul(w2, lambda)), field.mul(omega, mu));
    Ok((field.mul(z1, inv), field.mul(z2, inv)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn truncation_anchors() {
        let f = f7();
        let third = f.rational(1, 3).unwrap();
        assert_eq!(third, 5);
        assert_eq!(truncated_fd2_fp(&f, third, third, third, 1, 3, 4, 0).unwrap(), 1);
        assert_eq!(truncated_fd2_fp(&f, third, third, third, 1, 0, 0, 2).unwrap(), 1);
        assert_eq!(truncated_fd2_fp(&f, third, third, third, 1, 1, 1, 2).unwrap(), 1);
    }

    #[test]
    fn pole_mod_p() {
        let f = f7();
        // c = 5: (c)_3 = 5·6·7 ≡ 0
        assert_eq!(truncated_fd2_fp(&f, 1, 1, 1, 5, 1, 1, 3), Err(Error::PoleInC { index: 3 }));
    }

    #[test]
    fn hasse_anchors() {
        let f = f7();
        assert_eq!(hasse_invariant(&f, 1, 1).unwrap(), 1);
        assert_eq!(hasse_invariant(&f, 0, 0).unwrap(), 1);
        for s in 0..7 {
            for t in 0..7 {
                // 1 + 4s + 4t + s² + t² + 4st
                let expected = (1 + 4 * s + 4 * t + s * s + t * t + 4 * s * t) % 7;
                assert_eq!(hasse_invariant(&f, s, t).unwrap(), expected);
                assert_eq!(hasse_binomial_form(&f, s, t).unwrap(), expected);
            }
        }
        assert!(matches!(hasse_invariant(&PrimeField::new(11).unwrap(), 1, 1), Err(Error::BadPrime { .. })));
    }

    #[test]
    fn zeta_pairs() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(zeta_pair(&f, 0, 0).unwrap(), (1, 1));
        for l in 0..13 {
            if f.add(1, f.mul(2, l)) == 0 {
                assert_eq!(zeta_pair(&f, l, l), Err(Error::DegenerateDenominator));
                continue;
            }
            let (z1, z2) = zeta_pair(&f, l, l).unwrap();
            let z = f.div(f.sub(1, l), f.add(1, f.mul(2, l))).unwrap();
            assert_eq!((z1, z2), (z, z));
        }
        let w = f.gen_pow(4);
        let (a, b) = zeta_pair_with(&f, 3, 5, w).unwrap();
        assert_eq!(zeta_pair_with(&f, 3, 5, f.mul(w, w)).unwrap(), (b, a));
        assert!(zeta_pair_with(&f, 3, 5, 1).is_err());
    }
}
