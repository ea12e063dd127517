use ff_lauricella::appell::{pdn, AppellParams};
use ff_lauricella::character::delta_char;
use ff_lauricella::charsum::{jacobi_sum, JacobiTable};
use ff_lauricella::classical::{
    classical_fdn_truncated, hasse_binomial_form, hasse_invariant, rational, truncated_fdn_fp, SeriesParams,
};
use ff_lauricella::curves::{
    count_points_naive, genus_picard, genus_xn, nth_power_count, trace_naive, CurveInstance, CurveSpec,
};
use ff_lauricella::{Character, CycValue, PrimeField};
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

const PRIMES: &[u64] = &[5, 7, 11, 13, 19, 31];

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(PRIMES)
}

fn cubic_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(&[7u64, 13, 19, 31, 37][..])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn characters_are_multiplicative(p in prime(), e in 0i64..60, a in 0u64..64, b in 0u64..64) {
        let f = PrimeField::new(p).unwrap();
        let chi = Character::new(&f, e);
        prop_assert_eq!(chi.eval(f.mul(a % p, b % p)), chi.eval(a) * chi.eval(b));
    }

    #[test]
    fn orthogonality(p in prime(), e in 0i64..60, x in 0u64..64) {
        let f = PrimeField::new(p).unwrap();
        let chi = Character::new(&f, e);
        let over_x: CycValue = f.elements().map(|y| chi.eval_full(y)).sum();
        prop_assert_eq!(over_x, CycValue::integer(delta_char(&chi) * f.order() as i64));
        let over_chars: CycValue = Character::all(&f).map(|c| c.eval_full(x)).sum();
        let expected = if x % p == 1 { f.order() as i64 } else { 0 };
        prop_assert_eq!(over_chars, CycValue::integer(expected));
    }

    #[test]
    fn embedding_is_coherent(p in prime(), e in 0i64..60, a in 1u64..64) {
        let f = PrimeField::new(p).unwrap();
        prop_assume!(a % p != 0);
        let chi = Character::new(&f, e);
        let small = chi.eval(a);
        prop_assert_eq!(small.level(), chi.order());
        prop_assert_eq!(small.embed(f.order()).unwrap(), chi.eval_full(a));
    }

    #[test]
    fn jacobi_table_matches_sums(p in prime(), a in 0i64..60, b in 0i64..60) {
        let f = PrimeField::new(p).unwrap();
        let table = JacobiTable::new(&f);
        let (x, y) = (Character::new(&f, a), Character::new(&f, b));
        prop_assert_eq!(table.jacobi(x, y), &jacobi_sum(x, y).unwrap());
    }

    #[test]
    fn pd_symmetric_in_pairs(
        p in prime(),
        e in prop::array::uniform4(0i64..60),
        l1 in 0u64..64,
        l2 in 0u64..64,
    ) {
        let f = PrimeField::new(p).unwrap();
        let [a, b1, b2, c] = e.map(|k| Character::new(&f, k));
        let fwd = pdn(&AppellParams::two(a, b1, b2, c, l1, l2).unwrap()).unwrap();
        let rev = pdn(&AppellParams::two(a, b2, b1, c, l2, l1).unwrap()).unwrap();
        prop_assert_eq!(fwd, rev);
    }

    #[test]
    fn power_count_matches_enumeration(p in prime(), a in 1u64..64, n in 1u64..7) {
        let f = PrimeField::new(p).unwrap();
        prop_assume!(a % p != 0 && f.order() % n == 0);
        let direct = f.elements().filter(|&x| f.pow(x, n) == a % p).count() as u64;
        prop_assert_eq!(nth_power_count(&f, a, n).unwrap(), direct);
    }

    #[test]
    fn genus_formulas_agree(n in 2u64..8, i in 1u64..6, j in 1u64..6, ks in prop::collection::vec(1u64..6, 1..4)) {
        let Ok(spec) = CurveSpec::new(n, i, j, ks) else { return Ok(()) };
        prop_assert_eq!(genus_picard(&spec).unwrap(), genus_xn(n, &spec.model_exponents()).unwrap());
    }

    /// With simple roots and `gcd(N, degree) = 1` the plane model is smooth
    /// away from one totally ramified point at infinity, so the Weil bound
    /// applies to its count.
    #[test]
    fn weil_bound_on_simple_models(
        p in prime(),
        n in prop::sample::select(&[2u64, 3, 4, 6][..]),
        ls in prop::collection::vec(2u64..64, 1..3),
    ) {
        let f = PrimeField::new(p).unwrap();
        let spec = CurveSpec::new(n, 1, 1, vec![1; ls.len()]);
        prop_assume!(spec.as_ref().is_ok_and(|s| num_integer::gcd(n, s.degree()) == 1));
        let spec = spec.unwrap();
        let inst = CurveInstance::new(&f, spec.clone(), ls).unwrap();
        prop_assume!(inst.is_smooth_family_member());
        let g = genus_picard(&spec).unwrap() as i64;
        let a = trace_naive(&inst);
        prop_assert!(a * a <= 4 * g * g * p as i64, "a_p = {} g = {}", a, g);
        prop_assert_eq!(count_points_naive(&inst) as i64, 1 + p as i64 - a);
    }

    #[test]
    fn hasse_forms_agree(p in cubic_prime(), s in 0u64..64, t in 0u64..64) {
        let f = PrimeField::new(p).unwrap();
        prop_assert_eq!(hasse_invariant(&f, s % p, t % p).unwrap(), hasse_binomial_form(&f, s % p, t % p).unwrap());
    }

    /// The mod-p truncation is the reduction of the exact rational one when
    /// every denominator is prime to p.
    #[test]
    fn truncation_reduces_mod_p(
        p in prime(),
        nums in prop::array::uniform4(-6i64..7),
        dens in prop::array::uniform4(1i64..5),
        xs in prop::array::uniform2(-5i64..6),
        order in 0u64..4,
    ) {
        let f = PrimeField::new(p).unwrap();
        prop_assume!(dens.iter().all(|d| d % p as i64 != 0) && order < p);
        let params = SeriesParams::new(
            rational(nums[0], dens[0]),
            vec![rational(nums[1], dens[1]), rational(nums[2], dens[2])],
            rational(nums[3], dens[3]),
            xs.iter().map(|&x| rational(x, 1)).collect(),
        ).unwrap();
        let fp = |k: usize| f.rational(nums[k], dens[k]).unwrap();
        let modp = truncated_fdn_fp(&f, fp(0), &[fp(1), fp(2)], fp(3), &[f.reduce(xs[0]), f.reduce(xs[1])], order);
        match classical_fdn_truncated(&params, order) {
            Ok(exact) => {
                prop_assume!(modp.is_ok());
                let den = exact.denom().clone() % p;
                prop_assume!(!den.is_zero());
                let num = f.reduce((exact.numer() % (p as i64)).to_i64().unwrap());
                let den = f.reduce(den.to_i64().unwrap());
                prop_assert_eq!(modp.unwrap(), f.div(num, den).unwrap());
            }
            Err(_) => prop_assert!(modp.is_err()),
        }
    }
}
