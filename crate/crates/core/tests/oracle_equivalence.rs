//! Library formulas against brute-force models built from explicit cycles.

use num_bigint::BigInt;
use proptest::prelude::*;

use orbit_count::operators::{iterate_orbits_to, product_orbits};
use orbit_count::oracle::{build, count_fixed, simulate_iterate, simulate_product};
use orbit_count::sequences::{builtin, BuiltinSpec, Sequence, View};
use orbit_count::transforms::{fix_to_orbit, orbit_to_fix};

fn orbits(terms: &[i64]) -> Sequence {
    Sequence::from_i64s(View::Orbit, terms).unwrap()
}

fn fixed_points(seq: &Sequence) -> Vec<BigInt> {
    let sys = build(seq).unwrap();
    (1..=seq.len() as u64)
        .map(|n| count_fixed(&sys, n).unwrap())
        .collect()
}

#[test]
fn fixed_points_of_builtins() {
    for name in ["zeta", "feigenbaum", "ternary", "id_orbits"] {
        let o = builtin(&BuiltinSpec::new(name), 12).unwrap();
        assert_eq!(
            fixed_points(&o),
            orbit_to_fix(&o).unwrap().terms(),
            "{name}"
        );
    }
    let shift =
        fix_to_orbit(&builtin(&BuiltinSpec::new("full_shift").with_int("a", 2), 10).unwrap())
            .unwrap();
    let expected: Vec<BigInt> = (1..=10).map(|n| BigInt::from(2u32).pow(n)).collect();
    assert_eq!(fixed_points(&shift), expected);
}

#[test]
fn two_shift_squared() {
    let shift =
        fix_to_orbit(&builtin(&BuiltinSpec::new("full_shift").with_int("a", 2), 3).unwrap())
            .unwrap();
    let traced = simulate_product(&build(&shift).unwrap(), &build(&shift).unwrap(), 3).unwrap();
    assert_eq!(traced, orbits(&[4, 6, 20]));
    assert_eq!(product_orbits(&shift, &shift).unwrap(), traced);
}

#[test]
fn period_doubling_iterates() {
    let f = builtin(&BuiltinSpec::new("feigenbaum"), 64).unwrap();
    for k in 1..=8u64 {
        let m = 64 / k as usize;
        assert_eq!(
            iterate_orbits_to(&f, k, m).unwrap(),
            simulate_iterate(&build(&f).unwrap(), k, m).unwrap(),
            "k = {k}"
        );
    }
}

fn small_orbits() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..=3, 1..=10)
}

proptest! {
    #[test]
    fn product_matches_tracing(u in small_orbits(), v in small_orbits()) {
        let (u, v) = (orbits(&u), orbits(&v));
        let len = u.len().min(v.len());
        let traced = simulate_product(&build(&u).unwrap(), &build(&v).unwrap(), len).unwrap();
        prop_assert_eq!(product_orbits(&u, &v).unwrap(), traced);
    }

    #[test]
    fn iterate_matches_tracing(o in small_orbits(), k in 1u64..=5) {
        let o = orbits(&o);
        let m = o.len() / k as usize;
        prop_assume!(m > 0);
        let traced = simulate_iterate(&build(&o).unwrap(), k, m).unwrap();
        prop_assert_eq!(iterate_orbits_to(&o, k, m).unwrap(), traced);
    }

    #[test]
    fn fixed_points_match_divisor_sums(o in prop::collection::vec(0i64..=6, 1..=16)) {
        let o = orbits(&o);
        let fix = orbit_to_fix(&o).unwrap();
        prop_assert_eq!(fixed_points(&o), fix.terms().to_vec());
    }
}
