use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use aode::alg::AlgNum;
use aode::gcd::{gcd, squarefree_part};
use aode::harness::{generate, implicitize};
use aode::parse::{format_instance, parse_instance};
use aode::poly::{MultiPoly, RatFunc, UniPoly};
use aode::resultant::{resultant, sylvester_resultant};
use aode::roots::quadratic_modulus;
use aode::scalar::{q, qf};
use aode::solver::{shift_equivalent, verify_solution};
use aode::{QMultiPoly, QPoly, QRatFunc};

fn small_uni(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

fn small_multi(nvars: usize, deg: u32) -> impl Strategy<Value = QMultiPoly> {
    let monos: Vec<Vec<u32>> = (0..(deg + 1).pow(nvars as u32))
        .map(|k| (0..nvars).map(|i| (k / (deg + 1).pow(i as u32)) % (deg + 1)).collect::<Vec<u32>>())
        .filter(|m| m.iter().sum::<u32>() <= deg)
        .collect();
    prop::collection::vec(-4i64..=4, monos.len()).prop_map(move |cs| {
        MultiPoly::from_terms(nvars, monos.iter().zip(cs).filter(|(_, c)| *c != 0).map(|(m, c)| (m.clone(), q(c))))
    })
}

fn nonconstant_ratfunc() -> impl Strategy<Value = QRatFunc> {
    (small_uni(2), small_uni(2)).prop_filter_map("constant or zero denominator", |(n, d)| {
        RatFunc::normalize(n, d).ok().filter(|r| !r.is_constant())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_is_canonical(n in small_uni(3), d in small_uni(3)) {
        prop_assume!(!d.is_zero());
        let r = RatFunc::normalize(n, d).unwrap();
        prop_assert!(r.num().gcd(r.den()).is_constant());
        prop_assert!(r.den().lc().is_one());
    }

    #[test]
    fn rational_is_reduced(a in -1000i64..1000, b in 1i64..1000) {
        let r = qf(a, b);
        prop_assert!(r.denom().is_positive());
        prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one() || r.is_zero());
    }

    #[test]
    fn instance_text_round_trip(f in small_multi(2, 3)) {
        prop_assume!(f.involves(1));
        prop_assert_eq!(parse_instance(&format_instance(&f)).unwrap(), f);
    }

    #[test]
    fn resultant_matches_sylvester(f in small_multi(3, 2), g in small_multi(3, 2), var in 0usize..3) {
        prop_assume!(f.degree_in(var).unwrap_or(0) > 0 && g.degree_in(var).unwrap_or(0) > 0);
        prop_assert_eq!(resultant(&f, &g, var).unwrap(), sylvester_resultant(&f, &g, var));
    }

    #[test]
    fn gcd_divides_and_catches_common_factor(a in small_multi(2, 2), b in small_multi(2, 2), c in small_multi(2, 2)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let (ac, bc) = (&a * &c, &b * &c);
        let g = gcd(&ac, &bc);
        prop_assert!(ac.div_exact(&g).is_some() && bc.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.normalized()).is_some());
    }

    #[test]
    fn squarefree_part_of_square(a in small_multi(2, 2)) {
        prop_assume!(!a.is_constant());
        let s = squarefree_part(&a);
        prop_assert_eq!(squarefree_part(&a.pow(2)), s.clone());
        prop_assert!(a.div_exact(&s).is_some());
    }

    #[test]
    fn quadratic_field_inverse(a in -6i64..=6, b in -6i64..=6, d in prop::sample::select(vec![2i64, 3, 5, -1, -3])) {
        prop_assume!(a != 0 || b != 0);
        let m = quadratic_modulus(&d.into());
        let x = AlgNum::from_poly(UniPoly::from_ints(&[a, b]), &m);
        let inv = x.try_inv().unwrap();
        prop_assert!((x * inv - AlgNum::one()).is_zero());
    }

    #[test]
    fn implicitization_vanishes_on_its_source(u in nonconstant_ratfunc()) {
        let f = implicitize(&u).unwrap();
        prop_assert!(verify_solution(&f, &u));
        prop_assert!(verify_solution(&f, &u.shift(&qf(1, 3))));
    }

    #[test]
    fn shift_family_is_recognised(u in nonconstant_ratfunc(), c in -5i64..=5) {
        prop_assert_eq!(shift_equivalent(&u, &u.shift(&q(c))), Some(q(c)));
    }
}

#[test]
fn generated_instances_are_solved_by_shifts() {
    for seed in 0..10 {
        let inst = generate(seed, 1).unwrap();
        for k in [-2i64, 5] {
            assert!(verify_solution(&inst.f, &inst.planted.shift_int(k)));
        }
    }
}
