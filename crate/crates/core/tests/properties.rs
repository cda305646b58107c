use proptest::prelude::*;
use syzygy_core::{
    chain::{chain_semigroups, first_finite_type_index},
    classify, NumericalSemigroup, RelativeIdeal,
};

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..24, 2..5)
        .prop_filter_map("gcd must be 1", |g| NumericalSemigroup::from_generators(&g).ok())
}

fn semigroup_and_ideals() -> impl Strategy<Value = (NumericalSemigroup, Vec<i64>, Vec<i64>)> {
    (
        semigroup(),
        prop::collection::vec(-8i64..25, 1..4),
        prop::collection::vec(-8i64..25, 1..4),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generators_are_a_fixed_point(h in semigroup()) {
        let again = NumericalSemigroup::from_generators(h.generators()).unwrap();
        prop_assert_eq!(&again, &h);
    }

    #[test]
    fn membership_is_additively_closed(h in semigroup(), a in 0i64..60, b in 0i64..60) {
        if h.contains(a) && h.contains(b) {
            prop_assert!(h.contains(a + b));
        }
        prop_assert!(h.contains(h.conductor() + a));
        prop_assert!(!h.contains(h.frobenius()));
    }

    #[test]
    fn apery_set_determines_frobenius(h in semigroup()) {
        let m = h.multiplicity();
        let apery = h.apery_set(m).unwrap();
        prop_assert_eq!(apery.len() as i64, m);
        prop_assert_eq!(apery.iter().max().unwrap() - m, h.frobenius());
        // Selmer: genus = sum(w) / m - (m - 1) / 2.
        let total: i64 = apery.iter().sum();
        prop_assert_eq!(2 * total, m * (2 * h.genus() as i64 + m - 1));
    }

    #[test]
    fn genus_and_type_bounds(h in semigroup()) {
        let g = h.genus() as i64;
        prop_assert!(2 * g > h.frobenius());
        prop_assert!((h.semigroup_type() as i64) < h.multiplicity());
        prop_assert_eq!(h.is_symmetric().unwrap(), 2 * g == h.frobenius() + 1);
    }

    #[test]
    fn duality_is_an_involution((h, ig, _) in semigroup_and_ideals()) {
        let i = RelativeIdeal::from_generators(&h, &ig).unwrap();
        let k = h.canonical_ideal().unwrap();
        let kk = k.quotient(&k.quotient(&i).unwrap()).unwrap();
        prop_assert_eq!(kk, i);
    }

    #[test]
    fn dual_reverses_inclusion((h, ig, jg) in semigroup_and_ideals()) {
        let i = RelativeIdeal::from_generators(&h, &ig).unwrap();
        let mut all = ig.clone();
        all.extend(&jg);
        let j = RelativeIdeal::from_generators(&h, &all).unwrap();
        prop_assert!(i.is_subset(&j));
        prop_assert!(j.dual().is_subset(&i.dual()));
    }

    #[test]
    fn reflexive_closure_is_a_closure((h, ig, _) in semigroup_and_ideals()) {
        let i = RelativeIdeal::from_generators(&h, &ig).unwrap();
        let (c, was) = i.reflexive_closure();
        prop_assert!(i.is_subset(&c));
        prop_assert_eq!(was, c == i);
        let (cc, fixed) = c.reflexive_closure();
        prop_assert!(fixed);
        prop_assert_eq!(cc, c);
    }

    #[test]
    fn quotient_and_sum_are_adjoint((h, ig, jg) in semigroup_and_ideals()) {
        let i = RelativeIdeal::from_generators(&h, &ig).unwrap();
        let j = RelativeIdeal::from_generators(&h, &jg).unwrap();
        let q = i.quotient(&j).unwrap();
        prop_assert!(q.sum(&j).unwrap().is_subset(&i));
        prop_assert_eq!(i.shift(5).quotient(&j).unwrap(), q.shift(5));
    }

    #[test]
    fn classification_is_consistent(h in semigroup()) {
        let r = classify(&h).unwrap();
        prop_assert!(r.invariant_violations().is_empty(), "{:?}", r.invariant_violations());
        let ag = r.ag_conditions.unwrap();
        prop_assert!(ag.all_agree());
    }

    #[test]
    fn chain_strictly_lowers_genus(h in semigroup()) {
        let (steps, complete) = chain_semigroups(&h, 64).unwrap();
        prop_assert!(complete);
        prop_assert!(steps.last().unwrap().is_naturals());
        prop_assert!(steps.len() <= h.genus() + 1);
        prop_assert!(steps.windows(2).all(|w| w[1].genus() < w[0].genus()));
        let first = first_finite_type_index(&h).unwrap();
        for (j, s) in steps.iter().enumerate().take(first + 1) {
            prop_assert_eq!(first_finite_type_index(s).unwrap(), first - j);
        }
    }
}
