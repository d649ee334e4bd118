use std::collections::BTreeSet;

use derangements::bijections::pm_partner;
use derangements::enumerate::{decompose_insert, insert_case};
use derangements::perm::Permutation;
use derangements::poly::{self, Monomial, MultiPoly, Var};
use derangements::series::{Flavor, PowerSeries};
use derangements::signed::{SignClass, SignedPermutation};
use num_bigint::BigInt;
use proptest::prelude::*;

fn perm_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|w| Permutation::new(w).unwrap())
    })
}

fn signed_strategy(max: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max).prop_flat_map(|n| {
        (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
            |(w, signs)| {
                let window = w.iter().zip(signs).map(|(&v, neg)| if neg { -v } else { v }).collect();
                SignedPermutation::new(window).unwrap()
            },
        )
    })
}

fn var_strategy() -> impl Strategy<Value = Var> {
    prop_oneof![
        (1u32..4).prop_map(Var::x),
        (1u32..4).prop_map(Var::y),
        Just(poly::X),
        Just(poly::LAMBDA),
        Just(poly::A),
        Just(poly::ORTHO),
    ]
}

fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec((var_strategy(), 1u32..3), 0..3), -5i64..6), 0..5).prop_map(
        |terms| {
            let mut p = MultiPoly::zero();
            for (factors, c) in terms {
                p.add_term(Monomial::from_pairs(factors), BigInt::from(c));
            }
            p
        },
    )
}

fn set_map(s: &BTreeSet<u32>, n: u32) -> BTreeSet<u32> {
    s.iter().map(|&i| n + 1 - i).collect()
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_roundtrip(a in poly_strategy()) {
        let back: MultiPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(), r in poly_strategy()) {
        let s = |p: &MultiPoly| p.subs([(Var::x(1), r.clone())]);
        prop_assert_eq!(s(&(&a * &b)), s(&a) * s(&b));
        prop_assert_eq!(s(&(&a + &b)), s(&a) + s(&b));
    }

    #[test]
    fn flip_exchanges_index_and_value_statistics(s in perm_strategy(9)) {
        let n = s.len() as u32;
        let f = s.flip();
        prop_assert_eq!(f.flip(), s.clone());
        let (a, b) = (s.statistics(), f.statistics());
        prop_assert_eq!(set_map(&a.rlm_i, n), b.rlm_v);
        prop_assert_eq!(set_map(&a.exc_i, n), b.exc_v);
        prop_assert_eq!(set_map(&a.fix, n), b.fix);
        prop_assert_eq!(a.cyc, b.cyc);
        if s.at(n) <= n {
            prop_assert_eq!(f.at(n + 1 - s.at(n)), 1);
        }
    }

    #[test]
    fn cycle_and_inversion_parity(s in perm_strategy(9)) {
        let st = s.statistics();
        prop_assert_eq!((st.cyc + st.inv + s.len()) % 2, 0);
        prop_assert_eq!(s.compose(&s.inverse()).unwrap(), Permutation::identity(s.len()));
        prop_assert_eq!(s.to_string().parse::<Permutation>().unwrap(), s);
    }

    #[test]
    fn type_b_excedances_partition(s in signed_strategy(8)) {
        let st = s.stats_b();
        let all: BTreeSet<u32> = (1..=s.len() as u32).collect();
        prop_assert!(st.exc_b.is_disjoint(&st.anexc_b));
        prop_assert_eq!(st.exc_b.union(&st.anexc_b).copied().collect::<BTreeSet<_>>(), all);
        let neg = s.negate_all().stats_b();
        prop_assert_eq!(neg.exc_b, st.anexc_b);
        prop_assert_eq!(neg.cyc_b, st.cyc_b);
        prop_assert_eq!(s.to_string().parse::<SignedPermutation>().unwrap(), s);
    }

    #[test]
    fn insertion_roundtrip(s in signed_strategy(8)) {
        let (a, k, tau) = decompose_insert(&s);
        prop_assert_eq!(SignedPermutation::insert(a, k, &tau).unwrap(), s.clone());
        prop_assert_eq!(insert_case(&s).is_some(), s.class() == SignClass::Mixed);
    }

    #[test]
    fn mixed_matching_is_an_involution(s in signed_strategy(7)) {
        match pm_partner(&s) {
            None => prop_assert_ne!(s.class(), SignClass::Mixed),
            Some(t) => {
                prop_assert_ne!(&t, &s);
                prop_assert_eq!(pm_partner(&t), Some(s.clone()));
                prop_assert_eq!(t.image(), s.image());
                prop_assert_eq!(insert_case(&t), insert_case(&s));
            }
        }
    }

    #[test]
    fn series_inverse_and_log(tail in prop::collection::vec(-4i64..5, 1..7), egf in any::<bool>()) {
        let flavor = if egf { Flavor::Egf } else { Flavor::Ogf };
        let mut values = vec![1];
        values.extend(tail);
        let f = PowerSeries::from_scalars(&values, flavor);
        let one = PowerSeries::one(f.order(), flavor);
        prop_assert_eq!(f.mul(&f.inverse().unwrap()).unwrap(), one);
        let back = f.log().unwrap().exp().unwrap();
        prop_assert_eq!(back.truncate(f.order() - 1), f.truncate(f.order() - 1));
    }
}
