use std::collections::BTreeSet;

use proptest::prelude::*;
use qborel::rootsys::{CartanType, RootSystem, WeylWord};

fn systems() -> Vec<RootSystem> {
    vec![
        RootSystem::a(1),
        RootSystem::a(2),
        RootSystem::a(3),
        RootSystem::a(4),
        RootSystem::new(CartanType::B, 2).unwrap(),
        RootSystem::new(CartanType::B, 3).unwrap(),
        RootSystem::new(CartanType::C, 3).unwrap(),
        RootSystem::new(CartanType::G, 2).unwrap(),
    ]
}

fn case() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (0..systems().len()).prop_flat_map(|k| {
        let rank = systems()[k].rank();
        (Just(k), prop::collection::vec(0..rank, 0..12), prop::collection::vec(0..rank, 0..12))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reduce_word_keeps_the_element((k, w, _) in case()) {
        let rs = &systems()[k];
        let w = WeylWord(w);
        let r = rs.reduce_word(&w);
        prop_assert!(rs.is_reduced(&r));
        prop_assert_eq!(rs.element(&r), rs.element(&w));
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.len() % 2, w.len() % 2);
    }

    #[test]
    fn inversion_set_has_length_many_roots((k, w, _) in case()) {
        let rs = &systems()[k];
        let r = rs.reduce_word(&WeylWord(w));
        let e = rs.element(&r);
        let set = rs.inversion_set_of(&e);
        prop_assert_eq!(set.len(), rs.length(&e));
        let seq: BTreeSet<_> = rs.inversion_set(&r).unwrap().into_iter().collect();
        prop_assert_eq!(&seq, &set);
        let winv = rs.inverse(&e);
        for b in rs.positive_roots() {
            prop_assert_eq!(set.contains(b), !winv.apply(b).is_positive());
        }
    }

    #[test]
    fn lengths_add_iff_inversion_sets_are_disjoint((k, a, b) in case()) {
        let rs = &systems()[k];
        let (ea, eb) = (rs.element(&WeylWord(a)), rs.element(&WeylWord(b)));
        let disjoint = rs.inversion_set_of(&ea).is_disjoint(&rs.inversion_set_of(&eb));
        let l = rs.length(&rs.inverse(&ea).mul(&eb));
        prop_assert_eq!(l == rs.length(&ea) + rs.length(&eb), disjoint);
    }

    #[test]
    fn reflections_are_involutions((k, w, _) in case()) {
        let rs = &systems()[k];
        for b in rs.positive_roots() {
            let s = rs.reflection_in(b);
            prop_assert_eq!(s.apply(b), b.neg());
            for c in rs.positive_roots() {
                prop_assert_eq!(s.apply(&s.apply(c)), c.clone());
                prop_assert_eq!(rs.pairing(b, c), rs.pairing(c, b));
            }
        }
        let e = rs.element(&WeylWord(w));
        for c in rs.positive_roots() {
            prop_assert!(rs.is_root(&e.apply(c)) || rs.is_root(&e.apply(c).neg()));
        }
    }
}

#[test]
fn longest_elements() {
    for rs in systems() {
        let w0 = rs.longest_element();
        assert_eq!(w0.len(), rs.num_positive());
        assert!(rs.is_reduced(&w0));
        let e = rs.element(&w0);
        assert_eq!(rs.inverse(&e), e);
    }
}
