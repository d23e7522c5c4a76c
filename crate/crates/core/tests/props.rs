//! Property-based invariants over randomized weights and group elements.

use jantzen_core::weylact::{dominant_reduce, enumerate_weyl};
use jantzen_core::{Divisor, Family, RootSystem, Weight};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (2usize..=4).prop_map(|m| (Family::A, m)),
        (2usize..=3).prop_map(|m| (Family::B, m)),
        (2usize..=3).prop_map(|m| (Family::C, m)),
        Just((Family::D, 3)),
    ]
}

fn shifted_weight() -> impl Strategy<Value = (Family, usize, Vec<i64>)> {
    family().prop_flat_map(|(f, m)| {
        (
            Just(f),
            Just(m),
            proptest::collection::vec(-9i64..=9, m..=m),
        )
    })
}

proptest! {
    #[test]
    fn reduce_lands_in_orbit((f, m, coords) in shifted_weight()) {
        let rs = RootSystem::new(f, m).unwrap();
        let x = Weight::from_ints(&coords, true);
        let red = dominant_reduce(&x, &rs);
        // the witness maps x to the dominant representative
        prop_assert_eq!(red.witness.apply(&x), red.dominant.clone());
        // idempotent: reducing the dominant representative is trivial
        let again = dominant_reduce(&red.dominant, &rs);
        prop_assert_eq!(&again.dominant, &red.dominant);
        prop_assert!(again.witness.is_identity());
        if red.det != 0 {
            prop_assert_eq!(red.det, red.witness.det());
            prop_assert!(red.dominant.is_regular_dominant_shifted(&rs));
        }
    }

    #[test]
    fn group_inverse_and_det((f, m, coords) in shifted_weight(), seed in 0usize..10000) {
        let rs = RootSystem::new(f, m).unwrap();
        let group = enumerate_weyl(&rs, 1 << 16).unwrap();
        let w = &group[seed % group.len()];
        let u = &group[(seed / group.len()) % group.len()];
        let x = Weight::from_ints(&coords, true);
        prop_assert_eq!(w.inverse().apply(&w.apply(&x)), x.clone());
        let wu = w.compose(u);
        prop_assert_eq!(wu.det(), w.det() * u.det());
        prop_assert_eq!(wu.apply(&x), w.apply(&u.apply(&x)));
    }

    #[test]
    fn divisor_ring_laws(a in 1i64..5000, b in 1i64..5000) {
        let da = Divisor::of_int(a).unwrap();
        let db = Divisor::of_int(b).unwrap();
        let dab = Divisor::of_int(a * b).unwrap();
        prop_assert_eq!(da.clone() + db.clone(), dab.clone());
        prop_assert_eq!(dab - db, da);
    }

    #[test]
    fn binomial_symmetry(r in 0u64..=60, j in 0u64..=60) {
        prop_assume!(j <= r);
        prop_assert_eq!(Divisor::of_binomial(r, j), Divisor::of_binomial(r, r - j));
    }

    #[test]
    fn dominance_is_a_partial_order((f, m, coords) in shifted_weight()) {
        let rs = RootSystem::new(f, m).unwrap();
        let red = dominant_reduce(&Weight::from_ints(&coords, true), &rs);
        if red.det == 0 {
            return Ok(());
        }
        let lam = red.dominant.unshift(&rs).canonical(&rs);
        prop_assert!(lam.dominance_leq(&lam, &rs));
        // subtracting a positive root moves strictly down when the result
        // stays in the cone
        for beta in rs.positive_roots() {
            let lower = lam.sub_root_multiple(beta, 1);
            if lower.is_dominant_unshifted(&rs) {
                let lower = lower.canonical(&rs);
                prop_assert!(lower.dominance_leq(&lam, &rs));
                prop_assert!(lower == lam || !lam.dominance_leq(&lower, &rs));
            }
        }
    }
}
