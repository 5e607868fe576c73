//! Property tests over randomly drawn small configurations. The
//! exhaustive desk-scale sweeps live in the `checks` module; these cover
//! the same invariants from the generator side.

use proptest::prelude::*;

use tubecat_core::arcs::ShiftPower;
use tubecat_core::intersect::{cover_crossings, crossing_numbers, neg_crossings, pos_crossings};
use tubecat_core::oracle::{build_rep, hom_dim_linalg};
use tubecat_core::tube::{ext_dim_cluster, ext_dim_tube, hom_dim, module_of_arc};
use tubecat_core::{AnnulusArc, IndecModule, Rank, StripArc};

fn arc_strategy() -> impl Strategy<Value = AnnulusArc> {
    (1i64..=6, 0i64..6, 2i64..=20).prop_map(|(n, a, len)| AnnulusArc::new(n, a, len).unwrap())
}

fn arc_pair_strategy() -> impl Strategy<Value = (AnnulusArc, AnnulusArc)> {
    (1i64..=6, 0i64..6, 2i64..=20, 0i64..6, 2i64..=20).prop_map(|(n, a, la, b, lb)| {
        (
            AnnulusArc::new(n, a, la).unwrap(),
            AnnulusArc::new(n, b, lb).unwrap(),
        )
    })
}

proptest! {
    #[test]
    fn shift_composition((a, b) in (-40i64..40, -40i64..40), m in -5i64..5, k in -5i64..5, n in 1i64..=8) {
        prop_assume!(b > a + 1);
        let arc = StripArc::new(a, b).unwrap();
        let double = arc.shift(ShiftPower(m), n).shift(ShiftPower(k), n);
        prop_assert_eq!(double, arc.shift(ShiftPower(m).compose(ShiftPower(k)), n));
    }

    #[test]
    fn projection_collapses_deck_orbit(arc in arc_strategy(), m in -5i64..5) {
        let lift = arc.canonical_lift();
        let shifted = lift.shift(ShiftPower(m), arc.n());
        prop_assert_eq!(shifted.project(arc.n()).unwrap(), arc);
        prop_assert_eq!(arc.canonical_lift().project(arc.n()).unwrap(), arc);
        // Every lift is a deck translate of the canonical one.
        let back = (shifted.start() - lift.start()) / arc.n();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn translate_preserves_length_and_winding(arc in arc_strategy()) {
        let t = arc.tau();
        prop_assert_eq!(t.len(), arc.len());
        prop_assert_eq!(t.winding_number(), arc.winding_number());
        let mut x = arc;
        for _ in 0..arc.n() {
            x = x.tau();
        }
        prop_assert_eq!(x, arc);
    }

    #[test]
    fn swap_antisymmetry((alpha, beta) in arc_pair_strategy()) {
        prop_assert_eq!(
            pos_crossings(alpha, beta).unwrap(),
            neg_crossings(beta, alpha).unwrap()
        );
        let ab = crossing_numbers(alpha, beta).unwrap();
        let ba = crossing_numbers(beta, alpha).unwrap();
        prop_assert_eq!(ab.total, ba.total);
        prop_assert_eq!(ab.total, ab.pos + ab.neg);
    }

    #[test]
    fn rotation_invariance((alpha, beta) in arc_pair_strategy()) {
        prop_assert_eq!(
            crossing_numbers(alpha, beta).unwrap(),
            crossing_numbers(alpha.tau(), beta.tau()).unwrap()
        );
    }

    #[test]
    fn cover_route_agrees((alpha, beta) in arc_pair_strategy()) {
        let closed = crossing_numbers(alpha, beta).unwrap();
        let cover = cover_crossings(alpha, beta, false).unwrap();
        prop_assert_eq!(closed.counts(), cover.counts());
    }

    #[test]
    fn cluster_dimension_is_symmetric((alpha, beta) in arc_pair_strategy()) {
        let m1 = module_of_arc(alpha);
        let m2 = module_of_arc(beta);
        prop_assert_eq!(
            ext_dim_cluster(m1, m2).unwrap(),
            ext_dim_cluster(m2, m1).unwrap()
        );
        prop_assert_eq!(
            ext_dim_cluster(m1, m2).unwrap(),
            crossing_numbers(alpha, beta).unwrap().total
        );
    }

    #[test]
    fn hom_formula_matches_solver((alpha, beta) in arc_pair_strategy()) {
        let m1 = module_of_arc(alpha);
        let m2 = module_of_arc(beta);
        let formula = hom_dim(m1, m2).unwrap();
        let solved = hom_dim_linalg(&build_rep(m1).unwrap(), &build_rep(m2).unwrap()).unwrap();
        prop_assert_eq!(formula, solved);
    }

    #[test]
    fn extension_routes_agree((alpha, beta) in arc_pair_strategy()) {
        let m1 = module_of_arc(alpha);
        let m2 = module_of_arc(beta);
        prop_assert_eq!(
            ext_dim_tube(m1, m2).unwrap(),
            tubecat_core::oracle::ext_dim_ar(m1, m2).unwrap()
        );
    }

    #[test]
    fn label_shift_is_identity(n in 1i64..=6, a in 0i64..6, len in 2i64..=20, k in -3i64..=3) {
        let m = IndecModule::new(Rank::Finite(n), a, a + len).unwrap();
        let shifted = IndecModule::new(Rank::Finite(n), a + k * n, a + k * n + len).unwrap();
        prop_assert_eq!(m, shifted);
    }

    #[test]
    fn identity_intertwiner_exists(arc in arc_strategy()) {
        let rep = build_rep(module_of_arc(arc)).unwrap();
        prop_assert!(hom_dim_linalg(&rep, &rep).unwrap() >= 1);
        prop_assert!(rep.cycle_nilpotent());
    }

    #[test]
    fn equal_length_order_independence(n in 1i64..=6, a in 0i64..6, b in 0i64..6, len in 2i64..=14) {
        let alpha = AnnulusArc::new(n, a, len).unwrap();
        let beta = AnnulusArc::new(n, b, len).unwrap();
        let ab = cover_crossings(alpha, beta, false).unwrap();
        let ba = cover_crossings(beta, alpha, false).unwrap();
        prop_assert_eq!(ab.pos, ba.neg);
        prop_assert_eq!(ab.neg, ba.pos);
        prop_assert_eq!(ab.counts(), crossing_numbers(alpha, beta).unwrap().counts());
    }
}
