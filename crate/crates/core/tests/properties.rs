//! Property tests for the structural invariants of every module.

use g2crit::archfactors::{char_convert, dual_offsets_match, verify_cocycle_identity, CChar, GammaRatio};
use g2crit::comblemma::{check_point, critical_regions, coverage_report};
use g2crit::kostant::{epsilon_sign, find_balanced, kostant_reps, natural_basis, KostantPair};
use g2crit::lcrit::{crit_oracle, crit_set, crit_set_product, kinds, poe_check, widths, LKind};
use g2crit::numeric::{q, qi, HalfInt, Q};
use g2crit::purity::{cuspidal_parameters, dual_twist, purity_weight, tate_twist, PurePair, PureWeight};
use g2crit::rootsys::{
    all_roots, parabolic_data, positive_roots, reflect, weyl_group, Maximal, Parabolic, QVector, RHO_G,
};
use g2crit::sampling::{right_of_axis_critical, rng};
use g2crit::weights::{dot_action, is_dominant, Basis, Scope, WeightCoords};
use num_traits::Zero;
use proptest::prelude::*;

fn maximal() -> impl Strategy<Value = Maximal> {
    prop_oneof![Just(Maximal::Beta), Just(Maximal::Alpha)]
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::Fund), Just(Basis::T0), Just(Basis::TBeta)]
}

fn rational() -> impl Strategy<Value = Q> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

/// A pure weight with one to three places and its parabolic.
fn pure_weight(span: i64) -> impl Strategy<Value = (PureWeight, Maximal)> {
    (maximal(), -40i64..=20, prop::collection::vec((-span..=span, 0..=2 * span), 1..=3)).prop_map(
        |(p, pw, raw)| {
            let pairs = raw.into_iter().map(|(a, d)| PurePair::from_eta(a, a - d, pw)).collect();
            (PureWeight::new(pairs, natural_basis(p)).unwrap(), p)
        },
    )
}

#[test]
fn length_is_the_reduced_word_length() {
    for w in weyl_group() {
        assert_eq!(w.length, w.word.len());
        let inversions = positive_roots().iter().filter(|r| !w.act(**r).is_positive()).count();
        assert_eq!(w.length, inversions);
    }
}

#[test]
fn longest_element_is_central() {
    let wg = weyl_group().iter().find(|w| w.length == 6).unwrap();
    for w in weyl_group() {
        assert_eq!(wg.matrix.mul(w.matrix), w.matrix.mul(wg.matrix));
    }
}

#[test]
fn rho_splits_over_the_levi() {
    for p in Maximal::BOTH {
        let d = parabolic_data(Parabolic::Max(p));
        let rho_m = p.levi_root().to_q().scale(q(1, 2));
        assert_eq!(rho_m.add(d.rho_p), RHO_G.to_q());
    }
}

#[test]
fn balanced_is_preserved_by_the_involution() {
    for p in Maximal::BOTH {
        let reps = kostant_reps(p.into());
        for x in &reps {
            for y in &reps {
                let pair = KostantPair::new(x.clone(), y.clone());
                assert_eq!(pair.is_balanced(), pair.prime(p).unwrap().is_balanced());
            }
        }
    }
}

#[test]
fn cocycle_identity_on_seeded_weights() {
    let mut r = rng(99);
    for p in Maximal::BOTH {
        for _ in 0..50 {
            let mu = right_of_axis_critical(&mut r, p, 30);
            assert!(verify_cocycle_identity(&mu, p).unwrap().equal, "{mu}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reflection_is_an_involution(x in rational(), y in rational(), i in 0usize..12) {
        let theta = all_roots()[i];
        let v = QVector::new(x, y);
        prop_assert_eq!(reflect(theta, reflect(theta, v).unwrap()).unwrap(), v);
    }

    #[test]
    fn dot_action_composes(i in 0usize..12, j in 0usize..12, b in basis(), u in -30i64..=30, v in -30i64..=30) {
        let (w1, w2) = (&weyl_group()[i], &weyl_group()[j]);
        let lambda = WeightCoords::int(b, u, v);
        prop_assert_eq!(dot_action(w1, dot_action(w2, lambda)), dot_action(&w1.compose(w2), lambda));
    }

    #[test]
    fn g_dominance_implies_levi_dominance(b in basis(), u in -30i64..=30, v in -30i64..=30) {
        let w = WeightCoords::int(b, u, v);
        if is_dominant(w, Scope::G).unwrap() {
            prop_assert!(is_dominant(w, Scope::MAlpha).unwrap());
            prop_assert!(is_dominant(w, Scope::MBeta).unwrap());
        }
    }

    #[test]
    fn tate_twist_moves_purity((mu, _) in pure_weight(30), t in -10i64..=10) {
        prop_assert_eq!(tate_twist(&mu, t).pw(), mu.pw() + 2 * t);
    }

    #[test]
    fn dual_twist_stays_pure((mu, _) in pure_weight(30)) {
        let d = dual_twist(&mu);
        prop_assert_eq!(purity_weight(d.pairs()).unwrap(), -mu.pw());
        prop_assert_eq!(dual_twist(&d), mu);
    }

    #[test]
    fn cuspidal_parameters_are_strict_halves((mu, _) in pure_weight(30)) {
        for pair in mu.pairs() {
            let c = cuspidal_parameters(*pair, mu.pw()).unwrap();
            for h in [c.alpha.0, c.alpha.1, c.beta.0, c.beta.1] {
                prop_assert!(h.is_strict_half());
            }
        }
    }

    #[test]
    fn crit_set_matches_the_pole_test((mu, _) in pure_weight(20)) {
        for kind in LKind::ALL {
            let set = crit_set(&mu, kind);
            for twice in -100i64..=100 {
                let s = HalfInt::from_twice(twice);
                if kind.lattice().contains(s) {
                    prop_assert_eq!(set.contains(s), crit_oracle(&mu, kind, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn widths_ignore_the_embedding_order((mu, _) in pure_weight(30)) {
        for kind in LKind::ALL {
            prop_assert_eq!(widths(&mu, kind), widths(&mu.swapped(), kind));
        }
    }

    #[test]
    fn tate_covariance((mu, _) in pure_weight(30), t in -10i64..=10) {
        let twisted = tate_twist(&mu, t);
        for kind in LKind::ALL {
            let (w0, w1) = (widths(&mu, kind), widths(&twisted, kind));
            prop_assert_eq!(w0.cuspidal, w1.cuspidal);
            prop_assert_eq!(w1.abelian, w0.abelian + qi(kind.scale() * t));
            let shift = HalfInt::from_int(kind.scale() * t);
            let moved: Vec<HalfInt> = crit_set(&mu, kind).points().into_iter().map(|s| s + shift).collect();
            prop_assert_eq!(moved, crit_set(&twisted, kind).points());
        }
    }

    #[test]
    fn product_is_the_intersection((mu, p) in pure_weight(20)) {
        let product = crit_set_product(&mu, p);
        for twice in (-81i64..=81).step_by(2) {
            let s = HalfInt::from_twice(twice);
            let each = kinds(p).iter().all(|k| crit_set(&mu, *k).contains(HalfInt::from_twice(k.scale() * twice)));
            prop_assert_eq!(product.contains(s), each);
        }
    }

    #[test]
    fn balanced_iff_critical_at_the_evaluation_point((mu, p) in pure_weight(80)) {
        prop_assert_eq!(find_balanced(&mu, p).is_some(), poe_check(&mu, p).statement_1);
    }

    #[test]
    fn lemma_holds_far_outside_the_scan(p in maximal(), pw in -90i64..=50, a in -200i64..=200, d in 0i64..=300) {
        let mu = PureWeight::from_eta(a, a - d, pw, natural_basis(p)).unwrap();
        let r = check_point(&mu, p);
        prop_assert!(r.passed());
        prop_assert_eq!(r.derived_mismatches, 0);
        prop_assert!(r.max_shapes <= 2);
    }

    #[test]
    fn critical_regions_have_disjoint_interiors(p in maximal(), pw in -30i64..=10, a in -40i64..=40, d in 0i64..=80) {
        let b = a - d;
        let mut names: Vec<String> = critical_regions(pw, p)
            .into_iter()
            .filter(|r| r.constraints.iter().all(|c| c.eval(a, b, pw) > 0))
            .map(|r| r.name)
            .collect();
        names.dedup();
        prop_assert!(names.len() <= 1, "{:?} at ({}, {}) pw={}", names, a, b, pw);
    }

    #[test]
    fn epsilon_is_a_cocycle(
        lengths in prop::collection::vec(0usize..=5, 4),
        s in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
        t in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        // Reordering by t, then by s, signs like the composite reordering.
        let mut moved = vec![0; 4];
        for i in 0..4 {
            moved[t[i]] = lengths[i];
        }
        let composite: Vec<usize> = (0..4).map(|i| s[t[i]]).collect();
        let lhs = epsilon_sign(&lengths, &composite).unwrap();
        let rhs = epsilon_sign(&lengths, &t).unwrap() * epsilon_sign(&moved, &s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_ratio_product_is_associative(x in rational(), y in rational(), z in rational(), k in -3i64..=3) {
        prop_assume!(!x.is_zero() && !y.is_zero() && !z.is_zero());
        let (a, b, c) = (GammaRatio::new(x, k), GammaRatio::new(y, 1), GammaRatio::new(z, -k));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * a.inv(), GammaRatio::one());
    }

    #[test]
    fn char_convert_round_trips(p1 in rational(), q1 in rational(), p2 in rational(), q2 in rational()) {
        let pair = (CChar::new(p1, q1), CChar::new(p2, q2));
        let there = char_convert(pair, Basis::T0, Basis::TBeta).unwrap();
        prop_assert_eq!(char_convert(there, Basis::TBeta, Basis::T0).unwrap(), pair);
    }

    #[test]
    fn dual_twist_exchanges_gamma_offsets((mu, p) in pure_weight(30)) {
        prop_assert!(dual_offsets_match(&mu, p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn regions_cover_the_same_lattice_points(p in maximal(), pw in -40i64..=20) {
        let r = coverage_report(pw, p, 25).unwrap();
        prop_assert!(r.symmetric_difference.is_empty(), "{:?}", r.symmetric_difference.first());
    }
}
