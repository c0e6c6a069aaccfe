mod common;

use std::f64::consts::PI;

use ktweb_core::frames::on_cross_section;
use ktweb_core::scalar::{int, rat};
use ktweb_core::separability::transform_potential;
use ktweb_core::{
    compatible, equivalent, first_integral_potential, group_compose, induced_action, induced_action_exact,
    kt_components, kt_eigenvalues, leaf_label, moving_frame, web_curves, ExactMotion, GroupElement,
    KTParams, Point2, Poly2, Region, Stratum,
};
use proptest::prelude::*;

fn alpha() -> impl Strategy<Value = [f64; 6]> {
    proptest::array::uniform6(-3.0f64..3.0)
}

fn point() -> impl Strategy<Value = Point2> {
    (-4.0f64..4.0, -4.0f64..4.0).prop_map(|(x, y)| Point2::new(x, y))
}

fn element() -> impl Strategy<Value = GroupElement> {
    (-PI..PI, -3.0f64..3.0, -3.0f64..3.0).prop_map(|(t, a, b)| GroupElement::new(t, a, b))
}

fn motion() -> impl Strategy<Value = ExactMotion> {
    (0u8..4, -12i64..12, 1i64..5, -12i64..12, 1i64..5)
        .prop_map(|(k, an, ad, bn, bd)| ExactMotion::new(k, rat(an, ad), rat(bn, bd)))
}

fn small_poly(max_degree: u32) -> impl Strategy<Value = Poly2> {
    proptest::collection::vec((0..=max_degree, 0..=max_degree, -5i64..5, 1i64..4), 0..6).prop_map(move |terms| {
        Poly2::from_terms(
            terms
                .into_iter()
                .filter(|(i, j, _, _)| i + j <= max_degree)
                .map(|(i, j, n, d)| (i, j, rat(n, d))),
        )
        .unwrap()
    })
}

fn exact_params() -> impl Strategy<Value = KTParams> {
    proptest::array::uniform6((-9i64..9, 1i64..4)).prop_map(|r| KTParams::from_ratios(r).unwrap())
}

fn stratum() -> impl Strategy<Value = Stratum> {
    prop_oneof![Just(Stratum::E1), Just(Stratum::E2), Just(Stratum::E3P), Just(Stratum::E3EH)]
}

fn close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
}

proptest! {
    #[test]
    fn components_are_affine_in_parameters(a in alpha(), b in alpha(), x in point(), t in -2.0f64..2.0) {
        let mix: [f64; 6] = std::array::from_fn(|i| a[i] + t * b[i]);
        let (ka, kb) = (kt_components(&KTParams::new(a).unwrap(), x), kt_components(&KTParams::new(b).unwrap(), x));
        let km = kt_components(&KTParams::new(mix).unwrap(), x);
        prop_assert!(close(km.k11, ka.k11 + t * kb.k11, 1e-12));
        prop_assert!(close(km.k12, ka.k12 + t * kb.k12, 1e-12));
        prop_assert!(close(km.k22, ka.k22 + t * kb.k22, 1e-12));
    }

    #[test]
    fn eigenvalues_sorted_and_consistent(a in alpha(), x in point()) {
        let p = KTParams::new(a).unwrap();
        let (l1, l2) = kt_eigenvalues(&p, x);
        let k = kt_components(&p, x);
        let scale = k.max_abs();
        prop_assert!(l1 <= l2);
        prop_assert!((l1 + l2 - k.trace()).abs() <= 1e-12 * scale.max(1.0));
        prop_assert!((l1 * l2 - k.det()).abs() <= 1e-12 * (scale * scale).max(1.0));
    }

    #[test]
    fn motions_preserve_distance(g in element(), x in point(), y in point()) {
        prop_assert!(close(g.apply(x).distance(&g.apply(y)), x.distance(&y), 1e-12));
    }

    #[test]
    fn compose_and_inverse_laws(g1 in element(), g2 in element(), x in point()) {
        let lhs = group_compose(&g2, &g1).apply(x);
        let rhs = g2.apply(g1.apply(x));
        prop_assert!(lhs.distance(&rhs) <= 1e-12 * (1.0 + x.distance(&Point2::ORIGIN)) * 10.0);
        prop_assert!(g1.inverse().apply(g1.apply(x)).distance(&x) <= 1e-12 * 10.0);
    }

    #[test]
    fn induced_action_is_a_group_action(a in alpha(), g1 in element(), g2 in element()) {
        let p = KTParams::new(a).unwrap();
        let lhs = induced_action(&group_compose(&g2, &g1), &p);
        let rhs = induced_action(&g2, &induced_action(&g1, &p));
        let scale = lhs.values().iter().chain(rhs.values()).fold(1.0f64, |m, v| m.max(v.abs()));
        for (x, y) in lhs.values().iter().zip(rhs.values()) {
            prop_assert!((x - y).abs() <= 1e-10 * scale);
        }
        prop_assert_eq!(lhs.alpha(6), p.alpha(6));
    }

    #[test]
    fn exact_action_preserves_leaf_labels_exactly(p in exact_params(), m in motion()) {
        let q = KTParams::from_rationals(induced_action_exact(&m, p.exact().unwrap())).unwrap();
        let (lp, lq) = (leaf_label(&p), leaf_label(&q));
        prop_assert_eq!(lp.kind(), lq.kind());
        prop_assert_eq!(lp.exact, lq.exact);
        prop_assert!(equivalent(&p, &q, 0.0));
    }

    #[test]
    fn exact_frames_reach_the_cross_section(p in exact_params()) {
        let f = moving_frame(&p).unwrap();
        let s = f.label.stratum;
        if let Some(m) = &f.exact_frame {
            let reached = KTParams::from_rationals(induced_action_exact(m, p.exact().unwrap())).unwrap();
            prop_assert!(on_cross_section(s, &reached, 0.0));
        } else {
            let reached = induced_action(&f.frame, &p.to_float());
            prop_assert!(on_cross_section(s, &reached, 1e-9), "{s}: {:?}", reached.values());
        }
    }

    #[test]
    fn compatibility_is_covariant(p in exact_params(), v in small_poly(4), m in motion()) {
        let q = KTParams::from_rationals(induced_action_exact(&m, p.exact().unwrap())).unwrap();
        let (w, approximate) = transform_potential(&v, &m.to_group_element(), Some(&m)).unwrap();
        prop_assert!(!approximate);
        prop_assert_eq!(compatible(&p, &v).unwrap(), compatible(&q, &w).unwrap());
    }

    #[test]
    fn compatibility_is_linear_in_the_potential(seed in any::<u64>(), s in stratum()) {
        let mut r = common::rng(seed);
        let (p, v1) = common::compatible_pair(&mut r, s, 4);
        let basis = common::compatible_basis(&p, 4);
        let v2 = basis.iter().fold(Poly2::zero(), |acc, b| &acc + &b.scale(&int(2)));
        prop_assert!(compatible(&p, &v1).unwrap() && compatible(&p, &v2).unwrap());
        prop_assert!(compatible(&p, &(&v1 + &v2)).unwrap());
        let u = first_integral_potential(&p, &(&v1 + &v2)).unwrap();
        let sum = &first_integral_potential(&p, &v1).unwrap() + &first_integral_potential(&p, &v2).unwrap();
        prop_assert_eq!(u, sum);
    }

    #[test]
    fn polynomial_ring_laws(a in small_poly(5), b in small_poly(5), c in small_poly(5)) {
        prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
        let lhs = a.checked_mul(&(&b + &c)).unwrap();
        let rhs = &a.checked_mul(&b).unwrap() + &a.checked_mul(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
        let product_rule = &a.diff(1).checked_mul(&b).unwrap() + &a.checked_mul(&b.diff(1)).unwrap();
        prop_assert_eq!(a.checked_mul(&b).unwrap().diff(1), product_rule);
        prop_assert_eq!(a.diff(1).diff(2), a.diff(2).diff(1));
    }

    #[test]
    fn transformed_potential_is_pullback(v in small_poly(4), g in element(), x in point()) {
        let (w, _) = transform_potential(&v, &g, None).unwrap();
        let expected = v.eval(g.inverse().apply(x));
        let scale = v.terms().map(|(_, _, c)| ktweb_core::scalar::to_f64(c).abs()).sum::<f64>() * 1e3;
        prop_assert!((w.eval(x) - expected).abs() <= 1e-9 * scale.max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_webs_are_orthogonal(seed in any::<u64>(), s in stratum()) {
        let mut r = common::rng(seed);
        let p = common::stratum_point(&mut r, s);
        let region = Region::new(-2.5, -2.0, 2.0, 2.5).unwrap();
        let plot = web_curves(&p, &region, 5, 3001).unwrap();
        prop_assert_eq!(plot.singular_points.len(), s.web_type().singular_point_count());
        for family in &plot.families {
            for curve in family {
                for w in curve.windows(3) {
                    let (t1, t2) = (w[2].x1 - w[0].x1, w[2].x2 - w[0].x2);
                    let n = t1.hypot(t2);
                    let k = kt_components(&p, w[1]);
                    let (l1, l2) = k.eigenvalues();
                    if n == 0.0 || l2 - l1 < 1e-6 * k.max_abs().max(1.0) {
                        continue;
                    }
                    let (e1, e2) = k.eigenvectors();
                    let d1 = ((t1 * e1[0] + t2 * e1[1]) / n).abs();
                    let d2 = ((t1 * e2[0] + t2 * e2[1]) / n).abs();
                    prop_assert!(d1.min(d2) <= 1e-6, "{s}: {} at {:?}", d1.min(d2), w[1]);
                }
            }
        }
    }
}
