use proptest::prelude::*;
use pql_core::domains::{classify, curve_v, phi, sup_phi, FeasibleSet, ParamPoint, Status};
use pql_core::radial::{delta_h_sides, shoot, tensor_deviation, ShootStatus};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn phi_is_increasing(n in 3u32..12, q in 0.0f64..2.0, a in 0.001f64..1.998, b in 0.001f64..1.998) {
        let (y1, y2) = if a < b { (a, b) } else { (b, a) };
        if y1 < y2 {
            prop_assert!(phi(n, q, y1) < phi(n, q, y2));
        }
    }

    #[test]
    fn curve_v_monotone(n in 3u32..20, q1 in 0.0f64..0.99, q2 in 0.0f64..0.99) {
        prop_assert!(curve_v(n + 1, q1).unwrap() < curve_v(n, q1).unwrap());
        if q1 < q2 {
            prop_assert!(curve_v(n, q1).unwrap() < curve_v(n, q2).unwrap());
        }
    }

    #[test]
    fn classifier_regions_are_disjoint(n in 2u32..11, p in -1.0f64..8.0, q in 0.0f64..2.2, bounded: bool) {
        let v = classify(&ParamPoint::new(n, p, q), bounded);
        prop_assert!(v.is_ok(), "{:?}", v);
        let v = v.unwrap();
        if v.status == Status::RadialSolutionsExist {
            prop_assert!(v.criteria_fired.is_empty());
        }
    }

    #[test]
    fn tensor_deviation_is_nonnegative(beta in -3.0f64..3.0, sigma in -3.0f64..3.0, r in 0.1f64..10.0) {
        prop_assert!(tensor_deviation(4, 1.0 / 3.0, beta, sigma, r).unwrap() >= 0.0);
    }

    #[test]
    fn delta_h_identity_any_parameters(beta in -3.0f64..3.0, sigma in -3.0f64..3.0, r in 0.1f64..10.0) {
        for (n, q) in [(3, 0.5), (6, 0.25)] {
            let s = delta_h_sides(n, q, beta, sigma, r).unwrap();
            prop_assert!(s.relative() <= 1e-8, "{:?}", s);
        }
    }
}

#[test]
fn l_side_matches_below_one() {
    // on q <= 1 the L and BL memberships coincide
    for n in [4u32, 6, 9] {
        for k in 1..100 {
            let q = k as f64 / 100.0;
            for j in 0..60 {
                let pt = ParamPoint::new(n, -1.0 + j as f64 * 0.1, q);
                let l = pql_core::domains::in_admissible(pql_core::domains::AdmissibleSet::L, &pt).unwrap();
                let bl = pql_core::domains::in_admissible(pql_core::domains::AdmissibleSet::BL, &pt).unwrap();
                assert_eq!(l, bl, "{pt:?}");
            }
        }
    }
}

#[test]
fn sup_refinement_never_decreases() {
    for (set, q) in [(FeasibleSet::D, 0.8), (FeasibleSet::D, 1.3), (FeasibleSet::E, 1.2), (FeasibleSet::E, 1.6)] {
        let mut prev = f64::NEG_INFINITY;
        for tol in [1e-2, 1e-4, 1e-6, 1e-8, 1e-10] {
            let v = sup_phi(set, 6, q, tol).unwrap().value.as_f64();
            assert!(v >= prev);
            prev = v;
        }
    }
}

#[test]
fn scaling_invariance_of_crossing_radius() {
    // u0 -> lambda^((2-q)/l) u0 shrinks radii by 1/lambda
    for (n, p, q) in [(3u32, 3.0, 0.0), (4, 2.0, 0.5)] {
        let l = p + q - 1.0;
        let lambda: f64 = 2.0;
        let r1 = match shoot(n, p, q, 1.0, 100.0, 1e-10).unwrap().status {
            ShootStatus::HitsZero(r) => r,
            s => panic!("{s:?}"),
        };
        let r2 = match shoot(n, p, q, lambda.powf((2.0 - q) / l), 100.0, 1e-10).unwrap().status {
            ShootStatus::HitsZero(r) => r,
            s => panic!("{s:?}"),
        };
        assert!((r2 * lambda / r1 - 1.0).abs() < 0.01, "{r1} {r2}");
    }
}
