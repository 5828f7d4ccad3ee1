//! Property-based invariants of the numerical kernel and the curves.

use intercept_core::agm::agm;
use intercept_core::extrapolate::extrapolate_limit;
use intercept_core::gamma::gamma;
use intercept_core::planar::{interception as planar, pursuit};
use intercept_core::quad::integrate;
use intercept_core::spherical::interception as sph;
use intercept_core::spherical::point::SphericalPoint;
use intercept_core::spherical::trig::right_triangle_angle;
use proptest::prelude::*;

proptest! {
    #[test]
    fn agm_is_symmetric_and_bounded(a in 0.01..100.0_f64, b in 0.01..100.0_f64) {
        let m1 = agm(a, b, 1e-14).unwrap();
        let m2 = agm(b, a, 1e-14).unwrap();
        prop_assert!((m1 - m2).abs() <= 1e-13 * m1.abs());
        prop_assert!(m1 >= a.min(b) - 1e-12);
        prop_assert!(m1 <= a.max(b) + 1e-12);
    }

    #[test]
    fn agm_is_homogeneous(a in 0.1..10.0_f64, b in 0.1..10.0_f64, s in 0.1..10.0_f64) {
        let lhs = agm(s * a, s * b, 1e-15).unwrap();
        let rhs = s * agm(a, b, 1e-15).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs());
    }

    #[test]
    fn gamma_recurrence(x in 0.5..4.0_f64) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(((lhs - rhs) / rhs).abs() < 1e-13);
    }

    #[test]
    fn extrapolation_recovers_quadratic_models(
        limit in -10.0..10.0_f64,
        c1 in -5.0..5.0_f64,
        c2 in -5.0..5.0_f64,
    ) {
        let samples: Vec<(f64, f64)> = [0.4, 0.2, 0.05]
            .iter()
            .map(|&h| (h, limit + c1 * h + c2 * h * h))
            .collect();
        let r = extrapolate_limit(&samples).unwrap();
        prop_assert!((r.value - limit).abs() < 1e-11);
    }

    #[test]
    fn line_strategy_gap_inverts_cleanly(k in 0.0..1e6_f64) {
        // √(k²+1) − k equals 1/(√(k²+1) + k) exactly in real arithmetic.
        let g = pursuit::line_strategy_gap(k).unwrap();
        prop_assert!(g > 0.0 && g <= 1.0);
        prop_assert!((g * (k.hypot(1.0) + k) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn gudermannian_identities(theta in 0.0..30.0_f64) {
        let phi = sph::gd(theta);
        prop_assert!((phi.sin() - theta.tanh()).abs() < 1e-13);
        prop_assert!((0.0..std::f64::consts::FRAC_PI_2 + 1e-15).contains(&phi));
        let v = sph::gd_curve_vec(theta);
        prop_assert!((v.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn spherical_points_have_unit_vectors(
        theta in -20.0..20.0_f64,
        phi in 0.0..std::f64::consts::PI,
    ) {
        let p = SphericalPoint::new(theta, phi).unwrap();
        let v = p.vec();
        prop_assert!((v.norm() - 1.0).abs() < 1e-14);
        prop_assert!((v.z - phi.cos()).abs() < 1e-13);
    }

    #[test]
    fn right_triangle_angle_matches_tangent_relation(
        opp in 0.05..1.4_f64,
        adj in 0.05..1.4_f64,
    ) {
        let ang = right_triangle_angle(opp, adj);
        prop_assert!((ang.tan() * adj.sin() - opp.tan()).abs() < 1e-12 * opp.tan().max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quadrature_is_exact_on_random_cubics(
        c0 in -3.0..3.0_f64,
        c1 in -3.0..3.0_f64,
        c2 in -3.0..3.0_f64,
        c3 in -3.0..3.0_f64,
        a in -2.0..0.0_f64,
        b in 0.5..2.5_f64,
    ) {
        let f = |x: f64| c0 + x * (c1 + x * (c2 + x * c3));
        let primitive = |x: f64| {
            x * (c0 + x * (c1 / 2.0 + x * (c2 / 3.0 + x * c3 / 4.0)))
        };
        let r = integrate(f, a, b, 1e-11).unwrap();
        prop_assert!((r.value - (primitive(b) - primitive(a))).abs() < 1e-10);
    }

    #[test]
    fn curve_states_satisfy_the_cartesian_equation(p in 0.01..200.0_f64) {
        let s = planar::state_at(p).unwrap();
        prop_assert!(s.eq4_residual() < 1e-10);
        prop_assert!(s.x > 0.0 && s.x < 1.0);
        prop_assert!(s.y >= 0.0);
        // Slope recovery from the point is the inverse of the parametrization.
        let back = planar::slope_from_point(s.x, s.y).unwrap();
        prop_assert!((back - p).abs() < 1e-7 * p.max(1.0));
    }

    #[test]
    fn tangent_construction_identities_hold_for_random_parameters(p in 0.05..50.0_f64) {
        let s = planar::state_at(p).unwrap();
        let t = planar::triangle_elements(&s).unwrap();
        prop_assert!((t.len_up - (t.len_ou + t.len_tq)).abs()
            <= 1e-11 * t.len_up.max(1.0));
        let (rp, rq) = planar::tangent_circle_radii(&s).unwrap();
        prop_assert!((rp - rq).abs() <= 1e-11 * rq);
    }

    #[test]
    fn pursuit_gap_matches_its_closed_form(x in 0.0..0.999_f64) {
        let s = pursuit::bouguer(x).unwrap();
        prop_assert!((s.gap - (0.5 + (1.0 - x) * (1.0 - x) / 2.0)).abs() < 1e-15);
        prop_assert!(s.gap > 0.5);
        prop_assert!((s.y - ((1.0 - x) * (1.0 - x) / 4.0 - (1.0 - x).ln() / 2.0 - 0.25)).abs() < 1e-15);
    }
}
