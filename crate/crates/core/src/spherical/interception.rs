//! The spherical interception curve.
//!
//! P starts at the pole B = (0,0,1) and Q at (1,0,0); both move at unit
//! speed, Q along the equator and P constrained to the great circle through
//! B and Q. Matching arc lengths gives √(sin²φ + φ′²) = 1 with φ(0) = 0,
//! solved by the Gudermannian function
//!
//! ```text
//!     φ(θ) = 2·atan(e^θ) − π/2 = atan(sinh θ),   sin φ = tanh θ.
//! ```
//!
//! The tangent great circle at P cuts the equator at T with longitude
//! Θ = θ + atan(tanh θ); the arcs and spherical angles of triangle PQT obey
//! arc PT + arc QT = π/2, ∠QPT = arc BP and ∠BPT = arc PQ + π/2, and the
//! small circle through B tangent to the curve at P has
//! tan²R = sec⁴(φ/2)/4.

use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::spherical::point::{GreatCircle, SphericalPoint};
use crate::spherical::trig::{sph_angle_chords, sph_distance};
use crate::vec3::Vec3;
use std::f64::consts::FRAC_PI_2;

/// Pole B = (0, 0, 1), start of the curve and pole of the target equator.
pub const POLE: Vec3 = Vec3::new(0.0, 0.0, 1.0);

/// Gudermannian polar angle φ(θ) = 2·atan(e^θ) − π/2 for θ ≥ 0, evaluated
/// as π/2 − 2·atan(e^(−θ)) so precision survives large θ.
pub fn gd(theta: f64) -> f64 {
    if theta >= 0.0 {
        FRAC_PI_2 - 2.0 * (-theta).exp().atan()
    } else {
        2.0 * theta.exp().atan() - FRAC_PI_2
    }
}

/// sin φ(θ) = tanh θ.
pub fn sin_phi(theta: f64) -> f64 {
    theta.tanh()
}

/// cos φ(θ) = sech θ = φ′(θ), evaluated overflow-free.
pub fn cos_phi(theta: f64) -> f64 {
    let e = (-theta.abs()).exp();
    2.0 * e / (1.0 + e * e)
}

/// 1 − sin φ(θ) = 2e^(−2θ)/(1 + e^(−2θ)) for θ ≥ 0, cancellation-free.
pub fn one_minus_sin_phi(theta: f64) -> f64 {
    let e = (-2.0 * theta).exp();
    2.0 * e / (1.0 + e)
}

/// Point of the curve at longitude θ ≥ 0.
pub fn gd_curve(theta: f64) -> SphericalPoint {
    debug_assert!(theta >= 0.0, "the curve is parametrized on theta >= 0");
    SphericalPoint {
        theta,
        phi: gd(theta),
    }
}

/// Unit 3-vector of the curve point, built from sin φ = tanh θ and
/// cos φ = sech θ directly. Recovering cos φ from the stored angle loses
/// half the digits once φ is within ~1e-8 of the equator, so every vector
/// construction in this module goes through this form.
pub fn gd_curve_vec(theta: f64) -> Vec3 {
    let sp = sin_phi(theta);
    let cp = cos_phi(theta);
    Vec3::new(theta.cos() * sp, theta.sin() * sp, cp)
}

/// Residual gap to the target, arc PQ = π/2 − φ(θ) = 2·atan(e^(−θ)).
pub fn gap_sph(theta: f64) -> f64 {
    2.0 * (-theta).exp().atan()
}

/// Unit tangent of the curve at θ: dP/dθ with φ′ = cos φ, which has norm 1
/// because the curve is unit-speed.
pub fn unit_tangent(theta: f64) -> Vec3 {
    let (st, ct) = (theta.sin(), theta.cos());
    let sp = sin_phi(theta);
    let cp = cos_phi(theta);
    Vec3::new(
        -st * sp + ct * cp * cp,
        ct * sp + st * cp * cp,
        -sp * cp,
    )
}

/// Arc length along the curve from 0 to θ (numerical) against the claimed
/// value θ from the equal-speed condition; the integrand √(sin²φ + φ′²) is
/// identically 1.
pub fn arc_length_check_sph(theta: f64) -> Result<(f64, f64)> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!("arc length check requires theta > 0, got {theta}")));
    }
    let arc = integrate(
        |t| {
            let s = sin_phi(t);
            let c = cos_phi(t);
            (s * s + c * c).sqrt()
        },
        0.0,
        theta,
        1e-12,
    )?
    .value;
    Ok((arc, theta))
}

/// Great circle tangent to the curve at θ > 0, as the normalized cross
/// product of the tangent and position vectors.
pub fn tangent_great_circle(theta: f64) -> Result<GreatCircle> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!(
            "tangent great circle requires theta > 0, got {theta}"
        )));
    }
    let v = unit_tangent(theta);
    let r = gd_curve_vec(theta);
    let n = v.cross(r);
    if n.norm() < 1e-13 {
        return Err(Error::DegenerateTangent);
    }
    GreatCircle::from_normal(n)
}

/// Longitude Θ = θ + atan(tanh θ) where the tangent great circle crosses
/// the equator ahead of the motion (unwrapped, no mod 2π).
pub fn intercept_longitude(theta: f64) -> f64 {
    theta + theta.tanh().atan()
}

/// Equator crossing T of the tangent great circle, constructed by following
/// the great circle from P in the direction of motion until z = 0.
pub fn equator_crossing(theta: f64) -> Result<Vec3> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!(
            "equator crossing requires theta > 0, got {theta}"
        )));
    }
    let p = gd_curve_vec(theta);
    let v = unit_tangent(theta);
    // z(s) = p.z·cos s + v.z·sin s vanishes first at s = atan2(p.z, −v.z).
    let s = p.z.atan2(-v.z);
    let t = p * s.cos() + v * s.sin();
    debug_assert!(t.z.abs() < 1e-12);
    Ok(Vec3::new(t.x, t.y, 0.0).normalized())
}

/// Arcs and spherical angles of the right triangle P, Q, T at parameter θ.
///
/// Arcs come from the closed forms (arc QT = atan tanh θ, arc PT =
/// atan coth θ, arc PQ = π/2 − φ, arc BP = φ); the two angles at P are
/// measured from 3-vector geometry so the closed-form identities stay
/// falsifiable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalTriangleElements {
    pub p: SphericalPoint,
    pub q: SphericalPoint,
    pub t: SphericalPoint,
    pub arc_pt: f64,
    pub arc_qt: f64,
    pub arc_pq: f64,
    pub arc_bp: f64,
    /// Spherical angle ∠QPT, measured from vectors.
    pub ang_qpt: f64,
    /// Spherical angle ∠BPT, measured from vectors.
    pub ang_bpt: f64,
}

/// Build the triangle elements at θ > 0.
pub fn triangle_elements_sph(theta: f64) -> Result<SphericalTriangleElements> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!(
            "triangle construction requires theta > 0, got {theta}"
        )));
    }
    let p = gd_curve(theta);
    let phi = p.phi;
    let q = SphericalPoint {
        theta,
        phi: FRAC_PI_2,
    };
    let big_theta = intercept_longitude(theta);
    let t = SphericalPoint {
        theta: big_theta,
        phi: FRAC_PI_2,
    };

    let p_vec = gd_curve_vec(theta);
    let t_vec = Vec3::new(big_theta.cos(), big_theta.sin(), 0.0);

    // Chord Q − P from closed forms: for large θ the two points nearly
    // coincide and the naive difference would cancel catastrophically.
    let chord_pq = Vec3::new(
        theta.cos() * one_minus_sin_phi(theta),
        theta.sin() * one_minus_sin_phi(theta),
        -cos_phi(theta),
    );
    let ang_qpt = sph_angle_chords(p_vec, chord_pq, t_vec - p_vec)?;
    let ang_bpt = sph_angle_chords(p_vec, POLE - p_vec, t_vec - p_vec)?;

    Ok(SphericalTriangleElements {
        p,
        q,
        t,
        arc_pt: (1.0 / theta.tanh()).atan(),
        arc_qt: theta.tanh().atan(),
        arc_pq: gap_sph(theta),
        arc_bp: phi,
        ang_qpt,
        ang_bpt,
    })
}

/// Spherical radius of the small circle through B tangent to the curve at
/// θ, from the closed form tan²R = sec⁴(φ/2)/4.
pub fn small_circle_radius(theta: f64) -> Result<f64> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!(
            "small circle radius requires theta > 0, got {theta}"
        )));
    }
    let half = gd(theta) / 2.0;
    let sec2 = 1.0 / (half.cos() * half.cos());
    Ok((0.5 * sec2).atan())
}

/// Same radius from an explicit construction: the circle axis c must be
/// orthogonal to the tangent direction (tangency) and equidistant from B
/// and P, which pins c ∝ P + μ·(P×v) with μ = (1 − B·P)/(B·(P×v)).
pub fn small_circle_radius_constructed(theta: f64) -> Result<f64> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!(
            "small circle construction requires theta > 0, got {theta}"
        )));
    }
    let p = gd_curve_vec(theta);
    let v = unit_tangent(theta);
    let w = p.cross(v);
    let b_dot_w = POLE.dot(w);
    if b_dot_w.abs() < 1e-300 {
        return Err(Error::DegenerateTangent);
    }
    // 1 − B·P = 1 − cos φ = 2 sin²(φ/2), kept cancellation-free.
    let half = gd(theta) / 2.0;
    let one_minus_bp = 2.0 * half.sin() * half.sin();
    let mu = one_minus_bp / b_dot_w;
    let axis = (p + w * mu).normalized();
    let r_from_p = sph_distance(axis, p);
    let r_from_b = sph_distance(axis, POLE);
    if (r_from_p - r_from_b).abs() > 1e-12 {
        return Err(Error::Consistency(format!(
            "constructed circle is not equidistant: {r_from_p} vs {r_from_b}"
        )));
    }
    Ok(r_from_p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn curve_starts_at_pole() {
        let p = gd_curve(0.0);
        assert_eq!(p.phi, 0.0);
        assert!((p.vec().z - 1.0).abs() < 1e-15);
    }

    #[test]
    fn phi_approaches_equator() {
        // π/2 − φ(10) = 2·atan(e⁻¹⁰) ≈ 9.08e-5
        assert!(FRAC_PI_2 - gd(10.0) < 1e-4);
        assert!((gap_sph(10.0) - (FRAC_PI_2 - gd(10.0))).abs() < 1e-15);
    }

    #[test]
    fn sin_phi_is_tanh() {
        for &t in &[0.1, 1.0, 3.0, 15.0] {
            assert!((gd(t).sin() - t.tanh()).abs() < 1e-14);
            assert!((gd(t).cos() - cos_phi(t)).abs() < 1e-14);
            assert!((1.0 - t.tanh() - one_minus_sin_phi(t)).abs() < 1e-14);
        }
    }

    #[test]
    fn gd_equals_its_other_closed_forms() {
        for &t in &[0.2, 1.0, 2.5] {
            assert!((gd(t) - (2.0 * t.exp().atan() - FRAC_PI_2)).abs() < 1e-15);
            assert!((gd(t) - t.sinh().atan()).abs() < 1e-15);
        }
        assert!((gd(-1.0) + gd(1.0)).abs() < 1e-15);
    }

    #[test]
    fn right_triangle_formula_matches_vector_angle() {
        // With the right angle at Q, the angle at P comes from the two legs:
        // tan ∠QPT = tan(QT)/sin(PQ) = tanh θ / cos φ = tan φ.
        use crate::spherical::trig::right_triangle_angle;
        for &t in &[0.3, 1.0, 4.0] {
            let e = triangle_elements_sph(t).unwrap();
            let from_arcs = right_triangle_angle(e.arc_qt, e.arc_pq);
            assert!(
                (from_arcs - e.ang_qpt).abs() < 1e-12,
                "theta {t}: {from_arcs} vs {}",
                e.ang_qpt
            );
        }
    }

    #[test]
    fn tangent_is_unit_and_orthogonal_to_position() {
        for &t in &[0.05, 0.7, 2.0, 12.0] {
            let v = unit_tangent(t);
            assert!((v.norm() - 1.0).abs() < 1e-13, "theta {t}");
            assert!(v.dot(gd_curve(t).vec()).abs() < 1e-13);
        }
    }

    #[test]
    fn numeric_derivative_has_unit_norm() {
        let h = 1e-6;
        for &t in &[0.3, 1.0, 4.0] {
            let a = gd_curve(t - h).vec();
            let b = gd_curve(t + h).vec();
            let d = (b - a) * (1.0 / (2.0 * h));
            assert!((d.norm() - 1.0).abs() < 1e-9, "theta {t}: |d| = {}", d.norm());
        }
    }

    #[test]
    fn arc_length_equals_theta() {
        for &t in &[1.0, 5.0] {
            let (arc, claim) = arc_length_check_sph(t).unwrap();
            assert!((arc - claim).abs() < 1e-10, "theta {t}");
        }
        assert!(arc_length_check_sph(0.0).is_err());
        // Degenerate limit: both sides vanish as θ → 0⁺.
        let (arc, claim) = arc_length_check_sph(1e-6).unwrap();
        assert!(arc.abs() < 2e-6 && claim.abs() < 2e-6);
    }

    #[test]
    fn tangent_circle_contains_p_and_tangent() {
        let t = 1.0;
        let gc = tangent_great_circle(t).unwrap();
        assert!(gc.plane_distance(gd_curve(t).vec()).abs() < 1e-14);
        assert!(gc.normal.dot(unit_tangent(t)).abs() < 1e-14);
    }

    #[test]
    fn intercept_longitude_matches_construction() {
        for &t in &[0.2, 1.0, 3.0, 8.0] {
            let constructed = equator_crossing(t).unwrap();
            let expected = intercept_longitude(t);
            let diff = constructed.y.atan2(constructed.x) - expected;
            let wrapped = diff.sin().atan2(diff.cos());
            assert!(wrapped.abs() < 1e-12, "theta {t}: wrapped diff {wrapped}");
        }
    }

    #[test]
    fn intercept_longitude_tan_formula() {
        // tan Θ = (tan θ + sin φ)/(1 − tan θ·sin φ) via the atan2 form.
        for &t in &[0.3, 1.0, 2.5] {
            let sp = sin_phi(t);
            let expected = (t.sin() + t.cos() * sp).atan2(t.cos() - t.sin() * sp);
            let actual = intercept_longitude(t);
            let diff = actual - expected;
            let wrapped = diff.sin().atan2(diff.cos());
            assert!(wrapped.abs() < 1e-12, "theta {t}");
        }
    }

    #[test]
    fn triangle_closed_forms() {
        let e = triangle_elements_sph(1.0).unwrap();
        // arc PT + arc QT = π/2 and tan PT·tan QT = 1
        assert!((e.arc_pt + e.arc_qt - FRAC_PI_2).abs() < 1e-14);
        assert!((e.arc_pt.tan() * e.arc_qt.tan() - 1.0).abs() < 1e-13);
        // Spherical Pythagoras: cos PT = cos PQ · cos QT
        assert!((e.arc_pt.cos() - e.arc_pq.cos() * e.arc_qt.cos()).abs() < 1e-14);
        // ∠QPT = arc BP and ∠BPT = arc PQ + π/2 from vector geometry
        assert!((e.ang_qpt - e.arc_bp).abs() < 1e-12);
        assert!((e.ang_bpt - (e.arc_pq + FRAC_PI_2)).abs() < 1e-12);
        assert!(triangle_elements_sph(0.0).is_err());
    }

    #[test]
    fn arcs_approach_eighth_turn() {
        let e = triangle_elements_sph(20.0).unwrap();
        assert!((e.arc_pt - FRAC_PI_4).abs() < 1e-8);
        assert!((e.arc_qt - FRAC_PI_4).abs() < 1e-8);
    }

    #[test]
    fn vector_arcs_match_closed_forms() {
        for &t in &[0.1, 1.0, 6.0] {
            let e = triangle_elements_sph(t).unwrap();
            let (pv, qv, tv) = (e.p.vec(), e.q.vec(), e.t.vec());
            assert!((sph_distance(pv, tv) - e.arc_pt).abs() < 1e-12);
            assert!((sph_distance(qv, tv) - e.arc_qt).abs() < 1e-12);
            assert!((sph_distance(pv, qv) - e.arc_pq).abs() < 1e-9, "theta {t}");
            assert!((sph_distance(POLE, pv) - e.arc_bp).abs() < 1e-12);
        }
    }

    #[test]
    fn small_circle_formula_vs_construction() {
        for &t in &[0.05, 0.5, 1.0, 5.0, 20.0] {
            let formula = small_circle_radius(t).unwrap();
            let constructed = small_circle_radius_constructed(t).unwrap();
            assert!(
                (formula - constructed).abs() < 1e-12,
                "theta {t}: {formula} vs {constructed}"
            );
        }
    }

    #[test]
    fn small_circle_limit_and_monotonicity() {
        // tan²R → 1/4 as θ → 0⁺, i.e. R → atan(1/2).
        let r = small_circle_radius(1e-8).unwrap();
        assert!((r.tan() * r.tan() - 0.25).abs() < 1e-10);
        let mut prev = 0.0;
        for i in 1..40 {
            let r = small_circle_radius(i as f64 * 0.5).unwrap();
            assert!(r > prev);
            prev = r;
        }
    }
}
