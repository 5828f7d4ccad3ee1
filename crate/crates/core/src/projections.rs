//! Mercator and stereographic projections and the curve catalogue they
//! carry: the spherical interception curve maps to y = ln coth(x/2) on the
//! cylinder chart and to the polar spiral r = coth(θ/2) in the plane, while
//! the π/4 spherical spiral maps to the helix chart line y = x and to the
//! logarithmic spiral r = e^θ. Both projections are conformal, so the
//! right-angle meetings survive in every chart.

use crate::error::{Error, Result};
use crate::spherical::interception;
use crate::spherical::point::SphericalPoint;
use crate::vec3::Vec3;
use std::f64::consts::PI;
#[cfg(test)]
use std::f64::consts::FRAC_PI_2;

/// Point on the unrolled cylinder chart (x = longitude, y = Mercator
/// ordinate).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderPoint {
    pub x: f64,
    pub y: f64,
}

/// Point of the plane in polar coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub angle: f64,
}

impl PolarPoint {
    pub fn to_cartesian(self) -> (f64, f64) {
        (self.r * self.angle.cos(), self.r * self.angle.sin())
    }
}

/// Mercator chart of a sphere point: x = θ (unwrapped), y = ln tan(π/4 +
/// latitude/2) = ln cot(φ/2). Poles are not representable.
pub fn mercator(p: &SphericalPoint) -> Result<CylinderPoint> {
    if p.phi <= 0.0 || p.phi >= PI {
        return Err(Error::Pole(format!(
            "mercator is undefined at the poles (phi = {})",
            p.phi
        )));
    }
    Ok(CylinderPoint {
        x: p.theta,
        y: -((0.5 * p.phi).tan().ln()),
    })
}

/// Stereographic chart from the pole B: r = cot(φ/2), angle = θ. Undefined
/// exactly at B.
pub fn stereographic(p: &SphericalPoint) -> Result<PolarPoint> {
    if p.phi <= 0.0 {
        return Err(Error::Pole(
            "stereographic projection from B is undefined at B itself".into(),
        ));
    }
    Ok(PolarPoint {
        r: 1.0 / (0.5 * p.phi).tan(),
        angle: p.theta,
    })
}

/// Unchecked chart forms used for finite-difference differentials.
pub fn mercator_chart(theta: f64, phi: f64) -> (f64, f64) {
    (theta, -((0.5 * phi).tan().ln()))
}

/// Unchecked stereographic chart in cartesian plane coordinates.
pub fn stereographic_chart(theta: f64, phi: f64) -> (f64, f64) {
    let r = 1.0 / (0.5 * phi).tan();
    (r * theta.cos(), r * theta.sin())
}

/// Mercator image of the interception curve: y = ln coth(x/2).
pub fn gd_mercator_ordinate(theta: f64) -> f64 {
    (0.5 * theta).tanh().recip().ln()
}

/// Slope of the Mercator image, y′ = −1/sinh x.
pub fn gd_mercator_slope(theta: f64) -> f64 {
    -1.0 / theta.sinh()
}

/// The spherical spiral (loxodrome at π/4):
/// (cos θ/cosh θ, sin θ/cosh θ, tanh θ).
pub fn spherical_spiral(theta: f64) -> SphericalPoint {
    SphericalPoint {
        theta,
        phi: theta.tanh().acos(),
    }
}

/// Unit tangent of the spherical spiral.
pub fn spiral_unit_tangent(theta: f64) -> Vec3 {
    let sech = 1.0 / theta.cosh();
    let tanh = theta.tanh();
    let (st, ct) = (theta.sin(), theta.cos());
    let v = Vec3::new(
        sech * (-st - ct * tanh),
        sech * (ct - st * tanh),
        sech * sech,
    );
    v.normalized()
}

/// Conformality witness at θ: the Mercator image slope −1/sinh θ and the
/// cotangent of the sphere-side angle ∠BPT, which must agree because the
/// projection preserves angles against meridians.
pub fn conformality_check(theta: f64) -> Result<(f64, f64)> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!(
            "conformality check requires theta > 0, got {theta}"
        )));
    }
    let slope_cyl = gd_mercator_slope(theta);
    let elements = interception::triangle_elements_sph(theta)?;
    let cot_sphere = elements.ang_bpt.cos() / elements.ang_bpt.sin();
    Ok((slope_cyl, cot_sphere))
}

/// Cartesian ordinate coth(θ/2)·sin θ of the stereographic spiral; tends to
/// 2 as θ → 0⁺, which identifies y = 2 as the asymptote.
pub fn stereographic_asymptote_check(theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::Domain(format!(
            "asymptote check is taken on 0 < theta < 1, got {theta}"
        )));
    }
    Ok(theta.sin() / (0.5 * theta).tanh())
}

/// Everything measured at the right-angle meeting of the interception curve
/// and the spherical spiral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RightAngleReport {
    /// Fixed point x* of x ↦ ln coth(x/2), found by bisection.
    pub fixed_point: f64,
    /// |x* − asinh 1|: the fixed point is exactly ln(1 + √2).
    pub fixed_point_vs_asinh1: f64,
    /// Product of the two Mercator-image slopes at x*, −1 for a right angle.
    pub slope_product: f64,
    /// Separation of the two sphere curves at θ = x* (they meet there).
    pub sphere_meeting_gap: f64,
    /// Angle between the curves on the sphere at the meeting point.
    pub sphere_angle: f64,
    /// Angle between the stereographic images at the meeting point.
    pub plane_angle: f64,
}

/// Locate the chart crossing of y = x and y = ln coth(x/2) and verify the
/// meetings are orthogonal on the cylinder, the sphere and the plane.
pub fn right_angle_intersections() -> Result<RightAngleReport> {
    // g(x) = ln coth(x/2) − x is strictly decreasing with a sign change
    // inside (0.4, 1.2).
    let g = |x: f64| gd_mercator_ordinate(x) - x;
    let (mut lo, mut hi) = (0.4_f64, 1.2_f64);
    if !(g(lo) > 0.0 && g(hi) < 0.0) {
        return Err(Error::RootNotFound(
            "fixed point of ln coth(x/2) escaped its bracket".into(),
        ));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x_star = 0.5 * (lo + hi);

    // Slope of y = x is 1, so the product reduces to the other slope.
    let diagonal_slope = 1.0;
    let slope_product = diagonal_slope * gd_mercator_slope(x_star);

    // The curves meet on the sphere because gd(x*) = atan(sinh x*) = π/4
    // exactly when sinh x* = 1.
    let p_curve = interception::gd_curve(x_star).vec();
    let p_spiral = spherical_spiral(x_star).vec();
    let sphere_meeting_gap = (p_curve - p_spiral).norm();
    let sphere_angle = interception::unit_tangent(x_star).angle_to(spiral_unit_tangent(x_star));

    // Plane-side tangents of r = coth(θ/2) and r = e^θ at θ = x*.
    let r1 = 1.0 / (0.5 * x_star).tanh();
    let dr1 = -0.5 / ((0.5 * x_star).sinh() * (0.5 * x_star).sinh());
    let tangent1 = polar_tangent(r1, dr1, x_star);
    let r2 = x_star.exp();
    let tangent2 = polar_tangent(r2, r2, x_star);
    let cross = tangent1.0 * tangent2.1 - tangent1.1 * tangent2.0;
    let dot = tangent1.0 * tangent2.0 + tangent1.1 * tangent2.1;
    let plane_angle = cross.abs().atan2(dot);

    Ok(RightAngleReport {
        fixed_point: x_star,
        fixed_point_vs_asinh1: (x_star - 1.0_f64.asinh()).abs(),
        slope_product,
        sphere_meeting_gap,
        sphere_angle,
        plane_angle,
    })
}

fn polar_tangent(r: f64, dr: f64, theta: f64) -> (f64, f64) {
    let (st, ct) = (theta.sin(), theta.cos());
    let v = (dr * ct - r * st, dr * st + r * ct);
    let n = v.0.hypot(v.1);
    (v.0 / n, v.1 / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn equator_maps_to_axis() {
        let q = SphericalPoint::new(0.7, FRAC_PI_2).unwrap();
        let m = mercator(&q).unwrap();
        assert_eq!(m.x, 0.7);
        assert!(m.y.abs() < 1e-15);
        let s = stereographic(&q).unwrap();
        assert!((s.r - 1.0).abs() < 1e-15);
    }

    #[test]
    fn poles_are_rejected() {
        let b = SphericalPoint::pole();
        assert!(matches!(mercator(&b), Err(Error::Pole(_))));
        assert!(matches!(stereographic(&b), Err(Error::Pole(_))));
        let s = SphericalPoint::new(0.0, PI).unwrap();
        assert!(matches!(mercator(&s), Err(Error::Pole(_))));
        // The antipode of B projects to the origin, not an error.
        assert!((stereographic(&s).unwrap().r).abs() < 1e-15);
    }

    #[test]
    fn gd_image_is_ln_coth() {
        for &t in &[0.2, 1.0, 3.0] {
            let p = interception::gd_curve(t);
            let m = mercator(&p).unwrap();
            assert!((m.y - gd_mercator_ordinate(t)).abs() < 1e-13, "theta {t}");
            let s = stereographic(&p).unwrap();
            assert!(
                ((s.r - (0.5 * t).tanh().recip()) / s.r).abs() < 1e-13,
                "theta {t}"
            );
        }
    }

    #[test]
    fn mercator_image_is_self_inverse() {
        for &x in &[0.3, 0.8814, 1.5, 3.0] {
            let twice = gd_mercator_ordinate(gd_mercator_ordinate(x));
            assert!((twice - x).abs() < 1e-12, "x {x}: got {twice}");
        }
    }

    #[test]
    fn spiral_lands_on_diagonal_chart_line() {
        for &t in &[-1.0, 0.4, 2.0] {
            let sp = spherical_spiral(t);
            let v = sp.vec();
            assert!((v.norm() - 1.0).abs() < 1e-14);
            assert!((v.x - t.cos() / t.cosh()).abs() < 1e-14);
            assert!((v.z - t.tanh()).abs() < 1e-14);
            let m = mercator(&sp).unwrap();
            assert!((m.y - m.x).abs() < 1e-12, "theta {t}: chart ({}, {})", m.x, m.y);
        }
        let start = spherical_spiral(0.0).vec();
        assert!((start - Vec3::new(1.0, 0.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn spiral_stereographic_image_is_log_spiral() {
        for &t in &[-2.0, 0.5, 1.5, 3.0] {
            let s = stereographic(&spherical_spiral(t)).unwrap();
            assert!(
                ((s.r - t.exp()) / t.exp()).abs() < 1e-12,
                "theta {t}: r {} vs e^θ {}",
                s.r,
                t.exp()
            );
        }
    }

    #[test]
    fn spiral_crosses_meridians_at_quarter_pi() {
        for &t in &[-1.0, 0.0, 0.9, 2.5] {
            let sp = spherical_spiral(t);
            let v = spiral_unit_tangent(t);
            // Northward meridian direction at the point (decreasing φ).
            let (st, ct) = (t.sin(), t.cos());
            let (sphi, cphi) = (sp.phi.sin(), sp.phi.cos());
            let northward = Vec3::new(-ct * cphi, -st * cphi, sphi);
            let ang = v.angle_to(northward);
            assert!((ang - FRAC_PI_4).abs() < 1e-12, "theta {t}: angle {ang}");
        }
    }

    #[test]
    fn conformality_slope_identity() {
        for &t in &[1.0, 5.0] {
            let (slope, cot) = conformality_check(t).unwrap();
            assert!((slope - cot).abs() < 1e-10, "theta {t}: {slope} vs {cot}");
            assert!((slope - (-1.0 / t.sinh())).abs() < 1e-15);
        }
        // Far along the curve both sides vanish; the sign of the vector-side
        // cotangent is noise at the 1e-18 scale.
        let (slope, cot) = conformality_check(40.0).unwrap();
        assert!(slope < 0.0);
        assert!(slope.abs() < 1e-15 && cot.abs() < 1e-10);
        assert!((slope - cot).abs() < 1e-10);
    }

    #[test]
    fn asymptote_approach() {
        let y = stereographic_asymptote_check(0.01).unwrap();
        assert!((y - 2.0).abs() < 1e-4, "y(0.01) = {y}");
        let y = stereographic_asymptote_check(0.1).unwrap();
        assert!((y - 2.0).abs() < 4e-3);
        // Monotone approach from below 2 as θ decreases.
        let mut prev = stereographic_asymptote_check(0.9).unwrap();
        for i in (1..90).rev() {
            let y = stereographic_asymptote_check(i as f64 * 0.01).unwrap();
            assert!(y >= prev);
            prev = y;
        }
        assert!(matches!(
            stereographic_asymptote_check(0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn right_angles_in_all_three_charts() {
        let report = right_angle_intersections().unwrap();
        assert!((0.4..1.2).contains(&report.fixed_point));
        assert!(report.fixed_point_vs_asinh1 < 1e-12);
        assert!((report.slope_product + 1.0).abs() < 1e-9);
        assert!(report.sphere_meeting_gap < 1e-12);
        assert!((report.sphere_angle - FRAC_PI_2).abs() < 1e-9);
        assert!((report.plane_angle - FRAC_PI_2).abs() < 1e-9);
    }
}
