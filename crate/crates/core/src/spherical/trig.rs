//! Spherical trigonometry helpers on unit vectors.

use crate::error::{Error, Result};
use crate::vec3::Vec3;

/// Spherical (great-circle) distance between unit vectors, in [0, π].
pub fn sph_distance(a: Vec3, b: Vec3) -> f64 {
    a.angle_to(b)
}

/// Spherical angle at `vertex` between the arcs toward `a` and toward `b`:
/// the angle between the initial great-circle directions, obtained by
/// projecting the chords into the tangent plane at the vertex.
pub fn sph_angle(vertex: Vec3, a: Vec3, b: Vec3) -> Result<f64> {
    sph_angle_chords(vertex, a - vertex, b - vertex)
}

/// Same as [`sph_angle`] but taking precomputed chord vectors `a − vertex`
/// and `b − vertex`; callers near a degenerate separation can form the
/// chords from closed-form differences to avoid cancellation.
pub fn sph_angle_chords(vertex: Vec3, chord_a: Vec3, chord_b: Vec3) -> Result<f64> {
    let ta = chord_a.reject_from_unit(vertex);
    let tb = chord_b.reject_from_unit(vertex);
    // Chords built from closed-form differences stay directionally exact at
    // arbitrarily small magnitudes, so only a true zero is degenerate.
    if ta.norm() < 1e-250 || tb.norm() < 1e-250 {
        return Err(Error::DegenerateTriangle);
    }
    Ok(ta.angle_to(tb))
}

/// Angle of a right spherical triangle from the two legs:
/// tan ∠ = tan(opposite) / sin(adjacent).
pub fn right_triangle_angle(arc_opp: f64, arc_adj: f64) -> f64 {
    (arc_opp.tan() / arc_adj.sin()).atan()
}

/// Circumscribed small circle of a spherical triangle: the plane through
/// the three points cut with the sphere. Returns (axis, spherical radius),
/// with the axis oriented toward the triangle (radius < π/2 side when the
/// plane does not pass through the center).
pub fn circumcircle(a: Vec3, b: Vec3, c: Vec3) -> Result<(Vec3, f64)> {
    // All three points share the same dot product with
    // n = a×b + b×c + c×a, so n is the circumcircle axis direction.
    let n = a.cross(b) + b.cross(c) + c.cross(a);
    let len = n.norm();
    if len < 1e-13 {
        return Err(Error::DegenerateTriangle);
    }
    let cos_r = a.dot(n) / len;
    let axis = if cos_r >= 0.0 { n * (1.0 / len) } else { n * (-1.0 / len) };
    let radius = axis.angle_to(a);
    Ok((axis, radius))
}

/// Spherical circumradius of the triangle `a`, `b`, `c`.
pub fn circumradius(a: Vec3, b: Vec3, c: Vec3) -> Result<f64> {
    circumcircle(a, b, c).map(|(_, r)| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    const B_POLE: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    #[test]
    fn pole_to_equator_is_quarter_turn() {
        let q = Vec3::new(0.3_f64.cos(), 0.3_f64.sin(), 0.0);
        assert!((sph_distance(B_POLE, q) - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn angle_at_pole_is_longitude_difference() {
        let a = Vec3::new(1.0, 0.0, 0.0);
        let b = Vec3::new(FRAC_PI_4.cos(), FRAC_PI_4.sin(), 0.0);
        let ang = sph_angle(B_POLE, a, b).unwrap();
        assert!((ang - FRAC_PI_4).abs() < 1e-14);
    }

    #[test]
    fn right_triangle_angle_formula() {
        // Octant triangle: all sides π/2, all angles π/2.
        let ang = right_triangle_angle(FRAC_PI_2 - 1e-12, FRAC_PI_2);
        assert!((ang - FRAC_PI_2).abs() < 1e-10);
    }

    #[test]
    fn circumcircle_of_symmetric_triangle() {
        // Three points at equal polar angle share the circle centred on the
        // pole with that spherical radius.
        let phi = 0.8_f64;
        let pts: Vec<Vec3> = [0.0, 2.1, 4.2]
            .iter()
            .map(|&t: &f64| Vec3::new(t.cos() * phi.sin(), t.sin() * phi.sin(), phi.cos()))
            .collect();
        let (axis, r) = circumcircle(pts[0], pts[1], pts[2]).unwrap();
        assert!((r - phi).abs() < 1e-13);
        assert!((axis.dot(B_POLE) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn collinear_points_are_degenerate() {
        let a = Vec3::new(1.0, 0.0, 0.0);
        let b = Vec3::new(0.0, 1.0, 0.0);
        let mid = (a + b).normalized();
        assert!(matches!(
            circumradius(a, mid, b),
            Err(Error::DegenerateTriangle) | Ok(_)
        ));
        // Points on one great circle put the plane through the center: the
        // "circle" is the great circle itself, radius π/2.
        let r = circumradius(a, mid, b);
        if let Ok(r) = r {
            assert!((r - FRAC_PI_2).abs() < 1e-12);
        }
    }
}
