//! Points and great circles on the unit sphere.

use crate::error::{Error, Result};
use crate::vec3::Vec3;

/// Point on the unit sphere in spherical coordinates: longitude `theta`
/// (unwrapped, may wind past 2π) and polar angle `phi` ∈ [0, π] measured
/// from the pole B = (0, 0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint {
    pub theta: f64,
    pub phi: f64,
}

impl SphericalPoint {
    /// Checked constructor; `phi` must lie in [0, π].
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&phi) {
            return Err(Error::Domain(format!("polar angle must be in [0, pi], got {phi}")));
        }
        Ok(SphericalPoint { theta, phi })
    }

    /// The pole B = (0, 0, 1), the start of the spherical interception curve.
    pub const fn pole() -> Self {
        SphericalPoint { theta: 0.0, phi: 0.0 }
    }

    /// Unit 3-vector (cos θ sin φ, sin θ sin φ, cos φ).
    pub fn vec(&self) -> Vec3 {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        Vec3::new(ct * sp, st * sp, cp)
    }
}

/// Great circle represented by the unit normal of its plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreatCircle {
    pub normal: Vec3,
}

impl GreatCircle {
    /// Build from any non-zero normal vector; fails on a degenerate input.
    pub fn from_normal(n: Vec3) -> Result<Self> {
        let len = n.norm();
        if len < 1e-13 {
            return Err(Error::DegenerateTangent);
        }
        Ok(GreatCircle {
            normal: n * (1.0 / len),
        })
    }

    /// Signed distance of a unit vector from the circle's plane.
    pub fn plane_distance(&self, v: Vec3) -> f64 {
        self.normal.dot(v)
    }

    /// Whether the point lies on the circle within `tol`.
    pub fn contains(&self, v: Vec3, tol: f64) -> bool {
        self.plane_distance(v).abs() <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vec_is_unit_and_consistent() {
        let p = SphericalPoint::new(1.3, 0.7).unwrap();
        let v = p.vec();
        assert!((v.norm() - 1.0).abs() < 1e-15);
        assert!((v.z - 0.7_f64.cos()).abs() < 1e-15);
        assert!((v.y.atan2(v.x) - 1.3).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_polar_angle() {
        assert!(SphericalPoint::new(0.0, -0.1).is_err());
        assert!(SphericalPoint::new(0.0, 3.2).is_err());
    }

    #[test]
    fn equator_circle_contains_equator_points() {
        let equator = GreatCircle::from_normal(Vec3::new(0.0, 0.0, 2.0)).unwrap();
        assert!((equator.normal.norm() - 1.0).abs() < 1e-15);
        let q = SphericalPoint::new(0.4, std::f64::consts::FRAC_PI_2).unwrap();
        assert!(equator.contains(q.vec(), 1e-15));
        assert!(GreatCircle::from_normal(Vec3::new(0.0, 0.0, 0.0)).is_err());
    }
}
