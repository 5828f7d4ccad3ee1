//! Lemniscate and Gauss constants computed by independent routes.

use crate::agm;
use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::quad::integrate;
use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

/// The second lemniscate constant B and Gauss's constant G.
///
/// B = Γ(3/4)²/√(2π) = 1/(2G) = ∫₀^{π/2} √(cos s)/2 ds, and B² is the
/// limiting pursuer-evader gap of the planar interception curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemniscateConstants {
    /// Second lemniscate constant, B ≈ 0.5990701173677961.
    pub b: f64,
    /// Gauss's constant, G = 1/agm(1, √2) ≈ 0.8346268416740732.
    pub g: f64,
    /// B², the planar gap limit ≈ 0.3588850055230650.
    pub b_squared: f64,
}

/// Maximum disagreement between the three B routes before the kernel is
/// declared broken.
const ROUTE_CONSISTENCY: f64 = 1e-10;

/// Compute B three independent ways (AGM, quadrature, gamma) and return the
/// gamma-route value as canonical, with G from the AGM.
///
/// The three routes are required to agree within 1e-10; a violation means a
/// kernel bug, not a property of the constants.
pub fn lemniscate_constants() -> Result<LemniscateConstants> {
    let m = agm::agm(1.0, SQRT_2, 1e-16)?;
    let g = 1.0 / m;
    let b_agm = m / 2.0; // B = 1/(2G) = agm(1,√2)/2
    let b_quad = integrate(|s| s.cos().sqrt() / 2.0, 0.0, FRAC_PI_2, 1e-13)?.value;
    let g34 = gamma(0.75)?;
    let b_gamma = g34 * g34 / (2.0 * PI).sqrt();

    let spread = (b_agm - b_quad)
        .abs()
        .max((b_agm - b_gamma).abs())
        .max((b_quad - b_gamma).abs());
    if spread > ROUTE_CONSISTENCY {
        return Err(Error::Consistency(format!(
            "lemniscate B routes disagree: agm {b_agm:.17e}, quadrature {b_quad:.17e}, \
             gamma {b_gamma:.17e}"
        )));
    }

    Ok(LemniscateConstants {
        b: b_gamma,
        g,
        b_squared: b_gamma * b_gamma,
    })
}

/// The three B values (agm, quadrature, gamma routes) for reporting.
pub fn lemniscate_b_routes() -> Result<(f64, f64, f64)> {
    let b_agm = agm::agm(1.0, SQRT_2, 1e-16)? / 2.0;
    let b_quad = integrate(|s| s.cos().sqrt() / 2.0, 0.0, FRAC_PI_2, 1e-13)?.value;
    let g34 = gamma(0.75)?;
    let b_gamma = g34 * g34 / (2.0 * PI).sqrt();
    Ok((b_agm, b_quad, b_gamma))
}
