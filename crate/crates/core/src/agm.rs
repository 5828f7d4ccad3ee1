//! Arithmetic-geometric mean iteration.

use crate::error::{Error, Result};

/// Common limit of the arithmetic-geometric iteration
/// aₙ₊₁ = (aₙ+bₙ)/2, bₙ₊₁ = √(aₙbₙ) started from positive `a`, `b`.
///
/// Convergence is quadratic, so the loop terminates in a handful of
/// iterations for any sane tolerance.
pub fn agm(a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(Error::Domain(format!(
            "agm requires positive inputs, got ({a}, {b})"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut x = a.max(b);
    let mut y = a.min(b);
    for _ in 0..64 {
        if x - y <= tol * x {
            break;
        }
        let xn = 0.5 * (x + y);
        let yn = (x * y).sqrt();
        x = xn;
        y = yn;
    }
    Ok(0.5 * (x + y))
}

/// Gauss's constant G = 1/agm(1, √2).
pub fn gauss_constant() -> f64 {
    let m = agm(1.0, std::f64::consts::SQRT_2, 1e-16).expect("fixed positive inputs");
    1.0 / m
}
