//! Bouguer's pursuit curve and the strategy comparison.
//!
//! The pursuer's tangent always points at the target, which runs up the
//! barrier x = 1 at the same speed; the trajectory solves
//! √(1+y′²) = (1−x)·y″ with y(0) = y′(0) = 0 and has the closed form
//! (Bouguer, 1732)
//!
//! ```text
//!     y = (1−x)²/4 − ln(1−x)/2 − 1/4,    |PQ| = 1/2 + (1−x)²/2.
//! ```
//!
//! The gap decreases to 1/2, strictly worse than the interception curve's
//! limit B² ≈ 0.3589, while running straight along y = kx before turning up
//! the barrier freezes the gap at √(k²+1) − k, arbitrarily small for large k.

use crate::error::{Error, Result};
use crate::ode::solve_at;
use crate::planar::interception;
use crate::quad::integrate;

/// One point of Bouguer's pursuit curve with the current pursuer-evader gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PursuitState {
    pub x: f64,
    pub y: f64,
    /// |PQ| = 1/2 + (1−x)²/2.
    pub gap: f64,
}

/// Closed-form pursuit state at abscissa `x` ∈ [0, 1).
pub fn bouguer(x: f64) -> Result<PursuitState> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!("pursuit curve requires 0 <= x < 1, got {x}")));
    }
    let u = 1.0 - x;
    Ok(PursuitState {
        x,
        y: u * u / 4.0 - u.ln() / 2.0 - 0.25,
        gap: 0.5 + u * u / 2.0,
    })
}

/// Slope y′(x) = 1/(2(1−x)) − (1−x)/2 of the closed form.
pub fn bouguer_slope(x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!("pursuit curve requires 0 <= x < 1, got {x}")));
    }
    let u = 1.0 - x;
    Ok(0.5 / u - 0.5 * u)
}

/// Limiting gap of the pursuit curve as x → 1⁻, exactly 1/2 from the closed
/// form.
pub fn limit_gap() -> f64 {
    0.5
}

/// Integrate the pursuit ODE y″ = √(1+y′²)/(1−x) from rest and return
/// (y, y′) at each requested abscissa. Points must stay below 0.999 to keep
/// clear of the logarithmic singularity at the barrier.
pub fn pursuit_ivp(points: &[f64], tol: f64) -> Result<Vec<[f64; 2]>> {
    if let Some(&worst) = points.iter().max_by(|a, b| a.total_cmp(b)) {
        if worst > 0.999 {
            return Err(Error::Domain(format!(
                "pursuit IVP stops at x = 0.999, requested {worst}"
            )));
        }
    }
    let rhs = |x: f64, y: &[f64], dy: &mut [f64]| {
        dy[0] = y[1];
        dy[1] = y[1].hypot(1.0) / (1.0 - x);
    };
    let states = solve_at(rhs, 0.0, &[0.0, 0.0], points, tol)?;
    Ok(states.into_iter().map(|s| [s[0], s[1]]).collect())
}

/// Equal-speed consistency of the pursuit construction: the pursuer's arc
/// length from 0 to `x` must equal the evader's traveled distance, read off
/// as the tangent-line intercept with the barrier, y_Q = y + (1−x)·y′.
pub fn pursuit_equal_speed_check(x: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!("pursuit curve requires 0 <= x < 1, got {x}")));
    }
    if x == 0.0 {
        return Ok((0.0, 0.0));
    }
    let arc = integrate(
        |t| match bouguer_slope(t) {
            Ok(slope) => slope.hypot(1.0),
            Err(_) => f64::NAN,
        },
        0.0,
        x,
        1e-11,
    )?
    .value;
    let state = bouguer(x)?;
    let evader = state.y + (1.0 - x) * bouguer_slope(x)?;
    Ok((arc, evader))
}

/// Gap of the straight-line strategy y = kx: after P reaches the barrier the
/// distance freezes at √(k²+1) − k = 1/(√(k²+1) + k).
pub fn line_strategy_gap(k: f64) -> Result<f64> {
    if !(k >= 0.0) {
        return Err(Error::Domain(format!("line strategy requires k >= 0, got {k}")));
    }
    Ok(1.0 / (k.hypot(1.0) + k))
}

/// One row of the strategy comparison: a chase strategy and its limiting gap.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub strategy: String,
    pub limit_gap: f64,
}

/// Limiting-gap comparison across strategies.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    /// Extrapolated interception limit (equals B²).
    pub interception_limit: f64,
    /// Closed-form B² for reference.
    pub b_squared: f64,
    /// The headline ordering: the interception curve beats the pursuit curve.
    pub interception_beats_pursuit: bool,
}

/// Build the limiting-gap table: interception → B² (extrapolated), pursuit
/// → 1/2, straight-line strategies → √(k²+1) − k for a few k.
pub fn comparison_report() -> Result<ComparisonReport> {
    let interception = interception::limit_pq()?.value;
    let b_squared = crate::constants::lemniscate_constants()?.b_squared;
    let mut rows = vec![
        ComparisonRow {
            strategy: "interception".to_string(),
            limit_gap: interception,
        },
        ComparisonRow {
            strategy: "pursuit".to_string(),
            limit_gap: limit_gap(),
        },
    ];
    for k in [0.0, 0.75, 2.0, 10.0] {
        rows.push(ComparisonRow {
            strategy: format!("line k={k}"),
            limit_gap: line_strategy_gap(k)?,
        });
    }
    Ok(ComparisonReport {
        rows,
        interception_limit: interception,
        b_squared,
        interception_beats_pursuit: b_squared < limit_gap(),
    })
}
