//! The planar interception curve.
//!
//! A point P starts at the origin and a target Q starts at (1, 0); both move
//! at unit speed, Q up the barrier x = 1 and P constrained to the ray OQ.
//! In cartesian form the curve satisfies
//!
//! ```text
//!     x²·√(1 + y′²) = y′·x − y,                                  (*)
//! ```
//!
//! and with the slope p = y′ ≥ 0 as parameter,
//!
//! ```text
//!     x(p) = (p²+1)^(-1/4) · ∫₀^p dt / (2(t²+1)^(1/4)),
//!     y(p) = p·x(p) − x(p)²·√(p²+1).
//! ```
//!
//! The tangent line at P cuts the axes and the barrier in points F, U, T
//! whose segment lengths obey the tangent-intercept identities checked in
//! `verification`, and the gap |PQ| tends to B², the square of the second
//! lemniscate constant.

use crate::error::{Error, Result};
use crate::extrapolate::{extrapolate_limit, Extrapolated};
use crate::ode::solve_at;
use crate::quad::integrate;

/// Planar point as (x, y).
pub type Point2 = (f64, f64);

/// Absolute tolerance used for the position integral x(p).
const X_TOL: f64 = 1e-11;

/// One point of the planar interception curve, keyed by the slope p = y′.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarCurveState {
    /// Slope parameter p = y′ ≥ 0.
    pub p: f64,
    /// Abscissa, strictly increasing in p with x → 1⁻ as p → ∞.
    pub x: f64,
    /// Ordinate, y ≥ 0.
    pub y: f64,
    /// Polar angle atan2(y, x); 0 at the origin by continuity.
    pub theta: f64,
}

impl PlanarCurveState {
    /// Residual of the cartesian curve equation (*) at this state.
    pub fn eq4_residual(&self) -> f64 {
        eq4_residual(self.p, self.x, self.y)
    }
}

/// Residual |x²√(1+p²) − (p·x − y)| of the cartesian curve equation.
pub fn eq4_residual(p: f64, x: f64, y: f64) -> f64 {
    (x * x * p.hypot(1.0) - (p * x - y)).abs()
}

/// Four-term series solution r₁(θ) = θ + θ³/6 + 7θ⁵/40 + 43θ⁷/720 of the
/// polar equation r² + r′² = sec⁴θ, positive branch.
pub fn series_solution(theta: f64) -> Result<f64> {
    if theta.abs() > 0.5 {
        return Err(Error::Domain(format!(
            "series_solution is only trusted on |theta| <= 0.5, got {theta}"
        )));
    }
    let t2 = theta * theta;
    Ok(theta * (1.0 + t2 * (1.0 / 6.0 + t2 * (7.0 / 40.0 + t2 * (43.0 / 720.0)))))
}

/// Coefficients of the odd powers θ¹, θ³, θ⁵, θ⁷ in the series solution.
pub fn series_coefficients() -> [f64; 4] {
    [1.0, 1.0 / 6.0, 7.0 / 40.0, 43.0 / 720.0]
}

/// Radius r(θ) of the polar equation r′ = √(sec⁴θ − r²), r(0) = 0, by
/// adaptive integration. Only valid away from the sec⁴ blow-up; `theta`
/// must stay below π/2 − 10⁻³.
pub fn polar_ivp_radius(theta: f64, tol: f64) -> Result<f64> {
    let cutoff = std::f64::consts::FRAC_PI_2 - 1e-3;
    if !(0.0..=cutoff).contains(&theta) {
        return Err(Error::Domain(format!(
            "polar IVP is integrated only on [0, pi/2 - 1e-3], got {theta}"
        )));
    }
    if theta == 0.0 {
        return Ok(0.0);
    }
    let rhs = |t: f64, y: &[f64], dy: &mut [f64]| {
        let sec2 = 1.0 / (t.cos() * t.cos());
        dy[0] = (sec2 * sec2 - y[0] * y[0]).max(0.0).sqrt();
    };
    let states = solve_at(rhs, 0.0, &[0.0], &[theta], tol)?;
    Ok(states[0][0])
}

/// The integral I(p) = ∫₀^p dt / (2(t²+1)^(1/4)). The tolerance scales with
/// √p because the value grows like √p and absolute certificates below the
/// rounding floor of a large integral are unreachable.
fn position_integral_tol(p: f64, abs_tol: f64) -> Result<f64> {
    if p == 0.0 {
        return Ok(0.0);
    }
    let tol = abs_tol * p.sqrt().max(1.0);
    Ok(integrate(|t| 0.5 / (t * t + 1.0).sqrt().sqrt(), 0.0, p, tol)?.value)
}

/// Curve state at slope parameter `p` ≥ 0.
pub fn state_at(p: f64) -> Result<PlanarCurveState> {
    state_at_tol(p, X_TOL)
}

/// [`state_at`] with an explicit base tolerance for the position integral.
pub fn state_at_tol(p: f64, abs_tol: f64) -> Result<PlanarCurveState> {
    if !(p >= 0.0) || !p.is_finite() {
        return Err(Error::Domain(format!("state_at requires finite p >= 0, got {p}")));
    }
    if !(abs_tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {abs_tol}")));
    }
    if p == 0.0 {
        return Ok(PlanarCurveState {
            p,
            x: 0.0,
            y: 0.0,
            theta: 0.0,
        });
    }
    let root = p.hypot(1.0); // √(p²+1)
    let x = position_integral_tol(p, abs_tol)? / root.sqrt();
    let y_over_x = p - x * root; // y/x, stable even for large p
    let y = x * y_over_x;
    Ok(PlanarCurveState {
        p,
        x,
        y,
        theta: y.atan2(x),
    })
}

/// Recover the slope y′ from a point (x, y) of the curve by solving the
/// cartesian equation (*): y′ = (y + x·√(x²+y²−x⁴)) / (x(1−x²)).
pub fn slope_from_point(x: f64, y: f64) -> Result<f64> {
    if !(0.0 < x && x < 1.0) {
        return Err(Error::Domain(format!("slope recovery requires 0 < x < 1, got {x}")));
    }
    let disc = x * x + y * y - x.powi(4);
    if disc < 0.0 {
        return Err(Error::Domain(format!(
            "point ({x}, {y}) is not on the curve (negative discriminant)"
        )));
    }
    Ok((y + x * disc.sqrt()) / (x * (1.0 - x * x)))
}

/// First appendix parametrization (parameter q = d(y/x)/dx ≥ 1):
/// x(q) = q^(-1/2)·∫₁^q √t dt/(2√(t²−1)), y = x√(q²−1) − x²q.
pub fn state_at_alt1(q: f64) -> Result<PlanarCurveState> {
    if !(q >= 1.0) || !q.is_finite() {
        return Err(Error::Domain(format!("alt1 requires q >= 1, got {q}")));
    }
    if q == 1.0 {
        return Ok(PlanarCurveState {
            p: 1.0,
            x: 0.0,
            y: 0.0,
            theta: 0.0,
        });
    }
    // Substituting t = cosh u removes the inverse-square-root endpoint
    // singularity: ∫₁^q √t dt/(2√(t²−1)) = ∫₀^{acosh q} √(cosh u)/2 du.
    let integral = integrate(|u| 0.5 * u.cosh().sqrt(), 0.0, q.acosh(), X_TOL)?.value;
    let x = integral / q.sqrt();
    let y = x * (q * q - 1.0).sqrt() - x * x * q;
    let p = slope_from_point(x, y)?;
    Ok(PlanarCurveState {
        p,
        x,
        y,
        theta: y.atan2(x),
    })
}

/// Second appendix parametrization (same parameter space q ≥ 1):
/// z(q) = √q·∫₁^q dt/(2t√t·√(t²−1)), x = √(q²−1)/q − z/q, y = x·z.
pub fn state_at_alt2(q: f64) -> Result<PlanarCurveState> {
    if !(q >= 1.0) || !q.is_finite() {
        return Err(Error::Domain(format!("alt2 requires q >= 1, got {q}")));
    }
    if q == 1.0 {
        return Ok(PlanarCurveState {
            p: 1.0,
            x: 0.0,
            y: 0.0,
            theta: 0.0,
        });
    }
    // t = cosh u again: ∫₁^q dt/(2t√t·√(t²−1)) = ∫₀^{acosh q} du/(2 cosh(u)^(3/2)).
    let z = q.sqrt()
        * integrate(|u| 0.5 / u.cosh().powf(1.5), 0.0, q.acosh(), X_TOL)?.value;
    let x = (q * q - 1.0).sqrt() / q - z / q;
    let y = x * z;
    let p = slope_from_point(x, y)?;
    Ok(PlanarCurveState {
        p,
        x,
        y,
        theta: y.atan2(x),
    })
}

/// Tangent-line and position-line construction at a curve state: the tangent
/// at P meets the x-axis at F, the y-axis at U and the barrier x = 1 at T;
/// the ray OP meets the barrier at Q. Lengths are Euclidean distances
/// between the constructed points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleElementsPlanar {
    pub f: Point2,
    pub u: Point2,
    pub t: Point2,
    pub q: Point2,
    pub p_point: Point2,
    pub len_up: f64,
    pub len_ou: f64,
    pub len_tq: f64,
    pub len_pt: f64,
    pub len_pq: f64,
}

fn dist(a: Point2, b: Point2) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

/// Build the tangent construction at `state`; requires 0 < x < 1 and p > 0.
pub fn triangle_elements(state: &PlanarCurveState) -> Result<TriangleElementsPlanar> {
    let (p, x, y) = (state.p, state.x, state.y);
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!(
            "triangle construction requires 0 < x < 1, got x = {x}"
        )));
    }
    if p == 0.0 {
        return Err(Error::Domain("triangle construction requires p > 0".into()));
    }
    let f = (x - y / p, 0.0);
    let u = (0.0, y - x * p);
    let t = (1.0, y + (1.0 - x) * p);
    let q = (1.0, y / x);
    let p_point = (x, y);
    Ok(TriangleElementsPlanar {
        f,
        u,
        t,
        q,
        p_point,
        len_up: dist(u, p_point),
        len_ou: dist((0.0, 0.0), u),
        len_tq: dist(t, q),
        len_pt: dist(p_point, t),
        len_pq: dist(p_point, q),
    })
}

/// Radii of the two tangent circles through the origin: rP for the circle
/// tangent to the tangent line at P, rQ for the circle tangent to the
/// barrier at Q. The curve equation forces rP = rQ.
pub fn tangent_circle_radii(state: &PlanarCurveState) -> Result<(f64, f64)> {
    let (p, x, y) = (state.p, state.x, state.y);
    if x <= 0.0 {
        return Err(Error::Domain("tangent circles require x > 0".into()));
    }
    let denom = x * p - y;
    if denom <= 0.0 {
        return Err(Error::Domain("tangent circles require x·p > y".into()));
    }
    let r2 = x * x + y * y;
    let r_p = r2 * p.hypot(1.0) / (2.0 * denom);
    let r_q = r2 / (2.0 * x * x);
    Ok((r_p, r_q))
}

/// The gap |PQ| = (1−x)·√(1 + (y/x)²) at slope parameter `p`.
pub fn gap_at(p: f64) -> Result<f64> {
    let s = state_at(p)?;
    if s.x == 0.0 {
        return Ok(1.0); // initial gap |OA|
    }
    let y_over_x = s.p - s.x * s.p.hypot(1.0);
    Ok((1.0 - s.x) * y_over_x.hypot(1.0))
}

/// The difference |PT| − |TQ| = (1−x)(√(1+p²) − p + y/x), evaluated in the
/// cancellation-free form √(1+p²) − p = 1/(√(1+p²) + p).
pub fn pt_minus_tq_at(p: f64) -> Result<f64> {
    let s = state_at(p)?;
    let root = s.p.hypot(1.0);
    let y_over_x = if s.x == 0.0 { 0.0 } else { s.p - s.x * root };
    Ok((1.0 - s.x) * (1.0 / (root + s.p) + y_over_x))
}

/// Slope parameters used for the p → ∞ limit extrapolation; the gap decays
/// like 1/√p, so h = 1/√p is the extrapolation variable.
pub const LIMIT_P_SAMPLES: [f64; 3] = [1e3, 1e4, 1e5];

fn extrapolate_over_p(values: &[f64]) -> Result<Extrapolated> {
    let samples: Vec<(f64, f64)> = LIMIT_P_SAMPLES
        .iter()
        .zip(values)
        .map(|(&p, &v)| (1.0 / p.sqrt(), v))
        .collect();
    extrapolate_limit(&samples)
}

/// Extrapolated limit of |PQ| as p → ∞ (equals B²).
pub fn limit_pq() -> Result<Extrapolated> {
    let vals: Result<Vec<f64>> = LIMIT_P_SAMPLES.iter().map(|&p| gap_at(p)).collect();
    extrapolate_over_p(&vals?)
}

/// Extrapolated limit of |PT| − |TQ| as p → ∞ (equals the |PQ| limit).
pub fn limit_pt_minus_tq() -> Result<Extrapolated> {
    let vals: Result<Vec<f64>> = LIMIT_P_SAMPLES.iter().map(|&p| pt_minus_tq_at(p)).collect();
    extrapolate_over_p(&vals?)
}

/// Arc length of the curve from the origin to `state_at(p)` together with
/// the claimed value y/x from the defining arc-length condition.
///
/// With ds = √(1+t²)·x′(t) dt and x′(t) = 1/(2√(t²+1)) − t·x/(2(t²+1)), the
/// length is ∫₀^p [1/2 − t·x(t)/(2√(t²+1))] dt; x(t) inside the integrand is
/// evaluated by its own quadrature.
pub fn arc_length_check(p: f64) -> Result<(f64, f64)> {
    if !(p > 0.0) {
        return Err(Error::Domain(format!("arc length check requires p > 0, got {p}")));
    }
    let integrand = |t: f64| match state_at(t) {
        Ok(s) => 0.5 - t * s.x / (2.0 * t.hypot(1.0)),
        Err(_) => f64::NAN,
    };
    let arc = integrate(integrand, 0.0, p, 1e-10)?.value;
    let s = state_at(p)?;
    let claim = s.p - s.x * s.p.hypot(1.0); // y/x
    Ok((arc, claim))
}

/// Find the slope parameter p with x(p) = `x_target` by bisection on the
/// monotone map p ↦ x(p). Requires 0 ≤ x_target < 1.
pub fn find_p_for_x(x_target: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x_target) {
        return Err(Error::Domain(format!(
            "x must lie in [0, 1) on the curve, got {x_target}"
        )));
    }
    if x_target == 0.0 {
        return Ok(0.0);
    }
    let mut hi = 1.0;
    while state_at(hi)?.x < x_target {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::RootNotFound(format!(
                "no slope parameter reaches x = {x_target}"
            )));
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if state_at(mid)?.x < x_target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
