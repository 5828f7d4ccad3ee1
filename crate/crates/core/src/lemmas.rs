//! Constructive verification of the finite (non-infinitesimal) geometry
//! statements behind the curve identities.
//!
//! Spherical: a pole B over an equator, P₁ and P₂ on the meridians of Q₁
//! and Q₂ with great-circle separation equal to the equator arc Q₁Q₂; the
//! transversal great circle P₁P₂ meets the equator at T with
//! arc P₁T + arc TQ₂ = arc P₂T + arc TQ₁ = π/2, and the circumcircle of
//! B P₁ P₂ satisfies tan R = sec(½P₁P₂)·sec(½BP₁)·sec(½BP₂)/2.
//!
//! Planar: Q₁, Q₂ on the barrier x = 1, P₁, P₂ on the rays OQ₁, OQ₂ with
//! |P₁P₂| = |Q₁Q₂|; the transversal meets x = 0 at U and x = 1 at T, with
//! the intercept-sum, circumradius and product identities checked in
//! [`verify_lemma3`].
//!
//! Shrinking the separation onto a curve point collapses every statement to
//! the tangent-line identities of the curves themselves; the
//! [`limiting_case_convergence`] report measures that collapse and its rate.

use crate::error::{Error, Result};
use crate::planar::interception::{self, PlanarCurveState};
use crate::rng::SplitMix64;
use crate::spherical::interception as sph;
use crate::spherical::trig::{circumradius, sph_angle, sph_distance};
use crate::vec3::Vec3;
use std::f64::consts::FRAC_PI_2;

/// Default seed of the Monte-Carlo harnesses.
pub const DEFAULT_SEED: u64 = 0x1ce9_c07e_5eed;

const B_POLE: Vec3 = Vec3::new(0.0, 0.0, 1.0);

/// Spherical configuration: pole B, equator points Q₁, Q₂ separated by
/// `x_arc`, meridian points P₁ (arc `a` above Q₁) and P₂ (arc `b` above Q₂)
/// with arc P₁P₂ = `x_arc`, and the equator crossing T of the great circle
/// through P₁ and P₂.
#[derive(Debug, Clone, Copy)]
pub struct SphericalLemmaConfig {
    pub x_arc: f64,
    pub a: f64,
    pub b: f64,
    pub q1: Vec3,
    pub q2: Vec3,
    pub p1: Vec3,
    pub p2: Vec3,
    pub t: Vec3,
}

/// Place the configuration from the free parameters (`x_arc`, `a`) and
/// solve for `b` so that arc P₁P₂ = arc Q₁Q₂. On the sphere the matching
/// height is always strictly below `a`: a symmetric (a = b) solution exists
/// only in the degenerate limit x_arc → 0.
pub fn build_spherical_config(x_arc: f64, a: f64) -> Result<SphericalLemmaConfig> {
    if !(0.0 < x_arc && x_arc < FRAC_PI_2) {
        return Err(Error::Domain(format!(
            "arc Q1Q2 must lie in (0, pi/2), got {x_arc}"
        )));
    }
    if !(0.0 < a && a < FRAC_PI_2) {
        return Err(Error::Domain(format!("arc P1Q1 must lie in (0, pi/2), got {a}")));
    }
    let q1 = Vec3::new(1.0, 0.0, 0.0);
    let q2 = Vec3::new(x_arc.cos(), x_arc.sin(), 0.0);
    let p1 = Vec3::new(a.cos(), 0.0, a.sin());
    let p2_at = |b: f64| Vec3::new(x_arc.cos() * b.cos(), x_arc.sin() * b.cos(), b.sin());

    // arc(P₁, P₂(b)) − x_arc is ≥ 0 at b = 0 and ≤ 0 at b = a, and is
    // monotone on [0, a]; bisect.
    let f = |b: f64| sph_distance(p1, p2_at(b)) - x_arc;
    let (mut lo, mut hi) = (0.0_f64, a);
    if f(lo) < 0.0 || f(hi) > 0.0 {
        return Err(Error::NoSolution(format!(
            "no matching height b for (x_arc, a) = ({x_arc}, {a})"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let b = 0.5 * (lo + hi);
    let p2 = p2_at(b);

    // March along the great circle from P₁ through P₂ to the equator.
    let u = (p2 - p1 * p1.dot(p2)).normalized();
    let s_t = p1.z.atan2(-u.z);
    if !(s_t > 0.0) {
        return Err(Error::NoSolution(
            "transversal does not descend to the equator".into(),
        ));
    }
    let t_raw = p1 * s_t.cos() + u * s_t.sin();
    let t = Vec3::new(t_raw.x, t_raw.y, 0.0).normalized();

    Ok(SphericalLemmaConfig {
        x_arc,
        a,
        b,
        q1,
        q2,
        p1,
        p2,
        t,
    })
}

/// Residuals of the two arc sums of the spherical lemma,
/// (|P₁T + TQ₂ − π/2|, |P₂T + TQ₁ − π/2|).
pub fn verify_lemma1(cfg: &SphericalLemmaConfig) -> (f64, f64) {
    let sum1 = sph_distance(cfg.p1, cfg.t) + sph_distance(cfg.t, cfg.q2);
    let sum2 = sph_distance(cfg.p2, cfg.t) + sph_distance(cfg.t, cfg.q1);
    ((sum1 - FRAC_PI_2).abs(), (sum2 - FRAC_PI_2).abs())
}

/// Circumradius identity of the spherical lemma: lhs = tan²R of the
/// constructed circumcircle of B P₁ P₂, rhs = sec²(½P₁P₂)·sec²(½BP₁)·
/// sec²(½BP₂)/4. With the arc constraint in force, the triple product
/// B·(P₁×P₂) equals sin(BP₁)·sin(BP₂)·sin(P₁P₂), which reduces the general
/// three-point circumradius to this product and collapses it to the
/// tangent-circle radius sec⁴(½BP)/4 in the x_arc → 0 limit.
pub fn verify_lemma2(cfg: &SphericalLemmaConfig) -> Result<(f64, f64)> {
    let r = circumradius(B_POLE, cfg.p1, cfg.p2)?;
    let lhs = r.tan().powi(2);
    let sec2 = |arc: f64| {
        let c = (0.5 * arc).cos();
        1.0 / (c * c)
    };
    let arc_p1p2 = sph_distance(cfg.p1, cfg.p2);
    let arc_bp1 = sph_distance(B_POLE, cfg.p1);
    let arc_bp2 = sph_distance(B_POLE, cfg.p2);
    let rhs = 0.25 * sec2(arc_p1p2) * sec2(arc_bp1) * sec2(arc_bp2);
    Ok((lhs, rhs))
}

/// Planar configuration: Q₁, Q₂ on x = 1, P₁ = s₁·Q₁ and P₂ = s₂·Q₂ on the
/// rays with |P₁P₂| = |Q₁Q₂|, and the transversal's intercepts U (x = 0)
/// and T (x = 1).
#[derive(Debug, Clone, Copy)]
pub struct PlanarLemmaConfig {
    pub q1: (f64, f64),
    pub q2: (f64, f64),
    pub p1: (f64, f64),
    pub p2: (f64, f64),
    pub u: (f64, f64),
    pub t: (f64, f64),
    /// Abscissas of P₁ and P₂ (distances to the line x = 0).
    pub x1: f64,
    pub x2: f64,
}

/// Build a planar configuration from the barrier ordinates `q1y` < `q2y`
/// and the ray fraction `s1` ∈ (0, 1) of P₁. The matching fraction s₂ of P₂
/// solves a quadratic; roots outside the open segment, or transversals that
/// degenerate to vertical or pass through O, are rejected.
pub fn build_planar_config(q1y: f64, q2y: f64, s1: f64) -> Result<PlanarLemmaConfig> {
    if !(q2y > q1y) {
        return Err(Error::Domain(format!(
            "barrier ordinates must satisfy q1y < q2y, got {q1y}, {q2y}"
        )));
    }
    if !(0.0 < s1 && s1 < 1.0) {
        return Err(Error::Domain(format!("s1 must lie in (0, 1), got {s1}")));
    }
    let d = q2y - q1y;
    // |P₁P₂|² = d² with P₁ = s₁(1, q1y), P₂ = s₂(1, q2y):
    // s₂²(1+q2y²) − 2s₂s₁(1+q1y·q2y) + s₁²(1+q1y²) − d² = 0.
    let qa = 1.0 + q2y * q2y;
    let qb = s1 * (1.0 + q1y * q2y);
    let qc = s1 * s1 * (1.0 + q1y * q1y) - d * d;
    let disc = qb * qb - qa * qc;
    if disc < 0.0 {
        return Err(Error::NoSolution("no transversal matches the arc constraint".into()));
    }
    let root = disc.sqrt();
    let candidates = [(qb + root) / qa, (qb - root) / qa];
    let eps = 1e-3;
    let s2 = candidates
        .iter()
        .copied()
        .find(|&s2| s2 > eps && s2 < 1.0 - eps && (s2 - s1).abs() > 1e-6)
        .ok_or_else(|| Error::NoSolution("both roots leave the open segments".into()))?;

    let p1 = (s1, s1 * q1y);
    let p2 = (s2, s2 * q2y);
    let dir = (p2.0 - p1.0, p2.1 - p1.1);
    if dir.0.abs() < 1e-9 {
        return Err(Error::DegenerateConfig("vertical transversal".into()));
    }
    let slope = dir.1 / dir.0;
    let u = (0.0, p1.1 - slope * p1.0);
    let t = (1.0, p1.1 + slope * (1.0 - p1.0));
    // A transversal through O collapses triangle O P₁ P₂.
    if u.1.abs() < 1e-9 {
        return Err(Error::DegenerateConfig("transversal passes through O".into()));
    }
    Ok(PlanarLemmaConfig {
        q1: (1.0, q1y),
        q2: (1.0, q2y),
        p1,
        p2,
        u,
        t,
        x1: s1,
        x2: s2,
    })
}

fn dist2(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn sin_angle_at(vertex: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let u = (a.0 - vertex.0, a.1 - vertex.1);
    let v = (b.0 - vertex.0, b.1 - vertex.1);
    (u.0 * v.1 - u.1 * v.0).abs() / (u.0.hypot(u.1) * v.0.hypot(v.1))
}

/// Planar circumradius of a triangle; degenerate for collinear points.
pub fn planar_circumradius(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Result<f64> {
    let area2 = ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).abs();
    if area2 < 1e-12 {
        return Err(Error::DegenerateConfig("collinear circumcircle points".into()));
    }
    Ok(dist2(a, b) * dist2(b, c) * dist2(c, a) / (2.0 * area2))
}

/// Scaled residuals of all parts of the planar lemma.
#[derive(Debug, Clone, Copy)]
pub struct Lemma3Residuals {
    /// |OU| + |TQ₂| = |UP₁|
    pub intercept_sum_1: f64,
    /// |OU| + |TQ₁| = |UP₂|
    pub intercept_sum_2: f64,
    /// circumradius(O, P₁, P₂) = circumradius(O, Q₁, Q₂)
    pub circumradii: f64,
    /// sin∠Q₁P₁T·sin∠Q₂P₂T = |OP₁||OP₂|·sin²∠TQ₁P₁·sin²∠TQ₂P₂
    pub sine_product: f64,
    /// x₁x₂·|P₁T|·|P₂T| = |TQ₁|·|TQ₂|
    pub abscissa_product: f64,
    /// (1−x₁)(1−x₂)·|UP₁|·|UP₂| = |TQ₁|·|TQ₂|
    pub complement_product: f64,
}

impl Lemma3Residuals {
    pub fn max(&self) -> f64 {
        self.intercept_sum_1
            .max(self.intercept_sum_2)
            .max(self.circumradii)
            .max(self.sine_product)
            .max(self.abscissa_product)
            .max(self.complement_product)
    }
}

fn scaled(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0)
}

/// Check every identity of the planar lemma on a configuration.
pub fn verify_lemma3(cfg: &PlanarLemmaConfig) -> Result<Lemma3Residuals> {
    let o = (0.0, 0.0);
    let len_ou = dist2(o, cfg.u);
    let len_tq1 = dist2(cfg.t, cfg.q1);
    let len_tq2 = dist2(cfg.t, cfg.q2);
    let len_up1 = dist2(cfg.u, cfg.p1);
    let len_up2 = dist2(cfg.u, cfg.p2);
    let len_p1t = dist2(cfg.p1, cfg.t);
    let len_p2t = dist2(cfg.p2, cfg.t);

    let r_p = planar_circumradius(o, cfg.p1, cfg.p2)?;
    let r_q = planar_circumradius(o, cfg.q1, cfg.q2)?;

    let sin_q1p1t = sin_angle_at(cfg.p1, cfg.q1, cfg.t);
    let sin_q2p2t = sin_angle_at(cfg.p2, cfg.q2, cfg.t);
    let sin_tq1p1 = sin_angle_at(cfg.q1, cfg.t, cfg.p1);
    let sin_tq2p2 = sin_angle_at(cfg.q2, cfg.t, cfg.p2);
    let op1 = dist2(o, cfg.p1);
    let op2 = dist2(o, cfg.p2);

    Ok(Lemma3Residuals {
        intercept_sum_1: scaled(len_ou + len_tq2, len_up1),
        intercept_sum_2: scaled(len_ou + len_tq1, len_up2),
        circumradii: scaled(r_p, r_q),
        sine_product: scaled(
            sin_q1p1t * sin_q2p2t,
            op1 * op2 * sin_tq1p1 * sin_tq1p1 * sin_tq2p2 * sin_tq2p2,
        ),
        abscissa_product: scaled(cfg.x1 * cfg.x2 * len_p1t * len_p2t, len_tq1 * len_tq2),
        complement_product: scaled(
            (1.0 - cfg.x1) * (1.0 - cfg.x2) * len_up1 * len_up2,
            len_tq1 * len_tq2,
        ),
    })
}

/// Monte-Carlo sweep of the spherical arc-sum lemma: `draws` feasible
/// configurations from the fixed `seed`, returning the maximum residual.
pub fn monte_carlo_lemma1(seed: u64, draws: usize) -> Result<f64> {
    let mut rng = SplitMix64::new(seed);
    let mut worst = 0.0_f64;
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < draws {
        attempts += 1;
        if attempts > draws * 50 {
            return Err(Error::NoSolution("sampler failed to reach the draw budget".into()));
        }
        let x_arc = rng.uniform(0.02, 1.45);
        let a = rng.uniform(0.02, 1.45);
        let cfg = match build_spherical_config(x_arc, a) {
            Ok(cfg) => cfg,
            Err(_) => continue,
        };
        let (r1, r2) = verify_lemma1(&cfg);
        worst = worst.max(r1).max(r2);
        accepted += 1;
    }
    Ok(worst)
}

/// Monte-Carlo sweep of the spherical circumradius lemma; returns the
/// maximum relative residual |lhs − rhs|/rhs.
pub fn monte_carlo_lemma2(seed: u64, draws: usize) -> Result<f64> {
    let mut rng = SplitMix64::new(seed);
    let mut worst = 0.0_f64;
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < draws {
        attempts += 1;
        if attempts > draws * 50 {
            return Err(Error::NoSolution("sampler failed to reach the draw budget".into()));
        }
        let x_arc = rng.uniform(0.02, 1.45);
        let a = rng.uniform(0.02, 1.45);
        let cfg = match build_spherical_config(x_arc, a) {
            Ok(cfg) => cfg,
            Err(_) => continue,
        };
        let (lhs, rhs) = match verify_lemma2(&cfg) {
            Ok(pair) => pair,
            Err(_) => continue,
        };
        worst = worst.max((lhs - rhs).abs() / rhs);
        accepted += 1;
    }
    Ok(worst)
}

/// Monte-Carlo sweep of the planar lemma; returns the maximum scaled
/// residual across all six identities.
pub fn monte_carlo_lemma3(seed: u64, draws: usize) -> Result<f64> {
    let mut rng = SplitMix64::new(seed);
    let mut worst = 0.0_f64;
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < draws {
        attempts += 1;
        if attempts > draws * 200 {
            return Err(Error::NoSolution("sampler failed to reach the draw budget".into()));
        }
        let q1y = rng.uniform(0.0, 2.5);
        let d = rng.uniform(0.1, 1.5);
        let s1 = rng.uniform(0.1, 0.9);
        let cfg = match build_planar_config(q1y, q1y + d, s1) {
            Ok(cfg) => cfg,
            Err(_) => continue,
        };
        let residuals = match verify_lemma3(&cfg) {
            Ok(r) => r,
            Err(_) => continue,
        };
        worst = worst.max(residuals.max());
        accepted += 1;
    }
    Ok(worst)
}

/// Convergence of one lemma family toward its curve-level counterpart:
/// residuals at separations 1e-2 and 1e-3 and the observed order
/// log₁₀(r_coarse/r_fine).
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceRow {
    pub residual_coarse: f64,
    pub residual_fine: f64,
    pub order: f64,
}

impl ConvergenceRow {
    fn from_residuals(coarse: f64, fine: f64) -> ConvergenceRow {
        ConvergenceRow {
            residual_coarse: coarse,
            residual_fine: fine,
            order: (coarse / fine).log10(),
        }
    }
}

/// Limiting-case study: finite configurations anchored to a point of each
/// interception curve, with the separation driven to zero.
#[derive(Debug, Clone, Copy)]
pub struct LimitingCaseReport {
    /// Spherical arc-sum lemma against the tangent-triangle identities.
    pub lemma1: ConvergenceRow,
    /// Spherical circumradius lemma against the tangent small circle.
    pub lemma2: ConvergenceRow,
    /// Planar lemma against the tangent-line and tangent-circle identities.
    pub lemma3: ConvergenceRow,
}

/// Angle-level residual of the spherical lemma against the curve triangle
/// at `theta0`, with equator separation `x_arc`.
fn lemma1_vs_curve(theta0: f64, x_arc: f64) -> Result<f64> {
    let elements = sph::triangle_elements_sph(theta0)?;
    let a = FRAC_PI_2 - elements.arc_bp; // height of the curve point
    let cfg = build_spherical_config(x_arc, a)?;
    // Sphere angles at the configuration corners against the tangent values.
    let ang_p2 = sph_angle(cfg.p2, B_POLE, cfg.p1)?;
    let ang_p1 = sph_angle(cfg.p1, B_POLE, cfg.p2)?;
    let r_angle1 = (ang_p2 - elements.ang_qpt).abs();
    let r_angle2 = (ang_p1 - elements.ang_bpt).abs();
    let r_arc = (sph_distance(cfg.p1, cfg.t) - elements.arc_pt).abs();
    Ok(r_angle1.max(r_angle2).max(r_arc))
}

/// Radius residual of the spherical circumradius lemma against the tangent
/// small circle at `theta0`.
fn lemma2_vs_curve(theta0: f64, x_arc: f64) -> Result<f64> {
    let elements = sph::triangle_elements_sph(theta0)?;
    let a = FRAC_PI_2 - elements.arc_bp;
    let cfg = build_spherical_config(x_arc, a)?;
    let constructed = circumradius(B_POLE, cfg.p1, cfg.p2)?;
    let tangent = sph::small_circle_radius(theta0)?;
    Ok((constructed - tangent).abs())
}

/// Residual of the planar lemma anchored at the curve state against the
/// tangent-line and tangent-circle values.
fn lemma3_vs_curve(state: &PlanarCurveState, delta: f64) -> Result<f64> {
    let elements = interception::triangle_elements(state)?;
    let (r_p, _) = interception::tangent_circle_radii(state)?;
    let qy = elements.q.1;
    let q1y = qy - 0.5 * delta;
    let q2y = qy + 0.5 * delta;
    // P₁ at the tangent-line intersection with the ray OQ₁.
    let s1 = (state.p * state.x - state.y) / (state.p - q1y);
    let cfg = build_planar_config(q1y, q2y, s1)?;
    let o = (0.0, 0.0);
    let r_ou = (dist2(o, cfg.u) - elements.len_ou).abs();
    let r_up = (dist2(cfg.u, cfg.p1) - elements.len_up).abs();
    let r_tq = (dist2(cfg.t, cfg.q2) - elements.len_tq).abs();
    let r_radius = (planar_circumradius(o, cfg.p1, cfg.p2)? - r_p).abs();
    Ok(r_ou.max(r_up).max(r_tq).max(r_radius))
}

/// Run the limiting-case study at the standard anchors (θ₀ = 1 on the
/// sphere, p₀ = 1 in the plane) with separations 1e-2 and 1e-3.
pub fn limiting_case_convergence() -> Result<LimitingCaseReport> {
    let theta0 = 1.0;
    let state = interception::state_at(1.0)?;
    let coarse = 1e-2;
    let fine = 1e-3;
    Ok(LimitingCaseReport {
        lemma1: ConvergenceRow::from_residuals(
            lemma1_vs_curve(theta0, coarse)?,
            lemma1_vs_curve(theta0, fine)?,
        ),
        lemma2: ConvergenceRow::from_residuals(
            lemma2_vs_curve(theta0, coarse)?,
            lemma2_vs_curve(theta0, fine)?,
        ),
        lemma3: ConvergenceRow::from_residuals(
            lemma3_vs_curve(&state, coarse)?,
            lemma3_vs_curve(&state, fine)?,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spherical_config_satisfies_constraints() {
        let cfg = build_spherical_config(0.3, 0.5).unwrap();
        assert!((sph_distance(cfg.p1, cfg.p2) - 0.3).abs() < 1e-12);
        assert!((sph_distance(cfg.q1, cfg.q2) - 0.3).abs() < 1e-14);
        assert!(cfg.t.z.abs() < 1e-12);
        // Spherical asymmetry: the matching height is strictly below a.
        assert!(cfg.b < cfg.a);
        // T lies on the great circle through P₁ and P₂.
        let n = cfg.p1.cross(cfg.p2).normalized();
        assert!(n.dot(cfg.t).abs() < 1e-12);
    }

    #[test]
    fn arc_sums_at_reference_config() {
        let cfg = build_spherical_config(0.3, 0.5).unwrap();
        let (r1, r2) = verify_lemma1(&cfg);
        assert!(r1 < 1e-10, "first sum residual {r1}");
        assert!(r2 < 1e-10, "second sum residual {r2}");
    }

    #[test]
    fn circumradius_formula_at_reference_config() {
        let cfg = build_spherical_config(std::f64::consts::FRAC_PI_3, std::f64::consts::FRAC_PI_3)
            .unwrap();
        let (lhs, rhs) = verify_lemma2(&cfg).unwrap();
        assert!(
            (lhs - rhs).abs() < 1e-10 * rhs,
            "tan²R {lhs} vs formula {rhs}"
        );
    }

    #[test]
    fn rejects_out_of_range_arcs() {
        assert!(build_spherical_config(0.0, 0.5).is_err());
        assert!(build_spherical_config(0.3, 1.6).is_err());
    }

    #[test]
    fn monte_carlo_sweeps_stay_tight() {
        assert!(monte_carlo_lemma1(DEFAULT_SEED, 50).unwrap() < 1e-9);
        assert!(monte_carlo_lemma2(DEFAULT_SEED, 50).unwrap() < 1e-8);
        assert!(monte_carlo_lemma3(DEFAULT_SEED, 100).unwrap() < 1e-9);
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let a = monte_carlo_lemma3(7, 40).unwrap();
        let b = monte_carlo_lemma3(7, 40).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn planar_config_and_identities() {
        let cfg = build_planar_config(0.0, 1.0, 0.5).unwrap();
        assert!((dist2(cfg.p1, cfg.p2) - dist2(cfg.q1, cfg.q2)).abs() < 1e-12);
        let residuals = verify_lemma3(&cfg).unwrap();
        assert!(residuals.max() < 1e-12, "residuals {residuals:?}");
    }

    #[test]
    fn limiting_cases_converge_with_first_order() {
        let report = limiting_case_convergence().unwrap();
        for (name, row) in [
            ("lemma1", report.lemma1),
            ("lemma2", report.lemma2),
            ("lemma3", report.lemma3),
        ] {
            assert!(
                row.residual_fine < 1e-3,
                "{name} residual at 1e-3 separation: {}",
                row.residual_fine
            );
            assert!(row.order >= 0.99, "{name} observed order {}", row.order);
        }
    }
}
