//! Adaptive Runge-Kutta initial value solver.
//!
//! Dormand-Prince 5(4) with a PI step controller. Two sampling modes are
//! provided: `sample` interpolates between accepted steps with a cubic
//! Hermite (good for plotting), while [`solve_at`] lands on every requested
//! abscissa exactly by clamping the step, so comparisons against closed
//! forms carry no interpolation error.

use crate::error::{Error, Result};

/// Dormand-Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
/// 5th-order solution weights (identical to the last A row, FSAL).
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
/// Embedded 4th-order weights.
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

const MAX_STEPS: usize = 1_000_000;

/// One accepted integration step with the data needed for dense evaluation.
#[derive(Debug, Clone)]
struct Step {
    t0: f64,
    t1: f64,
    y0: Vec<f64>,
    y1: Vec<f64>,
    f0: Vec<f64>,
    f1: Vec<f64>,
}

/// Result of an adaptive integration: the accepted mesh plus dense output.
#[derive(Debug, Clone)]
pub struct Trajectory {
    steps: Vec<Step>,
    t0: f64,
    y0: Vec<f64>,
}

impl Trajectory {
    pub fn t_start(&self) -> f64 {
        self.t0
    }

    pub fn t_end(&self) -> f64 {
        self.steps.last().map_or(self.t0, |s| s.t1)
    }

    /// State at the final integration time.
    pub fn end_state(&self) -> &[f64] {
        self.steps.last().map_or(&self.y0, |s| &s.y1)
    }

    /// Number of accepted steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Dense evaluation by cubic Hermite interpolation on the accepted mesh.
    /// `t` is clamped to the integration range.
    pub fn sample(&self, t: f64) -> Vec<f64> {
        if self.steps.is_empty() {
            return self.y0.clone();
        }
        let t = t.clamp(self.t0.min(self.t_end()), self.t0.max(self.t_end()));
        // Mesh is monotone in t; binary-search the bracketing step.
        let forward = self.t_end() >= self.t0;
        let mut lo = 0;
        let mut hi = self.steps.len() - 1;
        while lo < hi {
            let mid = (lo + hi) / 2;
            let after = if forward {
                t > self.steps[mid].t1
            } else {
                t < self.steps[mid].t1
            };
            if after {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        let s = &self.steps[lo];
        let h = s.t1 - s.t0;
        if h == 0.0 {
            return s.y1.clone();
        }
        let u = (t - s.t0) / h;
        let (h00, h10, h01, h11) = hermite_basis(u);
        (0..s.y0.len())
            .map(|i| {
                h00 * s.y0[i] + h10 * h * s.f0[i] + h01 * s.y1[i] + h11 * h * s.f1[i]
            })
            .collect()
    }
}

fn hermite_basis(u: f64) -> (f64, f64, f64, f64) {
    let u2 = u * u;
    let u3 = u2 * u;
    (
        2.0 * u3 - 3.0 * u2 + 1.0,
        u3 - 2.0 * u2 + u,
        -2.0 * u3 + 3.0 * u2,
        u3 - u2,
    )
}

fn err_norm(err: &[f64], y0: &[f64], y1: &[f64], tol: f64) -> f64 {
    let mut acc = 0.0;
    for i in 0..err.len() {
        let scale = tol + tol * y0[i].abs().max(y1[i].abs());
        let e = err[i] / scale;
        acc += e * e;
    }
    (acc / err.len() as f64).sqrt()
}

/// Integrate y' = f(t, y) from `t0` to `t_end` (either direction) with local
/// error controlled at `tol` (used as both absolute and relative weight).
pub fn solve_ivp<F>(f: F, t0: f64, y0: &[f64], t_end: f64, tol: f64) -> Result<Trajectory>
where
    F: Fn(f64, &[f64], &mut [f64]),
{
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if y0.is_empty() {
        return Err(Error::Domain("state vector must be non-empty".into()));
    }
    if !t0.is_finite() || !t_end.is_finite() {
        return Err(Error::Domain("integration interval must be finite".into()));
    }

    let n = y0.len();
    let direction = if t_end >= t0 { 1.0 } else { -1.0 };
    let span = (t_end - t0).abs();
    let mut traj = Trajectory {
        steps: Vec::new(),
        t0,
        y0: y0.to_vec(),
    };
    if span == 0.0 {
        return Ok(traj);
    }

    let mut t = t0;
    let mut y = y0.to_vec();
    let mut k = vec![vec![0.0_f64; n]; 7];
    f(t, &y, &mut k[0]);
    if k[0].iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("right-hand side not finite at initial state".into()));
    }

    // Initial step: conservative fraction of the span, refined by the controller.
    let mut h = direction * (span / 100.0).min(0.1).max(span * 1e-12);
    let mut err_prev: f64 = 1.0;
    let mut y_stage = vec![0.0_f64; n];
    let mut y_new = vec![0.0_f64; n];
    let mut err_vec = vec![0.0_f64; n];

    for _ in 0..MAX_STEPS {
        if (t - t_end) * direction >= 0.0 {
            return Ok(traj);
        }
        // Clamp the final step onto t_end; a clamped step may be shorter
        // than the underflow floor and is still taken.
        let mut last = false;
        if (t + h - t_end) * direction > 0.0 {
            h = t_end - t;
            last = true;
        }
        let h_floor = 1e-14 * t.abs().max(1.0);
        if !last && h.abs() < h_floor {
            return Err(Error::StepSizeUnderflow { t });
        }

        for stage in 1..7 {
            for i in 0..n {
                let mut acc = 0.0;
                for (j, kj) in k.iter().enumerate().take(stage) {
                    acc += A[stage][j] * kj[i];
                }
                y_stage[i] = y[i] + h * acc;
            }
            let (head, tail) = k.split_at_mut(stage);
            let _ = head;
            f(t + C[stage] * h, &y_stage, &mut tail[0]);
        }
        for i in 0..n {
            let mut acc5 = 0.0;
            let mut acc4 = 0.0;
            for (j, kj) in k.iter().enumerate() {
                acc5 += B5[j] * kj[i];
                acc4 += B4[j] * kj[i];
            }
            y_new[i] = y[i] + h * acc5;
            err_vec[i] = h * (acc5 - acc4);
        }

        let finite = y_new.iter().all(|v| v.is_finite()) && err_vec.iter().all(|v| v.is_finite());
        let err = if finite {
            err_norm(&err_vec, &y, &y_new, tol)
        } else {
            f64::INFINITY
        };

        if err <= 1.0 {
            // Accept. FSAL: stage 7 was evaluated at (t+h, y_new). Landing
            // on t_end is made exact so no one-ulp sliver remains.
            let t_next = if last { t_end } else { t + h };
            let f1 = k[6].clone();
            traj.steps.push(Step {
                t0: t,
                t1: t_next,
                y0: y.clone(),
                y1: y_new.clone(),
                f0: k[0].clone(),
                f1: f1.clone(),
            });
            t = t_next;
            y.copy_from_slice(&y_new);
            k[0].copy_from_slice(&f1);

            let fac = if err == 0.0 {
                5.0
            } else {
                (0.9 * err.powf(-0.7 / 5.0) * err_prev.powf(0.4 / 5.0)).clamp(0.2, 5.0)
            };
            err_prev = err.max(1e-4);
            h *= fac;
        } else if err.is_finite() {
            h *= (0.9 * err.powf(-0.2)).clamp(0.1, 1.0);
        } else {
            h *= 0.1;
        }
    }
    Err(Error::StepSizeUnderflow { t })
}

/// Integrate and return the state at each requested abscissa, hitting every
/// point exactly (no interpolation). `points` must be monotone away from
/// `t0`; the first point may equal `t0`.
pub fn solve_at<F>(f: F, t0: f64, y0: &[f64], points: &[f64], tol: f64) -> Result<Vec<Vec<f64>>>
where
    F: Fn(f64, &[f64], &mut [f64]) + Copy,
{
    if points.is_empty() {
        return Ok(Vec::new());
    }
    let direction = if *points.last().unwrap() >= t0 { 1.0 } else { -1.0 };
    let mut prev = t0;
    for &p in points {
        if (p - prev) * direction < 0.0 {
            return Err(Error::Domain(
                "output points must be monotone in the integration direction".into(),
            ));
        }
        prev = p;
    }

    let mut out = Vec::with_capacity(points.len());
    let mut t = t0;
    let mut y = y0.to_vec();
    for &p in points {
        if p != t {
            let traj = solve_ivp(f, t, &y, p, tol)?;
            y = traj.end_state().to_vec();
            t = p;
        }
        out.push(y.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_rhs_zero() {
        let traj = solve_ivp(|_, _, dy| dy[0] = 0.0, 0.0, &[3.5], 2.0, 1e-10).unwrap();
        assert_eq!(traj.end_state()[0], 3.5);
        assert!((traj.sample(1.3)[0] - 3.5).abs() < 1e-14);
    }

    #[test]
    fn exponential_growth() {
        let traj = solve_ivp(|_, y, dy| dy[0] = y[0], 0.0, &[1.0], 2.0, 1e-11).unwrap();
        assert!((traj.end_state()[0] - 2.0_f64.exp()).abs() < 1e-9);
        // Dense output mid-interval.
        let mid = traj.sample(1.0)[0];
        assert!((mid - 1.0_f64.exp()).abs() < 1e-6);
    }

    #[test]
    fn harmonic_oscillator_system() {
        let f = |_t: f64, y: &[f64], dy: &mut [f64]| {
            dy[0] = y[1];
            dy[1] = -y[0];
        };
        let traj = solve_ivp(f, 0.0, &[0.0, 1.0], std::f64::consts::PI, 1e-12).unwrap();
        assert!(traj.end_state()[0].abs() < 1e-9);
        assert!((traj.end_state()[1] + 1.0).abs() < 1e-9);
    }

    #[test]
    fn halved_tolerance_reduces_error() {
        let errs: Vec<f64> = [1e-5, 1e-7, 1e-9]
            .iter()
            .map(|&tol| {
                let traj = solve_ivp(|_, y, dy| dy[0] = y[0], 0.0, &[1.0], 2.0, tol).unwrap();
                (traj.end_state()[0] - 2.0_f64.exp()).abs()
            })
            .collect();
        assert!(errs[1] < errs[0]);
        assert!(errs[2] < errs[1]);
    }

    #[test]
    fn blowup_reports_singularity() {
        // y' = y² from y(0)=1 blows up at t = 1.
        let res = solve_ivp(|_, y, dy| dy[0] = y[0] * y[0], 0.0, &[1.0], 2.0, 1e-10);
        assert!(matches!(res, Err(Error::StepSizeUnderflow { .. })));
    }

    #[test]
    fn solve_at_hits_points_exactly() {
        let pts = [0.0, 0.25, 0.5, 1.0, 1.7];
        let states = solve_at(|_, y, dy| dy[0] = y[0], 0.0, &[1.0], &pts, 1e-12).unwrap();
        for (p, s) in pts.iter().zip(&states) {
            assert!((s[0] - p.exp()).abs() < 1e-10, "at t = {p}");
        }
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(matches!(
            solve_ivp(|_, _, dy| dy[0] = 0.0, 0.0, &[1.0], 1.0, 0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dense_sampling_over_many_clamped_landings() {
        // Each output point forces a clamped final step; none may strand the
        // integrator one ulp short of its target.
        let pts: Vec<f64> = (1..400).map(|i| 17.0 * i as f64 / 399.0).collect();
        let states = solve_at(|t, _, dy| dy[0] = t.cos(), 0.0, &[0.0], &pts, 1e-10).unwrap();
        for (p, s) in pts.iter().zip(&states) {
            assert!((s[0] - p.sin()).abs() < 1e-8, "at t = {p}");
        }
    }
}
