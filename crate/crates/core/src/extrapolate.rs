//! Richardson-type limit extrapolation.
//!
//! Given samples (hᵢ, vᵢ) with hᵢ ↓ 0, Neville polynomial extrapolation in h
//! evaluates the interpolant at h = 0. For a model v(h) = L + c₁h + … + cₙhⁿ
//! with n+1 samples the limit L is recovered exactly.

use crate::error::{Error, Result};

/// Extrapolated limit with a residual estimate (difference between the last
/// two Neville columns).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolated {
    pub value: f64,
    pub residual: f64,
}

/// Extrapolate the limit of `samples` = [(h, value)] as h → 0.
/// Requires at least 3 samples with strictly decreasing positive h.
pub fn extrapolate_limit(samples: &[(f64, f64)]) -> Result<Extrapolated> {
    if samples.len() < 3 {
        return Err(Error::Domain(format!(
            "extrapolation needs at least 3 samples, got {}",
            samples.len()
        )));
    }
    let mut prev_h = f64::INFINITY;
    for &(h, v) in samples {
        if !(h > 0.0) || !h.is_finite() || !v.is_finite() {
            return Err(Error::Domain(format!("invalid sample (h = {h}, value = {v})")));
        }
        if h >= prev_h {
            return Err(Error::Domain("h values must be strictly decreasing".into()));
        }
        prev_h = h;
    }

    // Neville tableau evaluated at h = 0.
    let n = samples.len();
    let h: Vec<f64> = samples.iter().map(|s| s.0).collect();
    let mut col: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let mut last_diff = 0.0;
    for level in 1..n {
        for i in 0..(n - level) {
            // P_{i..i+level}(0)
            col[i] = (h[i] * col[i + 1] - h[i + level] * col[i]) / (h[i] - h[i + level]);
        }
        if level == n - 1 {
            last_diff = (col[0] - col[1]).abs();
        }
    }
    Ok(Extrapolated {
        value: col[0],
        residual: last_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_sequence() {
        let r = extrapolate_limit(&[(0.1, 4.0), (0.05, 4.0), (0.01, 4.0)]).unwrap();
        assert_eq!(r.value, 4.0);
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn linear_model_is_exact() {
        let limit = 2.5;
        let c = -0.7;
        let samples: Vec<(f64, f64)> = [0.2, 0.1, 0.04]
            .iter()
            .map(|&h| (h, limit + c * h))
            .collect();
        let r = extrapolate_limit(&samples).unwrap();
        assert!((r.value - limit).abs() < 1e-14);
    }

    #[test]
    fn quadratic_model_is_exact_with_three_points() {
        let samples: Vec<(f64, f64)> = [0.3, 0.15, 0.05]
            .iter()
            .map(|&h| (h, 1.0 + 2.0 * h - 3.0 * h * h))
            .collect();
        let r = extrapolate_limit(&samples).unwrap();
        assert!((r.value - 1.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_short_or_unordered_input() {
        assert!(matches!(
            extrapolate_limit(&[(0.1, 1.0), (0.05, 1.0)]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            extrapolate_limit(&[(0.05, 1.0), (0.1, 1.0), (0.01, 1.0)]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            extrapolate_limit(&[(0.1, 1.0), (0.05, 1.0), (-0.01, 1.0)]),
            Err(Error::Domain(_))
        ));
    }
}
