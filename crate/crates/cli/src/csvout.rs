//! CSV sample emission: header row plus one sample per row, every value
//! printed with 17 significant digits so files round-trip f64 exactly.

use anyhow::{bail, Context, Result};
use intercept_core::planar::{interception, pursuit};
use intercept_core::projections;
use intercept_core::spherical::interception as sph;

/// Curves the `sample` subcommand can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CurveId {
    #[value(name = "planar_interception")]
    PlanarInterception,
    #[value(name = "pursuit")]
    Pursuit,
    #[value(name = "spherical_interception")]
    SphericalInterception,
    #[value(name = "mercator_image")]
    MercatorImage,
    #[value(name = "stereographic_image")]
    StereographicImage,
    #[value(name = "spherical_spiral")]
    SphericalSpiral,
    #[value(name = "helix")]
    Helix,
    #[value(name = "log_spiral")]
    LogSpiral,
}

impl CurveId {
    pub fn default_range(self) -> (f64, f64) {
        match self {
            CurveId::PlanarInterception => (0.0, 10.0),
            CurveId::Pursuit => (0.0, 0.9),
            CurveId::SphericalInterception => (0.0, 12.0),
            CurveId::MercatorImage => (0.05, 6.0),
            CurveId::StereographicImage => (0.3, 12.0),
            CurveId::SphericalSpiral => (-6.0, 6.0),
            CurveId::Helix => (-6.0, 6.0),
            CurveId::LogSpiral => (-4.0, 2.0),
        }
    }

    fn validate_range(self, lo: f64, hi: f64) -> Result<()> {
        #[allow(clippy::neg_cmp_op_on_partial_ord)] // `!(lo < hi)` rejects NaN
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            bail!("range must satisfy lo < hi with finite bounds, got {lo}:{hi}");
        }
        match self {
            CurveId::PlanarInterception | CurveId::SphericalInterception => {
                if lo < 0.0 {
                    bail!("parameter must be >= 0 for this curve, got {lo}");
                }
            }
            CurveId::Pursuit => {
                if lo < 0.0 || hi >= 1.0 {
                    bail!("pursuit curve needs 0 <= x < 1, got {lo}:{hi}");
                }
            }
            CurveId::MercatorImage | CurveId::StereographicImage => {
                if lo <= 0.0 {
                    bail!("projected images need theta > 0 (theta = 0 is the pole), got {lo}");
                }
            }
            CurveId::SphericalSpiral | CurveId::Helix | CurveId::LogSpiral => {}
        }
        Ok(())
    }
}

/// 17 significant digits: one leading digit plus 16 decimals in scientific
/// notation; parses back to the identical f64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

fn push_row(out: &mut String, values: &[f64]) -> Result<()> {
    for v in values {
        if !v.is_finite() {
            bail!("sample produced a non-finite value");
        }
    }
    let row: Vec<String> = values.iter().map(|&v| fmt_f64(v)).collect();
    out.push_str(&row.join(","));
    out.push('\n');
    Ok(())
}

fn curve_name(curve: CurveId) -> &'static str {
    match curve {
        CurveId::PlanarInterception => "planar_interception",
        CurveId::Pursuit => "pursuit",
        CurveId::SphericalInterception => "spherical_interception",
        CurveId::MercatorImage => "mercator_image",
        CurveId::StereographicImage => "stereographic_image",
        CurveId::SphericalSpiral => "spherical_spiral",
        CurveId::Helix => "helix",
        CurveId::LogSpiral => "log_spiral",
    }
}

/// Render the curve samples as a CSV string: one metadata comment line, the
/// header row, then one sample per row.
pub fn sample_csv(curve: CurveId, lo: f64, hi: f64, n: usize, tol: f64) -> Result<String> {
    if n < 2 {
        bail!("need at least 2 samples, got {n}");
    }
    curve.validate_range(lo, hi)?;
    let ps = grid(lo, hi, n);
    let mut out = format!(
        "# curve={} range={}:{} n={n} tol={tol:e} generator=intercept-{}\n",
        curve_name(curve),
        fmt_f64(lo),
        fmt_f64(hi),
        env!("CARGO_PKG_VERSION"),
    );
    match curve {
        CurveId::PlanarInterception => {
            out.push_str("p,x,y,theta\n");
            for &p in &ps {
                let s = interception::state_at_tol(p, tol)
                    .with_context(|| format!("planar state at p = {p}"))?;
                push_row(&mut out, &[s.p, s.x, s.y, s.theta])?;
            }
        }
        CurveId::Pursuit => {
            out.push_str("x,y,gap\n");
            for &x in &ps {
                let s = pursuit::bouguer(x)?;
                push_row(&mut out, &[s.x, s.y, s.gap])?;
            }
        }
        CurveId::SphericalInterception => {
            out.push_str("theta,phi,x,y,z\n");
            for &t in &ps {
                let p = sph::gd_curve(t);
                let v = sph::gd_curve_vec(t);
                push_row(&mut out, &[t, p.phi, v.x, v.y, v.z])?;
            }
        }
        CurveId::MercatorImage => {
            out.push_str("theta,x,y\n");
            for &t in &ps {
                let m = projections::mercator(&sph::gd_curve(t))?;
                push_row(&mut out, &[t, m.x, m.y])?;
            }
        }
        CurveId::StereographicImage => {
            out.push_str("theta,r,angle,x,y\n");
            for &t in &ps {
                let s = projections::stereographic(&sph::gd_curve(t))?;
                let (cx, cy) = s.to_cartesian();
                push_row(&mut out, &[t, s.r, s.angle, cx, cy])?;
            }
        }
        CurveId::SphericalSpiral => {
            out.push_str("theta,x,y,z\n");
            for &t in &ps {
                let v = projections::spherical_spiral(t).vec();
                push_row(&mut out, &[t, v.x, v.y, v.z])?;
            }
        }
        CurveId::Helix => {
            out.push_str("theta,x,y,z\n");
            for &t in &ps {
                push_row(&mut out, &[t, t.cos(), t.sin(), t])?;
            }
        }
        CurveId::LogSpiral => {
            out.push_str("theta,r,x,y\n");
            for &t in &ps {
                let r = t.exp();
                push_row(&mut out, &[t, r, r * t.cos(), r * t.sin()])?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for v in [
            0.1,
            -3.5e-13,
            std::f64::consts::PI,
            0.358_885_005_523_065,
            1.0e5,
        ] {
            let s = fmt_f64(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, v, "{s}");
        }
    }

    #[test]
    fn two_samples_are_exactly_the_endpoints() {
        let csv = sample_csv(CurveId::Pursuit, 0.0, 0.5, 2, 1e-11).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("# curve=pursuit range="));
        assert_eq!(lines[1], "x,y,gap");
        assert!(lines[2].starts_with(&fmt_f64(0.0)));
        assert!(lines[3].starts_with(&fmt_f64(0.5)));
    }

    #[test]
    fn planar_x_column_strictly_increasing() {
        let csv = sample_csv(CurveId::PlanarInterception, 0.0, 10.0, 100, 1e-11).unwrap();
        let mut prev = -1.0;
        for line in csv.lines().skip(2) {
            let x: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
            assert!(x > prev);
            prev = x;
        }
        assert_eq!(csv.lines().count(), 102);
    }

    #[test]
    fn pursuit_gap_ends_near_half() {
        let csv = sample_csv(CurveId::Pursuit, 0.0, 0.9, 10, 1e-11).unwrap();
        let last = csv.lines().last().unwrap();
        let gap: f64 = last.split(',').nth(2).unwrap().parse().unwrap();
        assert!((gap - 0.505).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(sample_csv(CurveId::Pursuit, 0.0, 1.0, 10, 1e-11).is_err());
        assert!(sample_csv(CurveId::MercatorImage, 0.0, 1.0, 10, 1e-11).is_err());
        assert!(sample_csv(CurveId::Pursuit, 0.0, 0.5, 1, 1e-11).is_err());
    }
}
