//! Static SVG figures: the planar curve construction, the interception vs
//! pursuit comparison, the spherical curve in an orthographic view and the
//! projected curve catalogue.

use crate::svg::{Frame, Svg, HEIGHT, WIDTH};
use anyhow::Result;
use intercept_core::planar::{interception, pursuit};
use intercept_core::projections;
use intercept_core::spherical::interception as sph;
use intercept_core::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Figure {
    #[value(name = "fig1")]
    Fig1,
    #[value(name = "fig2")]
    Fig2,
    #[value(name = "fig3")]
    Fig3,
    #[value(name = "fig4")]
    Fig4,
}

pub fn render(figure: Figure) -> Result<String> {
    match figure {
        Figure::Fig1 => fig1(),
        Figure::Fig2 => fig2(),
        Figure::Fig3 => fig3(),
        Figure::Fig4 => fig4(),
    }
}

fn planar_curve_points(p_max: f64, n: usize, tol: f64) -> Result<Vec<(f64, f64)>> {
    let mut pts = Vec::with_capacity(n);
    for i in 0..n {
        let p = p_max * (i as f64 / (n - 1) as f64).powi(2);
        let s = interception::state_at_tol(p, tol)?;
        pts.push((s.x, s.y));
    }
    Ok(pts)
}

/// Planar interception curve with its tangent line, position line and the
/// barrier x = 1.
fn fig1() -> Result<String> {
    let mut svg = Svg::new();
    let frame = Frame {
        x_range: (-0.08, 1.12),
        y_range: (-0.12, 1.55),
        px_origin: (60.0, 20.0),
        px_size: (WIDTH - 120.0, HEIGHT - 70.0),
    };

    // Axes.
    svg.line(frame.map(-0.08, 0.0), frame.map(1.12, 0.0), "#999999", 1.0, None);
    svg.line(frame.map(0.0, -0.12), frame.map(0.0, 1.55), "#999999", 1.0, None);

    // Barrier x = 1 (blue, like the curve).
    svg.line(frame.map(1.0, -0.12), frame.map(1.0, 1.55), "#3366cc", 2.5, Some("barrier"));

    // The curve (blue).
    let pts = planar_curve_points(8.0, 260, 1e-10)?;
    svg.path(&frame.map_all(&pts), "#3366cc", 2.0, Some("interception_curve"));

    // Tangent line at p = 1 (black): from U on the y-axis to T on x = 1.
    let s = interception::state_at(1.0)?;
    let t = interception::triangle_elements(&s)?;
    svg.path(
        &frame.map_all(&[t.u, t.t]),
        "#111111",
        1.5,
        Some("tangent_line"),
    );
    // Position line through O and Q (black, thin).
    svg.path(
        &frame.map_all(&[(0.0, 0.0), t.q]),
        "#111111",
        1.0,
        Some("position_line"),
    );

    svg.text(frame.map(0.02, 1.45), "interception curve and its tangent construction", 14.0);
    svg.text(frame.map(1.01, -0.07), "x = 1", 12.0);
    Ok(svg.finish())
}

fn panel_curve(
    svg: &mut Svg,
    frame: &Frame,
    curve: &[(f64, f64)],
    state: ((f64, f64), (f64, f64), (f64, f64)),
    label: &str,
) {
    let (u, t_point, q) = state;
    svg.rect(
        (frame.px_origin.0, frame.px_origin.1),
        (frame.px_size.0, frame.px_size.1),
        "#cccccc",
    );
    // Barrier x = 1 (thick blue).
    svg.line(frame.map(1.0, frame.y_range.0), frame.map(1.0, frame.y_range.1), "#3366cc", 3.0, None);
    // Curve (red).
    svg.path(&frame.map_all(curve), "#cc2222", 2.0, None);
    // Tangent line (green).
    svg.path(&frame.map_all(&[u, t_point]), "#228833", 1.5, None);
    // Position line (thin blue).
    svg.path(&frame.map_all(&[(0.0, 0.0), q]), "#3366cc", 1.0, None);
    svg.text(
        (frame.px_origin.0 + 8.0, frame.px_origin.1 + 18.0),
        label,
        13.0,
    );
}

/// Interception (left) and pursuit (right) side by side with tangent and
/// position lines.
fn fig2() -> Result<String> {
    let mut svg = Svg::new();
    let y_max = 1.9;
    let left = Frame {
        x_range: (-0.08, 1.1),
        y_range: (-0.1, y_max),
        px_origin: (40.0, 30.0),
        px_size: (WIDTH / 2.0 - 70.0, HEIGHT - 90.0),
    };
    let right = Frame {
        x_range: (-0.08, 1.1),
        y_range: (-0.1, y_max),
        px_origin: (WIDTH / 2.0 + 30.0, 30.0),
        px_size: (WIDTH / 2.0 - 70.0, HEIGHT - 90.0),
    };

    svg.group("panel");
    let pts = planar_curve_points(12.0, 260, 1e-10)?;
    let s = interception::state_at(2.0)?;
    let t = interception::triangle_elements(&s)?;
    panel_curve(&mut svg, &left, &pts, (t.p_point, t.t, t.q), "interception");
    svg.end_group();

    svg.group("panel");
    let mut ppts = Vec::new();
    for i in 0..260 {
        let x = 0.985 * i as f64 / 259.0;
        let st = pursuit::bouguer(x)?;
        ppts.push((st.x, st.y));
    }
    // Tangent of the pursuit curve points at the evader: from the curve
    // point to Q = (1, y + (1-x)y').
    let x0 = 0.6;
    let st = pursuit::bouguer(x0)?;
    let slope = pursuit::bouguer_slope(x0)?;
    let q = (1.0, st.y + (1.0 - x0) * slope);
    panel_curve(&mut svg, &right, &ppts, ((x0, st.y), q, q), "pursuit");
    svg.end_group();

    Ok(svg.finish())
}

/// Orthographic camera with fixed azimuth 30°, elevation 25°.
fn project(v: Vec3) -> (f64, f64) {
    let az = 30.0_f64.to_radians();
    let el = 25.0_f64.to_radians();
    let right = Vec3::new(-az.sin(), az.cos(), 0.0);
    let up = Vec3::new(-el.sin() * az.cos(), -el.sin() * az.sin(), el.cos());
    (v.dot(right), v.dot(up))
}

/// Spherical interception curve with its tangent great circle, a meridian
/// and the equator.
fn fig3() -> Result<String> {
    let mut svg = Svg::new();
    let frame = Frame {
        x_range: (-1.35, 1.35),
        y_range: (-1.05, 1.05),
        px_origin: (100.0, 10.0),
        px_size: (WIDTH - 200.0, HEIGHT - 20.0),
    };

    // Silhouette of the unit sphere under orthographic projection.
    let o = frame.map(0.0, 0.0);
    let r_px = frame.map(1.0, 0.0).0 - o.0;
    svg.circle(o, r_px, "#555555", 1.0);

    let circle3d = |f: &dyn Fn(f64) -> Vec3| -> Vec<(f64, f64)> {
        (0..=240)
            .map(|i| {
                let s = std::f64::consts::TAU * i as f64 / 240.0;
                project(f(s))
            })
            .collect()
    };

    // Equator (black).
    let equator = circle3d(&|s: f64| Vec3::new(s.cos(), s.sin(), 0.0));
    svg.path(&frame.map_all(&equator), "#111111", 1.2, Some("equator"));

    // Meridian through longitude 0 (red).
    let meridian = circle3d(&|s: f64| Vec3::new(s.sin(), 0.0, s.cos()));
    svg.path(&frame.map_all(&meridian), "#cc2222", 1.2, Some("meridian"));

    // Tangent great circle at θ = 1 (dark blue).
    let p = sph::gd_curve_vec(1.0);
    let v = sph::unit_tangent(1.0);
    let tangent = circle3d(&|s: f64| p * s.cos() + v * s.sin());
    svg.path(&frame.map_all(&tangent), "#1a2e8c", 1.4, Some("tangent_great_circle"));

    // The curve itself (light blue), winding from the pole to the equator.
    let curve: Vec<(f64, f64)> = (0..=900)
        .map(|i| {
            let theta = 14.0 * i as f64 / 900.0;
            project(sph::gd_curve_vec(theta))
        })
        .collect();
    svg.path(&frame.map_all(&curve), "#5ab4e5", 2.0, Some("interception_curve"));

    Ok(svg.finish())
}

/// Cylinder chart and stereographic plane with the catalogue curves.
fn fig4() -> Result<String> {
    let mut svg = Svg::new();

    // Left panel: unrolled cylinder chart.
    let cyl = Frame {
        x_range: (0.0, 3.4),
        y_range: (0.0, 3.4),
        px_origin: (45.0, 40.0),
        px_size: (WIDTH / 2.0 - 80.0, HEIGHT - 110.0),
    };
    svg.group("panel");
    svg.rect((cyl.px_origin.0, cyl.px_origin.1), (cyl.px_size.0, cyl.px_size.1), "#cccccc");
    // Mercator image of the interception curve, y = ln coth(x/2) (green).
    let merc: Vec<(f64, f64)> = (0..=300)
        .map(|i| {
            let x = 0.16 + (3.4 - 0.16) * i as f64 / 300.0;
            (x, projections::gd_mercator_ordinate(x))
        })
        .collect();
    svg.path(&cyl.map_all(&merc), "#228833", 2.0, Some("mercator_image"));
    // Helix chart line y = x (orange).
    svg.path(
        &cyl.map_all(&[(0.0, 0.0), (3.4, 3.4)]),
        "#e07b1a",
        2.0,
        Some("helix_line"),
    );
    svg.text((cyl.px_origin.0 + 8.0, cyl.px_origin.1 + 18.0), "cylinder chart", 13.0);
    svg.end_group();

    // Right panel: stereographic plane.
    let plane = Frame {
        x_range: (-4.2, 4.2),
        y_range: (-3.6, 3.6),
        px_origin: (WIDTH / 2.0 + 20.0, 40.0),
        px_size: (WIDTH / 2.0 - 60.0, HEIGHT - 110.0),
    };
    svg.group("panel");
    svg.rect(
        (plane.px_origin.0, plane.px_origin.1),
        (plane.px_size.0, plane.px_size.1),
        "#cccccc",
    );
    // Asymptote y = 2 (yellow).
    svg.line(
        plane.map(-4.2, 2.0),
        plane.map(4.2, 2.0),
        "#e6c300",
        2.0,
        Some("asymptote"),
    );
    // Stereographic image of the interception curve, r = coth(θ/2) (black).
    let stereo: Vec<(f64, f64)> = (0..=700)
        .map(|i| {
            let t = 0.52 + (14.0 - 0.52) * i as f64 / 700.0;
            let r = 1.0 / (0.5 * t).tanh();
            (r * t.cos(), r * t.sin())
        })
        .collect();
    svg.path(&plane.map_all(&stereo), "#111111", 1.6, Some("stereographic_image"));
    // Logarithmic spiral r = e^θ (purple).
    let spiral: Vec<(f64, f64)> = (0..=500)
        .map(|i| {
            let t = -4.0 + (1.28 + 4.0) * i as f64 / 500.0;
            let r = t.exp();
            (r * t.cos(), r * t.sin())
        })
        .collect();
    svg.path(&plane.map_all(&spiral), "#8833aa", 1.6, Some("log_spiral"));
    svg.text(
        (plane.px_origin.0 + 8.0, plane.px_origin.1 + 18.0),
        "stereographic plane",
        13.0,
    );
    svg.end_group();

    Ok(svg.finish())
}
