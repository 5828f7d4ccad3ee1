//! Minimal deterministic SVG writer: fixed 800×600 viewBox, no external
//! assets, coordinates printed with fixed precision so identical inputs
//! produce identical bytes.

use std::fmt::Write as _;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;

pub struct Svg {
    body: String,
}

impl Svg {
    pub fn new() -> Svg {
        let mut body = String::new();
        let _ = writeln!(
            body,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}">"#
        );
        let _ = writeln!(body, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        Svg { body }
    }

    pub fn group(&mut self, class: &str) {
        let _ = writeln!(self.body, r#"<g class="{class}">"#);
    }

    pub fn end_group(&mut self) {
        let _ = writeln!(self.body, "</g>");
    }

    pub fn path(&mut self, points: &[(f64, f64)], stroke: &str, width: f64, id: Option<&str>) {
        if points.len() < 2 {
            return;
        }
        let mut d = String::new();
        for (i, (x, y)) in points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{x:.2} {y:.2} ");
        }
        let id_attr = id.map(|s| format!(r#" id="{s}""#)).unwrap_or_default();
        let _ = writeln!(
            self.body,
            r#"<path{id_attr} d="{}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#,
            d.trim_end()
        );
    }

    pub fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, width: f64, id: Option<&str>) {
        let id_attr = id.map(|s| format!(r#" id="{s}""#)).unwrap_or_default();
        let _ = writeln!(
            self.body,
            r#"<line{id_attr} x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="{width}"/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    pub fn circle(&mut self, center: (f64, f64), r: f64, stroke: &str, width: f64) {
        let _ = writeln!(
            self.body,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{r:.2}" fill="none" stroke="{stroke}" stroke-width="{width}"/>"#,
            center.0, center.1
        );
    }

    pub fn rect(&mut self, origin: (f64, f64), size: (f64, f64), stroke: &str) {
        let _ = writeln!(
            self.body,
            r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="{stroke}" stroke-width="1"/>"#,
            origin.0, origin.1, size.0, size.1
        );
    }

    pub fn text(&mut self, at: (f64, f64), content: &str, size: f64) {
        let _ = writeln!(
            self.body,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="{size}">{content}</text>"#,
            at.0, at.1
        );
    }

    pub fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

/// Affine map from data coordinates to a pixel box (y flipped).
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub px_origin: (f64, f64),
    pub px_size: (f64, f64),
}

impl Frame {
    pub fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let fx = (x - self.x_range.0) / (self.x_range.1 - self.x_range.0);
        let fy = (y - self.y_range.0) / (self.y_range.1 - self.y_range.0);
        (
            self.px_origin.0 + fx * self.px_size.0,
            self.px_origin.1 + (1.0 - fy) * self.px_size.1,
        )
    }

    pub fn map_all(&self, pts: &[(f64, f64)]) -> Vec<(f64, f64)> {
        pts.iter().map(|&(x, y)| self.map(x, y)).collect()
    }
}
