//! Self-contained SVG scatter plot with fitted lines.
//!
//! Every number is written with a fixed number of decimals, so the same
//! input always gives the same bytes.

use std::fmt::Write as _;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marker {
    Circle,
    Triangle,
}

#[derive(Debug, Clone)]
pub struct Series {
    pub label: String,
    pub color: &'static str,
    pub marker: Marker,
    /// `(−log10 δ, log10 count)`.
    pub points: Vec<(f64, f64)>,
    /// `(slope, intercept)` of the fitted line.
    pub fit: Option<(f64, f64)>,
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - TOP - BOTTOM)
    }
}

fn padded(lo: f64, hi: f64) -> (f64, f64) {
    if hi > lo {
        let pad = (hi - lo) * 0.05;
        (lo - pad, hi + pad)
    } else {
        (lo - 0.5, hi + 0.5)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(title: &str, series: &[Series]) -> String {
    let pts = series.iter().flat_map(|s| s.points.iter().copied());
    let (mut xl, mut xh, mut yl, mut yh) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for (x, y) in pts {
        xl = xl.min(x);
        xh = xh.max(x);
        yl = yl.min(y);
        yh = yh.max(y);
    }
    if xl > xh {
        (xl, xh, yl, yh) = (0.0, 1.0, 0.0, 1.0);
    }
    let (x0, x1) = padded(xl, xh);
    let (y0, y1) = padded(yl, yh);
    let f = Frame { x0, x1, y0, y1 };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );

    // axes box and ticks
    let (bx0, bx1, by0, by1) = (LEFT, WIDTH - RIGHT, TOP, HEIGHT - BOTTOM);
    let _ = writeln!(
        s,
        r#"<rect x="{bx0:.2}" y="{by0:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        bx1 - bx0,
        by1 - by0
    );
    for i in 0..=5 {
        let t = f64::from(i) / 5.0;
        let xv = x0 + t * (x1 - x0);
        let px = f.px(xv);
        let _ = writeln!(
            s,
            r#"<line x1="{px:.2}" y1="{by1:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" text-anchor="middle">{xv:.2}</text>"#,
            by1 + 5.0,
            by1 + 19.0
        );
        let yv = y0 + t * (y1 - y0);
        let py = f.py(yv);
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{bx0:.2}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{yv:.2}</text>"#,
            bx0 - 5.0,
            bx0 - 8.0,
            py + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">−log₁₀ δ</text>"#,
        (bx0 + bx1) / 2.0,
        HEIGHT - 18.0
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">log₁₀ count</text>"#,
        (by0 + by1) / 2.0,
        (by0 + by1) / 2.0
    );

    for ser in series {
        let _ = writeln!(s, r#"<g fill="{0}" stroke="{0}">"#, ser.color);
        if let Some((m, b)) = ser.fit {
            let _ = writeln!(
                s,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke-width="1.5"/>"#,
                f.px(xl),
                f.py(m * xl + b),
                f.px(xh),
                f.py(m * xh + b)
            );
        }
        for &(x, y) in &ser.points {
            marker(&mut s, ser.marker, f.px(x), f.py(y));
        }
        let _ = writeln!(s, "</g>");
    }

    // legend, top left inside the axes
    for (i, ser) in series.iter().enumerate() {
        let ly = by0 + 18.0 + 18.0 * i as f64;
        let lx = bx0 + 14.0;
        let _ = write!(s, r#"<g fill="{0}" stroke="{0}">"#, ser.color);
        marker(&mut s, ser.marker, lx, ly - 4.0);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{ly:.2}" stroke="none" fill="black">{}</text></g>"#,
            lx + 12.0,
            escape(&ser.label)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn marker(s: &mut String, kind: Marker, x: f64, y: f64) {
    match kind {
        Marker::Circle => {
            let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4"/>"#);
        }
        Marker::Triangle => {
            let _ = writeln!(
                s,
                r#"<polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}"/>"#,
                x,
                y - 5.0,
                x - 4.5,
                y + 3.5,
                x + 4.5,
                y + 3.5
            );
        }
    }
}
