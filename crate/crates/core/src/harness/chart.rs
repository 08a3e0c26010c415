//! Minimal standalone SVG scatter chart.

use std::collections::BTreeMap;
use std::fmt::Write;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 56.0;

/// Scatter of integer points, one marker per distinct point with area
/// proportional to its multiplicity, plus the reference curve `y = x²`.
pub fn scatter_svg(title: &str, x_label: &str, y_label: &str, points: &[(usize, usize)]) -> String {
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &p in points {
        *counts.entry(p).or_default() += 1;
    }
    let x_max = counts.keys().map(|p| p.0).max().unwrap_or(1).max(1) + 1;
    let y_max = counts.keys().map(|p| p.1).max().unwrap_or(1).max(1) + 1;
    let sx = |x: f64| MARGIN + x / x_max as f64 * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - y / y_max as f64 * (HEIGHT - 2.0 * MARGIN);
    let peak = counts.values().copied().max().unwrap_or(1) as f64;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    let (x0, y0, x1, y1) = (sx(0.0), sy(0.0), sx(x_max as f64), sy(y_max as f64));
    let _ = writeln!(s, r#"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y0:.1}" stroke="black"/>"#);
    let _ = writeln!(s, r#"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x0:.1}" y2="{y1:.1}" stroke="black"/>"#);
    for t in 0..=x_max {
        let x = sx(t as f64);
        let _ = writeln!(
            s,
            r#"<text x="{x:.1}" y="{:.1}" text-anchor="middle" font-family="sans-serif" font-size="11">{t}</text>"#,
            y0 + 16.0
        );
    }
    let step = (y_max / 10).max(1);
    for t in (0..=y_max).step_by(step) {
        let y = sy(t as f64);
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end" font-family="sans-serif" font-size="11">{t}</text>"#,
            x0 - 6.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-family="sans-serif" font-size="13">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 14.0,
        escape(x_label)
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.1}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 16 {:.1})">{}</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0,
        escape(y_label)
    );
    let mut curve = String::new();
    let samples = 64;
    for i in 0..=samples {
        let x = x_max as f64 * i as f64 / samples as f64;
        let y = (x * x).min(y_max as f64);
        let _ = write!(curve, "{}{:.1},{:.1} ", if i == 0 { "M" } else { "L" }, sx(x), sy(y));
    }
    let _ = writeln!(s, r#"<path d="{}" fill="none" stroke="gray" stroke-dasharray="4 3"/>"#, curve.trim_end());
    for (&(x, y), &c) in &counts {
        let r = 3.0 + 9.0 * (c as f64 / peak).sqrt();
        let _ = writeln!(
            s,
            r#"<circle cx="{:.1}" cy="{:.1}" r="{r:.1}" fill="steelblue" fill-opacity="0.6"><title>{x},{y}: {c}</title></circle>"#,
            sx(x as f64),
            sy(y as f64)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wellformed_and_deterministic() {
        let pts = [(2, 3), (2, 3), (3, 4), (1, 1)];
        let a = scatter_svg("t<1>", "ω", "χ", &pts);
        assert_eq!(a, scatter_svg("t<1>", "ω", "χ", &pts));
        assert!(a.starts_with("<svg") && a.ends_with("</svg>\n"));
        assert_eq!(a.matches("<circle").count(), 3);
        assert!(a.contains("t&lt;1&gt;"));
    }
}
