//! Static SVG rendering of drawings: one path per edge, labeled vertex
//! dots, per-edge colors. Write-only; floats are printed at six
//! significant digits so the output is byte-deterministic.

use std::collections::BTreeMap;
use std::fmt::Write;

use winding_core::{Drawing, Pt};

#[derive(Debug, Clone)]
pub struct SvgOptions {
    /// Stroke color per edge; edges not listed use `default_stroke`.
    pub edge_colors: BTreeMap<(u32, u32), String>,
    pub default_stroke: String,
    pub width_px: f64,
}

impl Default for SvgOptions {
    fn default() -> SvgOptions {
        // Echo the presentation convention of the constructions: the
        // edge that gets rewound (13) red, the enclosed edge (24) blue.
        let mut edge_colors = BTreeMap::new();
        edge_colors.insert((1, 3), "#cc2222".to_string());
        edge_colors.insert((2, 4), "#2244cc".to_string());
        SvgOptions {
            edge_colors,
            default_stroke: "#222222".to_string(),
            width_px: 640.0,
        }
    }
}

/// Six significant digits, shortest decimal form.
fn fmt6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".to_string();
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (5 - mag).clamp(0, 17) as usize;
    let s = format!("{v:.decimals$}");
    // Trim trailing zeros (and a dangling point) for stable short output.
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn render_svg(d: &Drawing, options: &SvgOptions) -> String {
    let mut min = (f64::INFINITY, f64::INFINITY);
    let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut widen = |p: &Pt| {
        let (x, y) = p.to_f64();
        min = (min.0.min(x), min.1.min(y));
        max = (max.0.max(x), max.1.max(y));
    };
    for line in d.edge_lines().values() {
        for p in line.points() {
            widen(p);
        }
    }
    for p in d.vertex_positions().values() {
        widen(p);
    }
    let span = ((max.0 - min.0).max(1e-9), (max.1 - min.1).max(1e-9));
    let margin = 0.05 * span.0.max(span.1);
    let view = (
        min.0 - margin,
        min.1 - margin,
        span.0 + 2.0 * margin,
        span.1 + 2.0 * margin,
    );
    // Flip y so the mathematical orientation (y up) is preserved.
    let flip = |y: f64| view.1 + view.3 - (y - view.1);
    let stroke_width = 0.004 * view.2.max(view.3);
    let dot_r = 2.0 * stroke_width;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" viewBox=\"{} {} {} {}\">",
        fmt6(options.width_px),
        fmt6(view.0),
        fmt6(view.1),
        fmt6(view.2),
        fmt6(view.3)
    );
    for (&(u, v), line) in d.edge_lines() {
        let color = options
            .edge_colors
            .get(&(u, v))
            .unwrap_or(&options.default_stroke);
        let mut path = String::new();
        for (k, p) in line.points().iter().enumerate() {
            let (x, y) = p.to_f64();
            let cmd = if k == 0 { 'M' } else { 'L' };
            let _ = write!(path, "{}{} {} ", cmd, fmt6(x), fmt6(flip(y)));
        }
        let _ = writeln!(
            out,
            "  <path id=\"edge-{u}-{v}\" d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\"/>",
            path.trim_end(),
            fmt6(stroke_width)
        );
    }
    for (v, p) in d.vertex_positions() {
        let (x, y) = p.to_f64();
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#000000\"/>",
            fmt6(x),
            fmt6(flip(y)),
            fmt6(dot_r)
        );
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"{}\">{v}</text>",
            fmt6(x + 2.0 * dot_r),
            fmt6(flip(y) - 2.0 * dot_r),
            fmt6(6.0 * dot_r)
        );
    }
    out.push_str("</svg>\n");
    out
}
