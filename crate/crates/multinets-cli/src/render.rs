//! SVG rendering of real arrangements in an affine chart. Complex
//! coordinates are refused rather than projected; the floating embedding is
//! used for drawing only, never for verdicts.

use std::fmt::Write as _;

use multinets::{Cyclo, MultinetCandidate, VerifiedMultinet};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Chart {
    X,
    Y,
    Z,
}

const CANVAS: f64 = 600.0;
const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// Affine trace (A, B, C) of a projective line in the chart: A·u + B·v + C = 0.
fn chart_line(coords: &[Cyclo; 3], chart: Chart) -> (f64, f64, f64) {
    let e = |i: usize| coords[i].complex_embed().0;
    match chart {
        // chart x = 1: coordinates (u, v) = (y/x, z/x)
        Chart::X => (e(1), e(2), e(0)),
        // chart y = 1: (u, v) = (x/y, z/y)
        Chart::Y => (e(0), e(2), e(1)),
        // chart z = 1: (u, v) = (x/z, y/z)
        Chart::Z => (e(0), e(1), e(2)),
    }
}

/// Affine position of a point in the chart, None at the chart's infinity.
fn chart_point(coords: &[Cyclo; 3], chart: Chart) -> Option<(f64, f64)> {
    let idx = match chart {
        Chart::X => (1, 2, 0),
        Chart::Y => (0, 2, 1),
        Chart::Z => (0, 1, 2),
    };
    if coords[idx.2].is_zero() {
        return None;
    }
    let w = coords[idx.2].complex_embed().0;
    Some((
        coords[idx.0].complex_embed().0 / w,
        coords[idx.1].complex_embed().0 / w,
    ))
}

/// Clips A·u + B·v + C = 0 to the square [−s/2, s/2]², returning the chord.
fn clip_to_window(a: f64, b: f64, c: f64, span: f64) -> Option<((f64, f64), (f64, f64))> {
    if a.abs() < 1e-12 && b.abs() < 1e-12 {
        return None;
    }
    let h = span / 2.0;
    let mut hits: Vec<(f64, f64)> = Vec::new();
    let mut push = |u: f64, v: f64| {
        let inside = u.abs() <= h + 1e-9 && v.abs() <= h + 1e-9;
        let fresh = !hits
            .iter()
            .any(|&(x, y)| (x - u).abs() < 1e-9 && (y - v).abs() < 1e-9);
        if inside && fresh {
            hits.push((u, v));
        }
    };
    for edge_u in [-h, h] {
        if b.abs() > 1e-12 {
            push(edge_u, (-c - a * edge_u) / b);
        }
    }
    for edge_v in [-h, h] {
        if a.abs() > 1e-12 {
            push((-c - b * edge_v) / a, edge_v);
        }
    }
    (hits.len() >= 2).then(|| (hits[0], hits[1]))
}

fn to_canvas(u: f64, v: f64, span: f64) -> (f64, f64) {
    let s = CANVAS / span;
    (CANVAS / 2.0 + u * s, CANVAS / 2.0 - v * s)
}

/// Renders the arrangement; every coordinate must be exactly real.
pub fn render(c: &MultinetCandidate, chart: Chart, span: f64) -> Result<String, CliError> {
    for (b, ml) in c.flat_lines() {
        for coord in ml.line.coords() {
            if !coord.is_real() {
                return Err(CliError::input(format!(
                    "non-real arrangement: block {b} line {} has complex coordinates",
                    ml.line
                )));
            }
        }
    }
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"0 0 {CANVAS} {CANVAS}\">"
    );
    let _ = writeln!(
        svg,
        "  <rect width=\"{CANVAS}\" height=\"{CANVAS}\" fill=\"white\"/>"
    );
    for (block, ml) in c.flat_lines() {
        let (a, b, cc) = chart_line(ml.line.coords(), chart);
        let Some(((u1, v1), (u2, v2))) = clip_to_window(a, b, cc, span) else {
            continue;
        };
        let (x1, y1) = to_canvas(u1, v1, span);
        let (x2, y2) = to_canvas(u2, v2, span);
        let color = PALETTE[block % PALETTE.len()];
        let width = 1.0 + 0.8 * (ml.mult.saturating_sub(1) as f64);
        let _ = writeln!(
            svg,
            "  <line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"{color}\" stroke-width=\"{width:.1}\"/>"
        );
    }
    if let Ok(m) = VerifiedMultinet::new(c.clone()) {
        for bp in &m.analysis().base {
            let Some((u, v)) = chart_point(bp.point.coords(), chart) else {
                continue;
            };
            if u.abs() > span / 2.0 || v.abs() > span / 2.0 {
                continue;
            }
            let (x, y) = to_canvas(u, v, span);
            let r = 2.5 + 1.5 * (bp.n_p.saturating_sub(1) as f64);
            let _ = writeln!(
                svg,
                "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{r:.1}\" fill=\"black\"/>"
            );
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
