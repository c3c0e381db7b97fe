use std::fmt::Write as _;
use std::path::Path;

use super::{Region, Tiling, Tri};
use crate::error::Result;

const SIDE: f64 = 24.0;
const MARGIN: f64 = 12.0;
const COLORS: [&str; 3] = ["#e9b44c", "#50a2a7", "#9b2915"];

/// Display position of lattice point `(row, x)`. Rows run left to right so
/// the free boundary (a lattice row) comes out vertical.
fn place(row: i64, x: i64) -> (f64, f64) {
    (row as f64 * SIDE * 3f64.sqrt() / 2.0, x as f64 * SIDE / 2.0)
}

fn polygon(points: &[(i64, i64)], origin: (f64, f64)) -> String {
    let mut d = String::new();
    for (n, &(r, x)) in points.iter().enumerate() {
        let (px, py) = place(r, x);
        let cmd = if n == 0 { 'M' } else { 'L' };
        write!(d, "{cmd}{:.2},{:.2} ", px - origin.0, py - origin.1).unwrap();
    }
    d.push('Z');
    d
}

/// Corners of a lozenge in cyclic order.
fn lozenge_corners(a: Tri, b: Tri) -> Vec<(i64, i64)> {
    let (ca, cb) = (a.corners(), b.corners());
    let shared: Vec<(i64, i64)> = ca.iter().filter(|p| cb.contains(p)).copied().collect();
    let lone_a = *ca.iter().find(|p| !shared.contains(p)).unwrap();
    let lone_b = *cb.iter().find(|p| !shared.contains(p)).unwrap();
    vec![lone_a, shared[0], lone_b, shared[1]]
}

/// Orientation class: vertical pairs, then horizontal pairs by which half
/// points up.
fn lozenge_class(a: Tri, b: Tri) -> usize {
    if a.u != b.u {
        0
    } else if a.is_up() {
        1
    } else {
        2
    }
}

/// Horizontal edges of free triangles that lie on the region boundary.
fn free_edges(region: &Region) -> Vec<((i64, i64), (i64, i64))> {
    let mut out = Vec::new();
    for t in region.free() {
        for n in t.neighbors() {
            if region.contains(&n) || n.u == t.u {
                continue;
            }
            let c = t.corners();
            let nc = n.corners();
            let e: Vec<(i64, i64)> = c.iter().filter(|p| nc.contains(p)).copied().collect();
            out.push((e[0], e[1]));
        }
    }
    out
}

/// SVG of a region, optionally tiled. The output depends only on the inputs.
pub fn render_svg_string(region: &Region, tiling: Option<&Tiling>) -> String {
    let points: Vec<(f64, f64)> = region
        .triangles()
        .iter()
        .flat_map(|t| t.corners())
        .map(|(r, x)| place(r, x))
        .collect();
    let min = |f: fn(&(f64, f64)) -> f64| points.iter().map(f).fold(f64::INFINITY, f64::min);
    let max = |f: fn(&(f64, f64)) -> f64| points.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
    let (x0, y0, x1, y1) = if points.is_empty() {
        (0.0, 0.0, 0.0, 0.0)
    } else {
        (min(|p| p.0), min(|p| p.1), max(|p| p.0), max(|p| p.1))
    };
    let origin = (x0 - MARGIN, y0 - MARGIN);
    let (w, h) = (x1 - x0 + 2.0 * MARGIN, y1 - y0 + 2.0 * MARGIN);

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    )
    .unwrap();
    writeln!(s, "<title>{}</title>", escape(region.label())).unwrap();
    writeln!(s, r##"<g stroke="#222" stroke-width="1" stroke-linejoin="round">"##).unwrap();
    match tiling {
        None => {
            for t in region.triangles() {
                let fill = if region.is_free(t) { "#f4f4f4" } else { "#ffffff" };
                writeln!(s, r#"<path class="tri" fill="{fill}" d="{}"/>"#, polygon(&t.corners(), origin)).unwrap();
            }
        }
        Some(tiling) => {
            for &(a, b) in &tiling.edges {
                let class = lozenge_class(a, b);
                writeln!(
                    s,
                    r#"<path class="lozenge" fill="{}" d="{}"/>"#,
                    COLORS[class],
                    polygon(&lozenge_corners(a, b), origin)
                )
                .unwrap();
            }
            for t in &tiling.uncovered {
                writeln!(s, r#"<path class="tri" fill="none" d="{}"/>"#, polygon(&t.corners(), origin)).unwrap();
            }
        }
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, r##"<g stroke="#c00" stroke-width="3" stroke-dasharray="5,4">"##).unwrap();
    for (p, q) in free_edges(region) {
        let (a, b) = (place(p.0, p.1), place(q.0, q.1));
        writeln!(
            s,
            r#"<line class="free" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            a.0 - origin.0,
            a.1 - origin.1,
            b.0 - origin.0,
            b.1 - origin.1
        )
        .unwrap();
    }
    writeln!(s, "</g>\n</svg>").unwrap();
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(region: &Region, tiling: Option<&Tiling>, path: &Path) -> Result<()> {
    std::fs::write(path, render_svg_string(region, tiling))?;
    Ok(())
}
