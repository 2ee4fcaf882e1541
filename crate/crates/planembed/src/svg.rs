//! SVG rendering of straight-line drawings.

use std::fmt::Write;

use crate::graph::PlaneGraph;
use crate::validate::Coords;

/// Render a straight-line drawing: edges as segments, vertices as dots with
/// labels, and the outer boundary highlighted. The vertical axis is flipped so
/// that mathematical coordinates (y up) render right side up.
pub fn render(g: &PlaneGraph, coords: &Coords) -> String {
    let xs: Vec<f64> = coords.values().map(|p| p.0).collect();
    let ys: Vec<f64> = coords.values().map(|p| p.1).collect();
    let min = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = |v: &[f64]| v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let (x0, x1) = (min(&xs), max(&xs));
    let (y0, y1) = (min(&ys), max(&ys));
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = 0.05 * span;
    let scale = 640.0 / span;
    // SVG y grows downward; flip so the drawing keeps its orientation.
    let tx = |x: f64| (x - x0 + pad) * scale;
    let ty = |y: f64| (y1 - y + pad) * scale;
    let width = (x1 - x0 + 2.0 * pad) * scale;
    let height = (y1 - y0 + 2.0 * pad) * scale;

    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.1}\" height=\"{height:.1}\" viewBox=\"0 0 {width:.1} {height:.1}\">"
    )
    .unwrap();
    writeln!(s, "  <!-- y axis flipped: input y increases upward, SVG y increases downward -->").unwrap();

    let outer_edges = g.face(g.outer_face()).edge_set();
    for &(u, v) in g.edges() {
        if outer_edges.contains(&(u, v)) {
            continue;
        }
        let (ux, uy) = coords[&u];
        let (vx, vy) = coords[&v];
        writeln!(
            s,
            "  <line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#444\" stroke-width=\"1.5\"/>",
            tx(ux), ty(uy), tx(vx), ty(vy)
        )
        .unwrap();
    }
    for (u, v) in &outer_edges {
        let (ux, uy) = coords[u];
        let (vx, vy) = coords[v];
        writeln!(
            s,
            "  <line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#c0392b\" stroke-width=\"3\"/>",
            tx(ux), ty(uy), tx(vx), ty(vy)
        )
        .unwrap();
    }
    for (&v, &(x, y)) in coords {
        writeln!(
            s,
            "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"#2c3e50\"/>",
            tx(x),
            ty(y)
        )
        .unwrap();
        writeln!(
            s,
            "  <text x=\"{:.3}\" y=\"{:.3}\" font-size=\"12\" font-family=\"monospace\" fill=\"#2c3e50\">{}</text>",
            tx(x) + 6.0,
            ty(y) - 6.0,
            g.id(v)
        )
        .unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::solver;

    #[test]
    fn render_contains_all_vertices_and_flip_comment() {
        let g = generate::k4();
        let result = solver::convex_combination_map(
            &g,
            &solver::barycentric_weights(&g).unwrap(),
            &solver::regular_polygon_placement(&g.outer_cycle_ccw().unwrap(), 1.0).unwrap(),
        )
        .unwrap();
        let svg = render(&g, &result.coords);
        assert!(svg.contains("<svg"));
        assert!(svg.contains("y axis flipped"));
        for id in g.ids() {
            assert!(svg.contains(&format!(">{id}<")), "missing label {id}");
        }
        // Outer triangle highlighted: three thick strokes.
        assert_eq!(svg.matches("stroke-width=\"3\"").count(), 3);
    }
}
