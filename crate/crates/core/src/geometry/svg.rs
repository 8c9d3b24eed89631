//! SVG rendering of drawings. Coordinates are converted to floating point
//! only here, for display.

use super::{crossings, PolylineDrawing, Rational};
use crate::error::Result;
use num_traits::ToPrimitive;
use std::fmt::Write;
use std::path::Path;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

/// Deterministic SVG text: labeled vertex circles, polyline edges and,
/// optionally, small red markers at crossings.
pub fn svg_string(d: &PolylineDrawing, mark_crossings: bool) -> String {
    let g = d.graph();
    let mut pts: Vec<(f64, f64)> = d.positions().iter().map(|p| (f(&p.x), f(&p.y))).collect();
    for e in 0..g.m() {
        pts.extend(d.bends(e).iter().map(|p| (f(&p.x), f(&p.y))));
    }
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, x1, y0, y1) = (x, x, y, y);
        for &(x, y) in &pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
    }
    let scale = (SIZE - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0).max(1e-9);
    // y grows upwards in the drawing and downwards in SVG
    let map = |x: f64, y: f64| (MARGIN + (x - x0) * scale, SIZE - MARGIN - (y - y0) * scale);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(s, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    for e in 0..g.m() {
        let coords: Vec<String> = d
            .route(e)
            .iter()
            .map(|p| {
                let (x, y) = map(f(&p.x), f(&p.y));
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            s,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>",
            coords.join(" ")
        );
    }
    if mark_crossings {
        if let Ok((recs, _)) = crossings(d) {
            for r in recs {
                let (x, y) = map(f(&r.point.x), f(&r.point.y));
                let _ = writeln!(
                    s,
                    "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"red\"/>"
                );
            }
        }
    }
    for (v, p) in d.positions().iter().enumerate() {
        let (x, y) = map(f(&p.x), f(&p.y));
        let label = g.label(v).map_or_else(|| v.to_string(), str::to_string);
        let _ = writeln!(
            s,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"7\" fill=\"white\" stroke=\"black\"/>\n<text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"9\" text-anchor=\"middle\">{label}</text>",
            y - 10.0
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn export_svg(d: &PolylineDrawing, path: impl AsRef<Path>, mark_crossings: bool) -> Result<()> {
    std::fs::write(path, svg_string(d, mark_crossings))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::graph::Graph;

    #[test]
    fn square_has_four_circles_and_lines() {
        let d = PolylineDrawing::straight(
            Graph::cycle(4),
            vec![
                Point::int(0, 0),
                Point::int(1, 0),
                Point::int(1, 1),
                Point::int(0, 1),
            ],
        )
        .unwrap();
        let s = svg_string(&d, true);
        assert_eq!(s.matches("<polyline").count(), 4);
        assert_eq!(s.matches("<circle").count(), 4);
        assert_eq!(s, svg_string(&d, true));
    }

    #[test]
    fn empty_graph_is_a_valid_canvas() {
        let d = PolylineDrawing::straight(Graph::new(0, []).unwrap(), vec![]).unwrap();
        let s = svg_string(&d, false);
        assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
    }
}
