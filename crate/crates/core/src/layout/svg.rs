//! SVG rendering: rows become concentric circles and columns spokes, with
//! row 1 on the outermost circle.

use std::f64::consts::TAU;
use std::fmt::Write;

use super::project::PolylineDrawing;
use super::GridDrawing;
use crate::rep::OrthoRadialRep;

const RING: f64 = 30.0;
const HOLE: f64 = 30.0;

struct Canvas {
    width: i64,
    rows: i64,
    out: String,
}

impl Canvas {
    fn new(width: i64, rows: i64) -> Self {
        let size = 2.0 * (HOLE + RING * rows as f64) + 20.0;
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size:.0}" height="{size:.0}" viewBox="{:.0} {:.0} {size:.0} {size:.0}">"#,
            -size / 2.0,
            -size / 2.0
        );
        let mut c = Canvas { width, rows, out };
        c.grid();
        c
    }

    fn radius(&self, row: i64) -> f64 {
        HOLE + RING * (self.rows - row + 1) as f64
    }

    fn point(&self, (col, row): (i64, i64)) -> (f64, f64) {
        let a = TAU * col as f64 / self.width as f64;
        let r = self.radius(row);
        (r * a.cos(), r * a.sin())
    }

    fn grid(&mut self) {
        let _ = writeln!(self.out, r##"<g fill="none" stroke="#ccc" stroke-width="0.5">"##);
        for row in 1..=self.rows {
            let r = self.radius(row);
            let _ = writeln!(self.out, r#"<circle cx="0" cy="0" r="{r:.2}"/>"#);
        }
        for col in 0..self.width {
            let (x0, y0) = self.point((col, self.rows + 1));
            let (x1, y1) = self.point((col, 0));
            let _ = writeln!(self.out, r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}"/>"#);
        }
        let _ = writeln!(self.out, "</g>");
    }

    // Path data for a segment from `p` moving `span` columns, or radially
    // to `q` when `span` is 0.
    fn segment(&self, p: (i64, i64), q: (i64, i64), span: i64) -> String {
        let (x0, y0) = self.point(p);
        let (x1, y1) = self.point(q);
        if span == 0 {
            return format!("M {x0:.2} {y0:.2} L {x1:.2} {y1:.2}");
        }
        let r = self.radius(p.1);
        let large = u8::from(2 * span.abs() > self.width);
        let sweep = u8::from(span > 0);
        format!("M {x0:.2} {y0:.2} A {r:.2} {r:.2} 0 {large} {sweep} {x1:.2} {y1:.2}")
    }

    fn edge(&mut self, d: &str) {
        let _ = writeln!(self.out, r#"<path d="{d}"/>"#);
    }

    fn vertices(&mut self, coords: &[(i64, i64)]) {
        let _ = writeln!(self.out, r#"<g fill="black">"#);
        for (v, &p) in coords.iter().enumerate() {
            let (x, y) = self.point(p);
            let _ = writeln!(self.out, r#"<circle id="v{v}" cx="{x:.2}" cy="{y:.2}" r="3"/>"#);
        }
        let _ = writeln!(self.out, "</g>");
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

/// Renders a grid drawing of `rep`.
pub fn emit_svg(rep: &OrthoRadialRep, dr: &GridDrawing) -> String {
    let g = rep.graph();
    let mut c = Canvas::new(dr.width, dr.row_count());
    let _ = writeln!(c.out, r#"<g fill="none" stroke="black" stroke-width="2">"#);
    for e in 0..g.edge_count() {
        let d = c.segment(dr.coords[g.tail(2 * e)], dr.coords[g.head(2 * e)], dr.span(2 * e));
        c.edge(&d);
    }
    let _ = writeln!(c.out, "</g>");
    c.vertices(&dr.coords);
    c.finish()
}

/// Renders a projected drawing; every polyline becomes one path.
pub fn emit_polyline_svg(pd: &PolylineDrawing) -> String {
    let rows = pd.edges.iter().flat_map(|e| e.points.iter().map(|p| p.1)).max().unwrap_or(1);
    let mut c = Canvas::new(pd.width, rows);
    let _ = writeln!(c.out, r#"<g fill="none" stroke="black" stroke-width="2">"#);
    for line in &pd.edges {
        let d: Vec<String> = line
            .points
            .windows(2)
            .zip(&line.spans)
            .map(|(w, &s)| c.segment(w[0], w[1], s))
            .collect();
        c.edge(&d.join(" "));
    }
    let _ = writeln!(c.out, "</g>");
    c.vertices(&pd.coords);
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::layout::assign_coordinates;

    #[test]
    fn ring_renders_one_row() {
        let rep = fixtures::ring4();
        let dr = assign_coordinates(&rep).unwrap();
        let svg = emit_svg(&rep, &dr);
        assert!(svg.starts_with("<?xml"));
        assert_eq!(svg.matches("<path").count(), 4);
        assert_eq!(svg.matches(r#"<circle id="v"#).count(), 4);
        assert_eq!(svg, emit_svg(&rep, &dr));
    }
}
