//! Grid drawings on the cylinder.
//!
//! Columns live modulo the width `W`, rows grow toward the center. Every
//! horizontal edge records its signed column displacement along its
//! forward dart, which pins down how often it wraps around.

mod assign;
mod project;
mod svg;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{twin, DartId, EdgeId, VertexId};
use crate::rectangulate::{rectangulate, AugmentMap, Mode, RectError};
use crate::rep::{Direction, FaceKind, OrthoRadialRep};

pub use assign::{assign_coordinates, LayoutError};
pub use project::{project_back, Polyline, PolylineDrawing, ProjectError};
pub use svg::{emit_polyline_svg, emit_svg};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridDrawing {
    pub width: i64,
    /// `(col, row)` per vertex, `0 <= col < width`, `row >= 1`.
    pub coords: Vec<(i64, i64)>,
    /// Signed column displacement of dart `2e`, horizontal edges only.
    pub spans: Vec<Option<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("drawing covers {got} vertices and {got_edges} edges, expected {vertices} and {edges}")]
    Size {
        got: usize,
        got_edges: usize,
        vertices: usize,
        edges: usize,
    },
    #[error("vertex {0} lies outside the grid")]
    OutOfRange(VertexId),
    #[error("edge {0} does not follow its direction")]
    Misaligned(EdgeId),
    #[error("angle of dart {0} differs from the drawing")]
    Angle(DartId),
    #[error("drawing overlaps itself near ({0}, {1})")]
    Overlap(i64, i64),
    #[error("outer or central face is misplaced")]
    Faces,
    #[error("face {0} winds around the cylinder the wrong number of times")]
    Winding(usize),
    #[error(transparent)]
    Rep(#[from] crate::rep::RepError),
}

impl GridDrawing {
    /// Signed column displacement of dart `d`.
    pub fn span(&self, d: DartId) -> i64 {
        let s = self.spans[d / 2].unwrap_or(0);
        if d.is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    /// Total column displacement along a closed walk; `W` for an essential
    /// cycle, zero for a non-essential one.
    pub fn winding(&self, walk: &[DartId]) -> i64 {
        walk.iter().map(|&d| self.span(d)).sum()
    }

    pub fn row_count(&self) -> i64 {
        self.coords.iter().map(|c| c.1).max().unwrap_or(0)
    }
}

/// Geometric direction of every dart, if each edge is axis-aligned.
fn geometric_directions(rep: &OrthoRadialRep, dr: &GridDrawing) -> Result<Vec<Direction>, RealizeError> {
    let g = rep.graph();
    let mut dirs = vec![Direction::Right; g.dart_count()];
    for e in 0..g.edge_count() {
        let (u, v) = (g.tail(2 * e), g.head(2 * e));
        let (cu, ru) = dr.coords[u];
        let (cv, rv) = dr.coords[v];
        let dir = match dr.spans[e] {
            Some(s) => {
                if ru != rv || s == 0 || s.abs() >= dr.width || (cu + s).rem_euclid(dr.width) != cv {
                    return Err(RealizeError::Misaligned(e));
                }
                if s > 0 {
                    Direction::Right
                } else {
                    Direction::Left
                }
            }
            None => {
                if cu != cv || ru == rv {
                    return Err(RealizeError::Misaligned(e));
                }
                if rv > ru {
                    Direction::Down
                } else {
                    Direction::Up
                }
            }
        };
        dirs[2 * e] = dir;
        dirs[2 * e + 1] = dir.reversed();
    }
    Ok(dirs)
}

/// Face holding the corner at `v` that contains direction `dir`, given as
/// the incoming dart owning that corner.
pub(crate) fn corner_containing(
    rep: &OrthoRadialRep,
    dirs: &[Direction],
    v: VertexId,
    dir: Direction,
) -> Option<DartId> {
    let g = rep.graph();
    g.rotation(v).iter().map(|&o| twin(o)).find(|&x| {
        let s = g.next_in_face(x);
        let a = rep.angle(x) as i64 / 90;
        let off = (dir.index() - dirs[s].index()).rem_euclid(4);
        off > 0 && off < a
    })
}

/// Checks that `dr` draws `rep` faithfully.
pub fn check_realization(rep: &OrthoRadialRep, dr: &GridDrawing) -> Result<(), RealizeError> {
    let g = rep.graph();
    if dr.coords.len() != g.vertex_count() || dr.spans.len() != g.edge_count() || dr.width < 1 {
        return Err(RealizeError::Size {
            got: dr.coords.len(),
            got_edges: dr.spans.len(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        });
    }
    for (v, &(c, r)) in dr.coords.iter().enumerate() {
        if c < 0 || c >= dr.width || r < 1 {
            return Err(RealizeError::OutOfRange(v));
        }
    }
    let dirs = geometric_directions(rep, dr)?;
    if dirs[rep.reference()] != Direction::Right {
        return Err(RealizeError::Misaligned(rep.reference() / 2));
    }
    for d in 0..g.dart_count() {
        let s = g.next_in_face(d);
        let q = (dirs[twin(d)].index() - dirs[s].index()).rem_euclid(4);
        let q = if q == 0 { 4 } else { q };
        if q * 90 != rep.angle(d) as i64 {
            return Err(RealizeError::Angle(d));
        }
    }
    check_overlaps(rep, dr)?;
    // Essential cycles are sums of faces plus the outer boundary, so face
    // windings fix the winding of every cycle.
    for f in 0..g.face_count() {
        let w = dr.winding(g.face(f)).abs();
        let expected = match rep.face_kind(f) {
            FaceKind::Regular => 0,
            _ if rep.outer() == rep.central() => 0,
            _ => dr.width,
        };
        if w != expected {
            return Err(RealizeError::Winding(f));
        }
    }
    let top = (0..g.vertex_count()).min_by_key(|&v| (dr.coords[v].1, v)).unwrap();
    let bottom = (0..g.vertex_count()).max_by_key(|&v| (dr.coords[v].1, v)).unwrap();
    let up = corner_containing(rep, &dirs, top, Direction::Up).map(|x| g.face_of(x));
    let down = corner_containing(rep, &dirs, bottom, Direction::Down).map(|x| g.face_of(x));
    if up != Some(rep.outer()) || down != Some(rep.central()) {
        return Err(RealizeError::Faces);
    }
    Ok(())
}

fn check_overlaps(rep: &OrthoRadialRep, dr: &GridDrawing) -> Result<(), RealizeError> {
    let g = rep.graph();
    let w = dr.width;
    let mut points: HashSet<(i64, i64)> = HashSet::with_capacity(g.vertex_count() * 2);
    for &p in &dr.coords {
        if !points.insert(p) {
            return Err(RealizeError::Overlap(p.0, p.1));
        }
    }
    // Interior lattice points and unit segments of all edges.
    let mut segments: HashSet<(i64, i64, bool)> = HashSet::new();
    for e in 0..g.edge_count() {
        let (c0, r0) = dr.coords[g.tail(2 * e)];
        let r1 = dr.coords[g.head(2 * e)].1;
        match dr.spans[e] {
            Some(s) => {
                let step = s.signum();
                for k in 0..s.abs() {
                    let a = (c0 + step * k).rem_euclid(w);
                    let b = (c0 + step * (k + 1)).rem_euclid(w);
                    let left = if step > 0 { a } else { b };
                    if !segments.insert((left, r0, true)) {
                        return Err(RealizeError::Overlap(left, r0));
                    }
                    if k > 0 && !points.insert((a, r0)) {
                        return Err(RealizeError::Overlap(a, r0));
                    }
                }
            }
            None => {
                let (lo, hi) = (r0.min(r1), r0.max(r1));
                for r in lo..hi {
                    if !segments.insert((c0, r, false)) {
                        return Err(RealizeError::Overlap(c0, r));
                    }
                    if r > lo && !points.insert((c0, r)) {
                        return Err(RealizeError::Overlap(c0, r));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Whether `dr` draws `rep` faithfully.
pub fn realize_check(rep: &OrthoRadialRep, dr: &GridDrawing) -> bool {
    check_realization(rep, dr).is_ok()
}

#[derive(Debug, Error)]
pub enum DrawError {
    #[error(transparent)]
    Rect(#[from] RectError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error("computed drawing is not a realization: {0}")]
    Realize(#[from] RealizeError),
    #[error(transparent)]
    Project(#[from] ProjectError),
}

/// Everything the drawing pipeline produces.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub rectangulated: OrthoRadialRep,
    pub map: AugmentMap,
    pub grid: GridDrawing,
    pub drawing: PolylineDrawing,
}

/// Rectangulates, assigns coordinates, checks the result and projects it
/// back onto the input graph.
pub fn draw(rep: &OrthoRadialRep, mode: Mode) -> Result<Pipeline, DrawError> {
    let (rectangulated, map) = rectangulate(rep, mode)?;
    let grid = assign_coordinates(&rectangulated)?;
    check_realization(&rectangulated, &grid)?;
    let drawing = project_back(&rectangulated, &grid, &map)?;
    Ok(Pipeline {
        rectangulated,
        map,
        grid,
        drawing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ring_drawing(width: i64, cols: [i64; 4]) -> GridDrawing {
        let spans = (0..4)
            .map(|i| Some((cols[(i + 1) % 4] - cols[i]).rem_euclid(width)))
            .collect();
        GridDrawing {
            width,
            coords: cols.iter().map(|&c| (c, 1)).collect(),
            spans,
        }
    }

    #[test]
    fn ring_on_wide_grid() {
        let rep = fixtures::ring4();
        let dr = ring_drawing(7, [0, 2, 3, 5]);
        assert_eq!(check_realization(&rep, &dr), Ok(()));
        assert_eq!(dr.winding(&[0, 2, 4, 6]), 7);
    }

    #[test]
    fn perturbed_row_is_rejected() {
        let rep = fixtures::ring4();
        let mut dr = ring_drawing(4, [0, 1, 2, 3]);
        assert!(realize_check(&rep, &dr));
        dr.coords[2].1 = 2;
        assert!(!realize_check(&rep, &dr));
    }

    #[test]
    fn overlapping_vertices_rejected() {
        let rep = fixtures::ring4();
        let dr = GridDrawing {
            width: 4,
            coords: vec![(0, 1), (1, 1), (2, 1), (3, 1)],
            spans: vec![Some(1), Some(1), Some(1), Some(-3)],
        };
        assert!(!realize_check(&rep, &dr));
    }
}
