//! Coordinates for rectangulated representations.
//!
//! Vertices joined by horizontal edges share a row and vertices joined by
//! vertical edges share a column, so rows and columns are potentials on
//! two quotient graphs. Rows come from a longest path over the downward
//! edges. Columns come from a longest path over the rightward edges after
//! cutting the cylinder along a seam that runs from the outer to the
//! central face through horizontal edges only; every edge crossing the
//! seam gains the width `W`.

use thiserror::Error;

use super::GridDrawing;
use crate::graph::{edge_of, twin, DartId, EdgeId};
use crate::rectangulate::is_rectangulated;
use crate::rep::{Direction, OrthoRadialRep, RepError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("representation is not rectangulated")]
    NotRectangulated,
    #[error("length constraints are cyclic")]
    InfeasibleLengths,
    #[error(transparent)]
    Rep(#[from] RepError),
}

struct Classes {
    parent: Vec<usize>,
}

impl Classes {
    fn new(n: usize) -> Self {
        Classes { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

// Longest path from the sources of a DAG given as arcs `(from, to)` with
// weight 1. Nodes not mentioned get 0.
fn longest_path(n: usize, arcs: &[(usize, usize)]) -> Result<Vec<i64>, LayoutError> {
    let mut out = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in arcs {
        out[a].push(b);
        indeg[b] += 1;
    }
    let mut level = vec![0i64; n];
    let mut queue: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut seen = 0;
    while let Some(x) = queue.pop() {
        seen += 1;
        for &y in &out[x] {
            level[y] = level[y].max(level[x] + 1);
            indeg[y] -= 1;
            if indeg[y] == 0 {
                queue.push(y);
            }
        }
    }
    if seen != n {
        return Err(LayoutError::InfeasibleLengths);
    }
    Ok(level)
}

// Horizontal edges crossed when walking down from the outer face to the
// central face, leaving each rectangle through its bottom side.
fn seam(rep: &OrthoRadialRep, dirs: &[Direction]) -> Result<Vec<EdgeId>, LayoutError> {
    let g = rep.graph();
    let mut crossed = Vec::new();
    let step = |f: usize| -> Option<DartId> { g.face(f).iter().copied().find(|&d| dirs[d] == Direction::Left) };
    let mut f = rep.outer();
    for _ in 0..=g.face_count() {
        if f == rep.central() && !crossed.is_empty() {
            return Ok(crossed);
        }
        let d = step(f).ok_or(LayoutError::InfeasibleLengths)?;
        crossed.push(edge_of(d));
        f = g.face_of(twin(d));
        if f == rep.central() {
            return Ok(crossed);
        }
    }
    Err(LayoutError::InfeasibleLengths)
}

/// Integer grid coordinates realizing a rectangulated representation.
pub fn assign_coordinates(rep: &OrthoRadialRep) -> Result<GridDrawing, LayoutError> {
    if !is_rectangulated(rep) {
        return Err(LayoutError::NotRectangulated);
    }
    let g = rep.graph();
    let n = g.vertex_count();
    let dirs = rep.directions()?;

    let mut rows = Classes::new(n);
    let mut cols = Classes::new(n);
    for e in 0..g.edge_count() {
        let (u, v) = (g.tail(2 * e), g.head(2 * e));
        if dirs[2 * e].is_horizontal() {
            rows.union(u, v);
        } else {
            cols.union(u, v);
        }
    }

    // Darts pointing down or right, one per edge.
    let forward = |e: EdgeId| {
        let d = 2 * e;
        if matches!(dirs[d], Direction::Down | Direction::Right) {
            d
        } else {
            twin(d)
        }
    };

    let mut down = Vec::new();
    for e in (0..g.edge_count()).filter(|&e| !dirs[2 * e].is_horizontal()) {
        let d = forward(e);
        down.push((rows.find(g.tail(d)), rows.find(g.head(d))));
    }
    let level = longest_path(n, &down)?;

    let cut = seam(rep, &dirs)?;
    let mut on_seam = vec![false; g.edge_count()];
    for &e in &cut {
        on_seam[e] = true;
    }
    let mut right = Vec::new();
    for e in (0..g.edge_count()).filter(|&e| dirs[2 * e].is_horizontal() && !on_seam[e]) {
        let d = forward(e);
        right.push((cols.find(g.tail(d)), cols.find(g.head(d))));
    }
    let x = longest_path(n, &right)?;
    let xv = |v: usize, cols: &mut Classes| x[cols.find(v)];

    let mut width = 1;
    for &e in &cut {
        let d = forward(e);
        let need = xv(g.tail(d), &mut cols) - xv(g.head(d), &mut cols) + 1;
        width = width.max(need);
    }

    let mut spans = vec![None; g.edge_count()];
    for e in (0..g.edge_count()).filter(|&e| dirs[2 * e].is_horizontal()) {
        let d = forward(e);
        let mut len = xv(g.head(d), &mut cols) - xv(g.tail(d), &mut cols);
        if on_seam[e] {
            len += width;
        }
        spans[e] = Some(if d == 2 * e { len } else { -len });
    }
    let coords = (0..n)
        .map(|v| (xv(v, &mut cols).rem_euclid(width), level[rows.find(v)] + 1))
        .collect();
    Ok(GridDrawing { width, coords, spans })
}
