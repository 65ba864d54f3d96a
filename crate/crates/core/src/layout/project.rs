//! Drawings of the original graph from drawings of its augmentation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::GridDrawing;
use crate::graph::{EdgeId, VertexId};
use crate::rep::OrthoRadialRep;
use crate::transform::Lineage;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectError {
    #[error("map does not match the drawing: {0}")]
    InconsistentMap(String),
}

/// One original edge drawn as an axis-aligned chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polyline {
    /// `(col, row)` from the tail to the head of the edge.
    pub points: Vec<(i64, i64)>,
    /// Signed column displacement of each segment, 0 for radial ones.
    pub spans: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolylineDrawing {
    pub width: i64,
    pub coords: Vec<(i64, i64)>,
    pub edges: Vec<Polyline>,
}

/// Drops helper vertices and edges and turns subdivision vertices into
/// bends or straight interior points of their original edges.
pub fn project_back(rep: &OrthoRadialRep, dr: &GridDrawing, map: &Lineage) -> Result<PolylineDrawing, ProjectError> {
    let g = rep.graph();
    let bad = |m: String| ProjectError::InconsistentMap(m);
    if map.vertices.len() != g.vertex_count() || map.edges.len() != g.edge_count() {
        return Err(bad("sizes differ".into()));
    }
    if dr.coords.len() != g.vertex_count() {
        return Err(bad("drawing has the wrong number of vertices".into()));
    }
    let mut pieces: Vec<Vec<EdgeId>> = vec![Vec::new(); map.original_edges];
    for (e, origin) in map.edges.iter().enumerate() {
        if let Some(o) = *origin {
            pieces.get_mut(o).ok_or_else(|| bad(format!("edge {e} claims unknown origin {o}")))?.push(e);
        }
    }
    let mut edges = Vec::with_capacity(map.original_edges);
    for (o, own) in pieces.iter().enumerate() {
        // Piece `o` keeps the original tail; walk along the other pieces.
        let mut at: VertexId = g.tail(2 * o);
        let mut points = vec![dr.coords[at]];
        let mut spans = Vec::new();
        let mut used = vec![false; own.len()];
        while let Some(i) = (0..own.len()).find(|&i| !used[i] && (g.tail(2 * own[i]) == at || g.head(2 * own[i]) == at)) {
            used[i] = true;
            let e = own[i];
            let (d, next) = if g.tail(2 * e) == at { (2 * e, g.head(2 * e)) } else { (2 * e + 1, g.tail(2 * e)) };
            spans.push(dr.span(d));
            at = next;
            points.push(dr.coords[at]);
            if at < map.original_vertices {
                break;
            }
        }
        if used.iter().any(|&u| !u) || at >= map.original_vertices {
            return Err(bad(format!("pieces of edge {o} do not form a path")));
        }
        edges.push(Polyline { points, spans });
    }
    Ok(PolylineDrawing {
        width: dr.width,
        coords: dr.coords[..map.original_vertices].to_vec(),
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::layout::assign_coordinates;
    use crate::rectangulate::{rectangulate, Mode};

    #[test]
    fn identity_map_keeps_everything() {
        let rep = fixtures::ring4();
        let dr = assign_coordinates(&rep).unwrap();
        let p = project_back(&rep, &dr, &Lineage::identity(&rep)).unwrap();
        assert_eq!(p.coords, dr.coords);
        assert!(p.edges.iter().all(|e| e.points.len() == 2));
    }

    #[test]
    fn pendant_edge_comes_back() {
        let rep = fixtures::ring_with_pendant();
        let (out, map) = rectangulate(&rep, Mode::Binary).unwrap();
        let dr = assign_coordinates(&out).unwrap();
        let p = project_back(&out, &dr, &map).unwrap();
        let g = rep.graph();
        assert_eq!(p.edges.len(), g.edge_count());
        for (e, line) in p.edges.iter().enumerate() {
            assert_eq!(line.points[0], p.coords[g.tail(2 * e)]);
            assert_eq!(*line.points.last().unwrap(), p.coords[g.head(2 * e)]);
        }
    }
}
