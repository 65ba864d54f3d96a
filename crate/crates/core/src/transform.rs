//! Degree-1 elimination and the two symmetries of representations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycle::{elementary_path, label_walk};
use crate::graph::{edge_of, twin, DartId, EdgeId, VertexId};
use crate::rep::{Direction, OrthoRadialRep, RepError};
use crate::sketch::{Sketch, SketchError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("the central face boundary is monotone or has no edge labelled 0")]
    CentralBoundaryMonotone,
    #[error("outer and central face coincide")]
    OuterIsCentral,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Sketch(#[from] SketchError),
}

/// Which structure a helper vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HelperRole {
    /// Corner of the square replacing a degree-1 vertex.
    Gadget,
    /// Helper ring that makes the outer or central face a plain cycle.
    Ring,
    /// Subdivides an edge that was itself added.
    Augment,
    /// Parts of the structure built by the two-phase method.
    KR,
    KT,
    KB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexOrigin {
    Original,
    /// Lies inside original edge `edge`.
    Subdivision { edge: EdgeId },
    Helper { role: HelperRole },
}

/// Where every vertex and edge of a derived representation comes from.
///
/// Ids of the source survive unchanged, so the first `original_vertices`
/// vertices are the original ones. A derived edge carries the original
/// edge it is a piece of, or `None` for helper edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lineage {
    pub original_vertices: usize,
    pub original_edges: usize,
    pub vertices: Vec<VertexOrigin>,
    pub edges: Vec<Option<EdgeId>>,
    /// For edges created by subdivision, the edge they were split off.
    pub split_from: Vec<Option<EdgeId>>,
}

/// Lineage produced by `normalize`.
pub type NormalizationMap = Lineage;

impl Lineage {
    pub fn identity(rep: &OrthoRadialRep) -> Self {
        let g = rep.graph();
        Lineage {
            original_vertices: g.vertex_count(),
            original_edges: g.edge_count(),
            vertices: vec![VertexOrigin::Original; g.vertex_count()],
            edges: (0..g.edge_count()).map(Some).collect(),
            split_from: vec![None; g.edge_count()],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vertices.len() == self.original_vertices && self.edges.len() == self.original_edges
    }

    pub fn added_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.original_vertices..self.vertices.len()
    }

    /// Records that `split_edge(e)` produced vertex `z` and edge `e2`.
    /// Splitting a helper edge yields a helper vertex with role `role`.
    pub(crate) fn record_split(&mut self, e: EdgeId, z: VertexId, e2: EdgeId, role: HelperRole) {
        let origin = self.edges[e];
        self.push_vertex(
            z,
            match origin {
                Some(edge) => VertexOrigin::Subdivision { edge },
                None => VertexOrigin::Helper { role },
            },
        );
        self.push_edge(e2, origin);
        self.split_from[e2] = Some(e);
    }

    pub(crate) fn push_vertex(&mut self, v: VertexId, origin: VertexOrigin) {
        debug_assert_eq!(v, self.vertices.len());
        self.vertices.push(origin);
    }

    pub(crate) fn push_edge(&mut self, e: EdgeId, origin: Option<EdgeId>) {
        debug_assert_eq!(e, self.edges.len());
        self.edges.push(origin);
        self.split_from.push(None);
    }

    /// `e` and every edge later split off it, directly or not.
    pub fn descendants(&self, e: EdgeId) -> Vec<EdgeId> {
        let mut out = vec![e];
        for x in e + 1..self.split_from.len() {
            if let Some(p) = self.split_from[x] {
                if out.contains(&p) {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Derived edges that are pieces of original edge `e`.
    pub fn pieces(&self, e: EdgeId) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&x| self.edges[x] == Some(e)).collect()
    }
}

/// Replaces every degree-1 vertex by a unit square so that the minimum
/// degree becomes two.
pub fn normalize(rep: &OrthoRadialRep) -> Result<(OrthoRadialRep, NormalizationMap), TransformError> {
    let mut map = Lineage::identity(rep);
    let g = rep.graph();
    let pendants: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 1).collect();
    if pendants.is_empty() {
        return Ok((rep.clone(), map));
    }
    let mut s = Sketch::from_rep(rep)?;
    for v in pendants {
        add_gadget(&mut s, &mut map, v, rep.reference())?;
    }
    Ok((s.finish()?, map))
}

// With `d` the direction from the neighbour u to v: subdivide uv at w and
// close the square w, v, x, y on the clockwise side of uv. On the reference
// edge the square goes to the right of the reference instead, keeping the
// outer face to its left.
fn add_gadget(s: &mut Sketch, map: &mut Lineage, v: VertexId, reference: DartId) -> Result<(), TransformError> {
    let o = Direction::ALL
        .iter()
        .find_map(|&dir| s.out(v, dir))
        .expect("pendant has one dart");
    let d = s.dir(twin(o));
    let e = edge_of(o);
    let side = if e == edge_of(reference) {
        s.dir(reference).turned(1)
    } else {
        d.turned(1)
    };
    let (w, e2) = s.split_edge(e)?;
    map.record_split(e, w, e2, HelperRole::Gadget);
    let x = s.add_vertex();
    map.push_vertex(x, VertexOrigin::Helper { role: HelperRole::Gadget });
    let y = s.add_vertex();
    map.push_vertex(y, VertexOrigin::Helper { role: HelperRole::Gadget });
    for (a, b, dir) in [(v, x, side), (x, y, d.reversed()), (w, y, side)] {
        let id = s.add_edge(a, b, dir)?;
        map.push_edge(id, None);
    }
    Ok(())
}

/// Reflects the representation: clockwise orders reverse, labels negate.
/// Dart ids are kept; the reference becomes the reversed old reference.
pub fn mirror(rep: &OrthoRadialRep) -> OrthoRadialRep {
    let g = rep.graph();
    let m = g.mirrored();
    // Corner between d and its new successor is the old corner on the
    // other side of twin(d).
    let quarters = (0..g.dart_count())
        .map(|d| rep.quarter(twin(g.cw_next(twin(d)))) as u8)
        .collect();
    let outer = m.face_of(twin(g.face(rep.outer())[0]));
    let central = m.face_of(twin(g.face(rep.central())[0]));
    OrthoRadialRep::from_quarters(m, quarters, outer, central, twin(rep.reference()))
        .expect("mirroring keeps the reference on the outer face")
}

/// The walk of `mirror(rep)` that traces `walk` backwards.
pub fn mirror_walk(walk: &[DartId]) -> Vec<DartId> {
    walk.iter().rev().map(|&d| twin(d)).collect()
}

/// Turns the cylinder upside down: outer and central face swap and the
/// new reference is the reverse of the smallest-id label-0 dart on the old
/// central face boundary.
pub fn flip(rep: &OrthoRadialRep) -> Result<OrthoRadialRep, TransformError> {
    if rep.outer() == rep.central() {
        return Err(TransformError::OuterIsCentral);
    }
    let g = rep.graph();
    let walk = g.face(rep.central());
    let labels = central_labels(rep).ok_or(TransformError::CentralBoundaryMonotone)?;
    let monotone = (labels.iter().all(|&l| l >= 0) || labels.iter().all(|&l| l <= 0))
        && labels.iter().any(|&l| l != 0);
    if monotone {
        return Err(TransformError::CentralBoundaryMonotone);
    }
    let pick = walk
        .iter()
        .zip(&labels)
        .filter(|&(_, &l)| l == 0)
        .map(|(&d, _)| d)
        .min()
        .ok_or(TransformError::CentralBoundaryMonotone)?;
    Ok(OrthoRadialRep::from_quarters(
        g.clone(),
        rep.quarters().to_vec(),
        rep.central(),
        rep.outer(),
        twin(pick),
    )?)
}

/// Labels along the central face walk, in walk order.
pub fn central_labels(rep: &OrthoRadialRep) -> Option<Vec<i64>> {
    let walk = rep.graph().face(rep.central());
    let (path, _) = elementary_path(rep, walk).ok()?;
    let mut prefix = vec![rep.reference()];
    prefix.extend(path);
    label_walk(rep, walk, &prefix)
}
