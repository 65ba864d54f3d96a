//! Direction-driven construction and editing of representations.
//!
//! A sketch stores a compass direction per dart. Rotations are recovered by
//! sorting outgoing darts by direction and angles by comparing the
//! direction of a dart's twin with the direction of its face successor.
//! Dart and vertex ids survive every edit, which keeps lineage bookkeeping
//! trivial for callers.

use thiserror::Error;

use crate::graph::{edge_of, twin, DartId, EdgeId, EmbeddedGraph, FaceId, GraphError, VertexId};
use crate::rep::{Direction, OrthoRadialRep, RepError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SketchError {
    #[error("vertex {vertex} already has an outgoing {dir} dart")]
    Occupied { vertex: VertexId, dir: Direction },
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("could not identify the {0} face")]
    FaceNotFound(&'static str),
    #[error("no dart on the new outer face can serve as reference")]
    NoReference,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// How the outer face, central face and reference are chosen on `finish`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchors {
    /// Any dart whose right-hand face is the outer face.
    pub outer: DartId,
    /// Any dart whose right-hand face is the central face.
    pub central: DartId,
    pub reference: DartId,
}

#[derive(Debug, Clone)]
struct Inherited {
    outer: Vec<DartId>,
    central: Vec<DartId>,
    reference: DartId,
    // Rotation along the old outer walk, zero at twin(reference).
    outer_offset: Vec<Option<i64>>,
}

#[derive(Debug, Clone, Default)]
pub struct Sketch {
    tails: Vec<VertexId>,
    dirs: Vec<Direction>,
    out: Vec<[Option<DartId>; 4]>,
    inherited: Option<Inherited>,
}

impl Sketch {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        let mut s = Self::new();
        for _ in 0..n {
            s.add_vertex();
        }
        s
    }

    /// Loads a representation satisfying the local conditions.
    pub fn from_rep(rep: &OrthoRadialRep) -> Result<Self, RepError> {
        let g = rep.graph();
        let dirs = rep.directions()?;
        let mut s = Sketch::with_vertices(g.vertex_count());
        for (e, (u, v)) in g.edge_list().into_iter().enumerate() {
            s.push_edge(u, v, dirs[2 * e])
                .map_err(|_| RepError::InconsistentDirections(2 * e))?;
        }
        let r = rep.reference();
        let mut outer_offset = vec![None; g.dart_count()];
        let mut x = twin(r);
        let mut c = 0i64;
        loop {
            outer_offset[x] = Some(c);
            let y = g.next_in_face(x);
            if y == twin(r) {
                break;
            }
            c += rep.turn(x, y) as i64;
            x = y;
        }
        s.inherited = Some(Inherited {
            outer: g.face(rep.outer()).to_vec(),
            central: g.face(rep.central()).to_vec(),
            reference: r,
            outer_offset,
        });
        Ok(s)
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tails.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.tails.len()
    }

    pub fn tail(&self, d: DartId) -> VertexId {
        self.tails[d]
    }

    pub fn head(&self, d: DartId) -> VertexId {
        self.tails[twin(d)]
    }

    pub fn dir(&self, d: DartId) -> Direction {
        self.dirs[d]
    }

    /// Outgoing dart of `v` pointing in `dir`.
    pub fn out(&self, v: VertexId, dir: Direction) -> Option<DartId> {
        self.out[v][dir as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.out[v].iter().flatten().count()
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.out.push([None; 4]);
        self.out.len() - 1
    }

    /// Adds an edge `u -> v` whose forward dart points in `dir`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, dir: Direction) -> Result<EdgeId, SketchError> {
        for x in [u, v] {
            if x >= self.vertex_count() {
                return Err(SketchError::UnknownVertex(x));
            }
        }
        self.push_edge(u, v, dir)
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId, dir: Direction) -> Result<EdgeId, SketchError> {
        if self.out[u][dir as usize].is_some() {
            return Err(SketchError::Occupied { vertex: u, dir });
        }
        let back = dir.reversed();
        if self.out[v][back as usize].is_some() {
            return Err(SketchError::Occupied { vertex: v, dir: back });
        }
        let d = self.tails.len();
        self.tails.extend([u, v]);
        self.dirs.extend([dir, back]);
        self.out[u][dir as usize] = Some(d);
        self.out[v][back as usize] = Some(d + 1);
        Ok(edge_of(d))
    }

    /// Subdivides edge `e = u -> v`. Afterwards `e` joins `u -> z` and the
    /// returned new edge joins `z -> v`, both pointing like the old edge.
    pub fn split_edge(&mut self, e: EdgeId) -> Result<(VertexId, EdgeId), SketchError> {
        if e >= self.edge_count() {
            return Err(SketchError::UnknownEdge(e));
        }
        let d = 2 * e;
        let v = self.head(d);
        let dir = self.dirs[d];
        let z = self.add_vertex();
        self.tails[d + 1] = z;
        self.out[z][dir.reversed() as usize] = Some(d + 1);
        self.out[v][dir.reversed() as usize] = None;
        let e2 = self.push_edge(z, v, dir)?;
        Ok((z, e2))
    }

    fn build_graph(&self) -> Result<EmbeddedGraph, GraphError> {
        let edges: Vec<_> = (0..self.edge_count())
            .map(|e| (self.tails[2 * e], self.tails[2 * e + 1]))
            .collect();
        let rotation = self
            .out
            .iter()
            .map(|slots| slots.iter().flatten().copied().collect())
            .collect();
        EmbeddedGraph::new(self.vertex_count(), &edges, rotation)
    }

    fn quarters(&self, g: &EmbeddedGraph) -> Vec<u8> {
        (0..g.dart_count())
            .map(|d| {
                let s = g.next_in_face(d);
                let q = (self.dirs[twin(d)].index() - self.dirs[s].index()).rem_euclid(4);
                if q == 0 {
                    4
                } else {
                    q as u8
                }
            })
            .collect()
    }

    /// Embedded graph and angles in quarter turns, before faces are chosen.
    pub(crate) fn preview(&self) -> Result<(EmbeddedGraph, Vec<u8>), SketchError> {
        let g = self.build_graph()?;
        let q = self.quarters(&g);
        Ok((g, q))
    }

    /// Builds the representation with explicitly chosen faces.
    pub fn finish_with(&self, anchors: Anchors) -> Result<OrthoRadialRep, SketchError> {
        let g = self.build_graph()?;
        let q = self.quarters(&g);
        let outer = g.face_of(anchors.outer);
        let central = g.face_of(anchors.central);
        Ok(OrthoRadialRep::from_quarters(g, q, outer, central, anchors.reference)?)
    }

    /// Builds the representation, carrying the outer face, central face and
    /// reference over from the representation this sketch was loaded from.
    pub fn finish(&self) -> Result<OrthoRadialRep, SketchError> {
        let inh = self
            .inherited
            .as_ref()
            .expect("finish needs a sketch loaded from a representation");
        let g = self.build_graph()?;
        let q = self.quarters(&g);
        let rotation_of = |f: FaceId| -> i64 {
            g.face(f).iter().map(|&d| 2 - q[d] as i64).sum()
        };
        let pick = |hint: &[DartId], what: &'static str| -> Result<FaceId, SketchError> {
            let mut faces: Vec<FaceId> = hint.iter().map(|&d| g.face_of(d)).collect();
            faces.sort_unstable();
            faces.dedup();
            let mut best: Option<FaceId> = None;
            for f in faces {
                if rotation_of(f) <= 0 {
                    if best.is_some() {
                        return Err(SketchError::FaceNotFound(what));
                    }
                    best = Some(f);
                }
            }
            best.ok_or(SketchError::FaceNotFound(what))
        };
        let outer = pick(&inh.outer, "outer")?;
        let central = pick(&inh.central, "central")?;
        let mut reference = inh.reference;
        if g.face_of(twin(reference)) != outer {
            reference = self.reanchor(&g, &q, outer, inh)?;
        }
        Ok(OrthoRadialRep::from_quarters(g, q, outer, central, reference)?)
    }

    // Picks a new reference on the outer walk whose rotation offset from
    // the old reference is zero, so that labels do not change.
    fn reanchor(
        &self,
        g: &EmbeddedGraph,
        q: &[u8],
        outer: FaceId,
        inh: &Inherited,
    ) -> Result<DartId, SketchError> {
        let walk = g.face(outer);
        let start = walk
            .iter()
            .position(|&d| inh.outer_offset.get(d).copied().flatten().is_some())
            .ok_or(SketchError::NoReference)?;
        let mut c = inh.outer_offset[walk[start]].unwrap();
        let mut best: Option<DartId> = None;
        for k in 0..walk.len() {
            let x = walk[(start + k) % walk.len()];
            if k > 0 {
                let prev = walk[(start + k - 1) % walk.len()];
                c += 2 - q[prev] as i64;
            }
            if c == 0 && self.dirs[x] == Direction::Left {
                best = Some(best.map_or(twin(x), |b: DartId| b.min(twin(x))));
            }
        }
        best.ok_or(SketchError::NoReference)
    }
}
