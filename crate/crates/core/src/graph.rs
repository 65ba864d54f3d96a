//! Embedded planar 4-graphs stored as a dart rotation system.
//!
//! Every undirected edge `e` owns the two darts `2e` and `2e + 1`, so the
//! twin of a dart is obtained by flipping its lowest bit. Each vertex keeps
//! its outgoing darts in clockwise order. Faces are the walks that keep the
//! face on the right-hand side: arriving at a vertex over dart `d`, the walk
//! continues with the outgoing dart that precedes `twin(d)` in clockwise
//! order.

use std::collections::HashSet;

use thiserror::Error;

pub type VertexId = usize;
pub type DartId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} has degree {degree}, the maximum is 4")]
    DegreeExceeded { vertex: VertexId, degree: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("rotation system is not planar: |V| - |E| + |F| = {vertices} - {edges} + {faces}")]
    EulerViolation {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("edge {edge} references unknown vertex {vertex}")]
    UnknownVertex { edge: EdgeId, vertex: VertexId },
    #[error("edge {0} is a self-loop")]
    SelfLoop(EdgeId),
    #[error("edges {0} and {1} join the same pair of vertices")]
    ParallelEdges(EdgeId, EdgeId),
    #[error("rotation at vertex {0} does not list exactly its outgoing darts")]
    BadRotation(VertexId),
    #[error("graph has no vertices")]
    Empty,
}

/// Plain view of a single dart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart {
    pub id: DartId,
    pub tail: VertexId,
    pub head: VertexId,
    pub twin: DartId,
}

#[inline]
pub const fn twin(d: DartId) -> DartId {
    d ^ 1
}

#[inline]
pub const fn edge_of(d: DartId) -> EdgeId {
    d >> 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    tails: Vec<VertexId>,
    rotation: Vec<Vec<DartId>>,
    slot: Vec<usize>,
    faces: Vec<Vec<DartId>>,
    face_of: Vec<FaceId>,
}

impl EmbeddedGraph {
    /// Builds a graph from an edge list and a clockwise order of outgoing
    /// darts per vertex. Edge `i` joins `edges[i].0 -> edges[i].1`; its
    /// forward dart is `2i`.
    pub fn new(
        vertex_count: usize,
        edges: &[(VertexId, VertexId)],
        rotation: Vec<Vec<DartId>>,
    ) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut tails = Vec::with_capacity(edges.len() * 2);
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(GraphError::UnknownVertex { edge: i, vertex: x });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(i));
            }
            let key = (u.min(v), u.max(v));
            if let Some(&j) = seen.get(&key) {
                return Err(GraphError::ParallelEdges(j, i));
            }
            seen.insert(key, i);
            tails.push(u);
            tails.push(v);
        }
        if rotation.len() != vertex_count {
            return Err(GraphError::BadRotation(rotation.len().min(vertex_count)));
        }
        let mut slot = vec![usize::MAX; tails.len()];
        for (v, darts) in rotation.iter().enumerate() {
            if darts.len() > MAX_DEGREE {
                return Err(GraphError::DegreeExceeded {
                    vertex: v,
                    degree: darts.len(),
                });
            }
            for (i, &d) in darts.iter().enumerate() {
                if d >= tails.len() || tails[d] != v || slot[d] != usize::MAX {
                    return Err(GraphError::BadRotation(v));
                }
                slot[d] = i;
            }
        }
        if let Some(d) = slot.iter().position(|&s| s == usize::MAX) {
            return Err(GraphError::BadRotation(tails[d]));
        }
        let mut g = EmbeddedGraph {
            tails,
            rotation,
            slot,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        if !g.is_connected() {
            return Err(GraphError::NotConnected);
        }
        g.trace_faces();
        let (v, e, f) = (g.vertex_count(), g.edge_count(), g.faces.len());
        if v + f != e + 2 {
            return Err(GraphError::EulerViolation {
                vertices: v,
                edges: e,
                faces: f,
            });
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in &self.rotation[v] {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn trace_faces(&mut self) {
        let m = self.tails.len();
        self.face_of = vec![usize::MAX; m];
        self.faces.clear();
        for start in 0..m {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let id = self.faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                self.face_of[d] = id;
                walk.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            self.faces.push(walk);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tails.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.tails.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn tail(&self, d: DartId) -> VertexId {
        self.tails[d]
    }

    #[inline]
    pub fn head(&self, d: DartId) -> VertexId {
        self.tails[twin(d)]
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart {
            id: d,
            tail: self.tail(d),
            head: self.head(d),
            twin: twin(d),
        }
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.dart_count()).map(|d| self.dart(d))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    /// Outgoing darts of `v` in clockwise order.
    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotation[v]
    }

    /// Outgoing dart following `d` clockwise around `tail(d)`.
    #[inline]
    pub fn cw_next(&self, d: DartId) -> DartId {
        let r = &self.rotation[self.tails[d]];
        r[(self.slot[d] + 1) % r.len()]
    }

    /// The `k`-th outgoing dart clockwise after `d` at its tail.
    #[inline]
    pub fn cw_nth(&self, d: DartId, k: usize) -> DartId {
        let r = &self.rotation[self.tails[d]];
        r[(self.slot[d] + k) % r.len()]
    }

    /// Outgoing dart preceding `d` clockwise around `tail(d)`.
    #[inline]
    pub fn cw_prev(&self, d: DartId) -> DartId {
        let r = &self.rotation[self.tails[d]];
        r[(self.slot[d] + r.len() - 1) % r.len()]
    }

    /// Successor of `d` on the walk of the face to its right.
    #[inline]
    pub fn next_in_face(&self, d: DartId) -> DartId {
        self.cw_prev(twin(d))
    }

    /// Predecessor of `d` on the walk of the face to its right.
    #[inline]
    pub fn prev_in_face(&self, d: DartId) -> DartId {
        twin(self.cw_next(d))
    }

    #[inline]
    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face_of[d]
    }

    /// Face walk starting at its smallest dart.
    pub fn face(&self, f: FaceId) -> &[DartId] {
        &self.faces[f]
    }

    pub fn faces(&self) -> &[Vec<DartId>] {
        &self.faces
    }

    /// The dart from `u` to `v`, if the edge exists.
    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.rotation[u].iter().copied().find(|&d| self.head(d) == v)
    }

    /// Edge list in id order, as `(tail of dart 2e, head of dart 2e)`.
    pub fn edge_list(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.edge_count())
            .map(|e| (self.tail(2 * e), self.head(2 * e)))
            .collect()
    }

    /// Same graph with every clockwise order reversed.
    pub fn mirrored(&self) -> EmbeddedGraph {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        EmbeddedGraph::new(self.vertex_count(), &self.edge_list(), rotation)
            .expect("mirroring preserves planarity")
    }

    /// Checks that consecutive darts of `walk` share endpoints.
    pub fn is_walk(&self, walk: &[DartId]) -> bool {
        walk.iter().all(|&d| d < self.dart_count())
            && walk
                .windows(2)
                .all(|w| self.head(w[0]) == self.tail(w[1]))
    }

    /// Vertices touched by a walk, without repetition.
    pub fn walk_vertices(&self, walk: &[DartId]) -> HashSet<VertexId> {
        walk.iter().map(|&d| self.tail(d)).chain(walk.last().map(|&d| self.head(d))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> EmbeddedGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let rotation = (0..n)
            .map(|v| vec![2 * v, 2 * ((v + n - 1) % n) + 1])
            .collect();
        EmbeddedGraph::new(n, &edges, rotation).unwrap()
    }

    #[test]
    fn ring_has_two_faces() {
        let g = ring(4);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.dart_count(), 8);
        assert_eq!(g.face_count(), 2);
        assert_eq!(g.face(0), &[0, 2, 4, 6]);
        assert_eq!(g.face(1), &[1, 7, 5, 3]);
    }

    #[test]
    fn faces_partition_darts() {
        let g = ring(5);
        let mut all: Vec<_> = g.faces().iter().flatten().copied().collect();
        all.sort();
        assert_eq!(all, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn k5_is_rejected() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let mut rotation = vec![Vec::new(); 5];
        for (i, &(u, v)) in edges.iter().enumerate() {
            rotation[u].push(2 * i);
            rotation[v].push(2 * i + 1);
        }
        assert!(matches!(
            EmbeddedGraph::new(5, &edges, rotation),
            Err(GraphError::EulerViolation { .. })
        ));
    }

    #[test]
    fn rejects_bad_inputs() {
        let edges = [(0, 1), (2, 3)];
        let rotation = vec![vec![0], vec![1], vec![2], vec![3]];
        assert_eq!(
            EmbeddedGraph::new(4, &edges, rotation),
            Err(GraphError::NotConnected)
        );
        let edges = [(0, 1), (1, 0)];
        let rotation = vec![vec![0, 3], vec![1, 2]];
        assert!(matches!(
            EmbeddedGraph::new(2, &edges, rotation),
            Err(GraphError::ParallelEdges(0, 1))
        ));
        let edges: Vec<_> = (1..6).map(|v| (0, v)).collect();
        let mut rotation = vec![(0..5).map(|i| 2 * i).collect::<Vec<_>>()];
        rotation.extend((0..5).map(|i| vec![2 * i + 1]));
        assert!(matches!(
            EmbeddedGraph::new(6, &edges, rotation),
            Err(GraphError::DegreeExceeded { vertex: 0, degree: 5 })
        ));
    }

    #[test]
    fn face_successor_is_counter_clockwise_neighbour_of_twin() {
        let g = ring(3);
        for d in 0..g.dart_count() {
            let s = g.next_in_face(d);
            assert_eq!(g.tail(s), g.head(d));
            assert_eq!(g.prev_in_face(s), d);
        }
    }
}
