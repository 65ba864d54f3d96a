//! Ortho-radial representations: an embedded graph plus the angle of every
//! face corner, the outer and central faces and the reference dart.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{twin, DartId, EmbeddedGraph, FaceId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("darts {0} and {1} do not meet at a common vertex")]
    NotIncident(DartId, DartId),
    #[error("walk is disconnected between positions {0} and {1}")]
    Disconnected(usize, usize),
    #[error("directions are inconsistent at dart {0}")]
    InconsistentDirections(DartId),
    #[error("angle {angle} at dart {dart} is not allowed")]
    InvalidAngle { dart: DartId, angle: u16 },
    #[error("reference dart {0} does not have the outer face on its left")]
    InvalidReference(DartId),
    #[error("angle list has {got} entries, expected {expected}")]
    AngleCount { got: usize, expected: usize },
    #[error("face {0} does not exist")]
    UnknownFace(FaceId),
}

/// Edge direction on the cylinder. `+1` is one clockwise quarter turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Right = 0,
    Down = 1,
    Left = 2,
    Up = 3,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::Right, Direction::Down, Direction::Left, Direction::Up];

    pub fn from_index(i: i64) -> Direction {
        Self::ALL[i.rem_euclid(4) as usize]
    }

    pub fn index(self) -> i64 {
        self as i64
    }

    /// Direction after `quarters` clockwise quarter turns.
    pub fn turned(self, quarters: i64) -> Direction {
        Self::from_index(self.index() + quarters)
    }

    pub fn reversed(self) -> Direction {
        self.turned(2)
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Direction::Right | Direction::Left)
    }

    pub fn is_vertical(self) -> bool {
        !self.is_horizontal()
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Direction::Right => "right",
            Direction::Down => "down",
            Direction::Left => "left",
            Direction::Up => "up",
        };
        f.write_str(s)
    }
}

/// A failed local condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Angles around a vertex do not add up to 360 degrees.
    VertexSum { vertex: VertexId, sum: u32 },
    /// A face has the wrong rotation.
    FaceRotation {
        face: FaceId,
        expected: i32,
        observed: i32,
    },
    /// A 360 degree angle at a vertex of degree above one.
    FullAngle { dart: DartId, vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexSum { vertex, sum } => {
                write!(f, "angles at vertex {vertex} sum to {sum}, not 360")
            }
            Violation::FaceRotation {
                face,
                expected,
                observed,
            } => write!(f, "face {face} has rotation {observed}, expected {expected}"),
            Violation::FullAngle { dart, vertex } => {
                write!(f, "dart {dart} has a 360 degree angle at vertex {vertex} of degree above one")
            }
        }
    }
}

/// Face roles used by the rotation condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceKind {
    Regular,
    Outer,
    Central,
    OuterAndCentral,
}

impl FaceKind {
    pub fn required_rotation(self) -> i32 {
        match self {
            FaceKind::Regular => 4,
            FaceKind::Outer | FaceKind::Central => 0,
            FaceKind::OuterAndCentral => -4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoRadialRep {
    graph: EmbeddedGraph,
    quarters: Vec<u8>,
    outer: FaceId,
    central: FaceId,
    reference: DartId,
}

impl OrthoRadialRep {
    /// Angles are given in degrees per dart.
    pub fn new(
        graph: EmbeddedGraph,
        angles: &[u16],
        outer: FaceId,
        central: FaceId,
        reference: DartId,
    ) -> Result<Self, RepError> {
        if angles.len() != graph.dart_count() {
            return Err(RepError::AngleCount {
                got: angles.len(),
                expected: graph.dart_count(),
            });
        }
        let mut quarters = Vec::with_capacity(angles.len());
        for (d, &a) in angles.iter().enumerate() {
            if a == 0 || a > 360 || a % 90 != 0 {
                return Err(RepError::InvalidAngle { dart: d, angle: a });
            }
            quarters.push((a / 90) as u8);
        }
        Self::from_quarters(graph, quarters, outer, central, reference)
    }

    pub(crate) fn from_quarters(
        graph: EmbeddedGraph,
        quarters: Vec<u8>,
        outer: FaceId,
        central: FaceId,
        reference: DartId,
    ) -> Result<Self, RepError> {
        for f in [outer, central] {
            if f >= graph.face_count() {
                return Err(RepError::UnknownFace(f));
            }
        }
        if reference >= graph.dart_count() || graph.face_of(twin(reference)) != outer {
            return Err(RepError::InvalidReference(reference));
        }
        Ok(OrthoRadialRep {
            graph,
            quarters,
            outer,
            central,
            reference,
        })
    }

    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    pub fn outer(&self) -> FaceId {
        self.outer
    }

    pub fn central(&self) -> FaceId {
        self.central
    }

    pub fn reference(&self) -> DartId {
        self.reference
    }

    /// Angle in degrees inside the face of `d`, from `d` to its successor.
    pub fn angle(&self, d: DartId) -> u16 {
        self.quarters[d] as u16 * 90
    }

    #[inline]
    pub(crate) fn quarter(&self, d: DartId) -> i32 {
        self.quarters[d] as i32
    }

    pub(crate) fn quarters(&self) -> &[u8] {
        &self.quarters
    }

    pub fn face_kind(&self, f: FaceId) -> FaceKind {
        match (f == self.outer, f == self.central) {
            (true, true) => FaceKind::OuterAndCentral,
            (true, false) => FaceKind::Outer,
            (false, true) => FaceKind::Central,
            (false, false) => FaceKind::Regular,
        }
    }

    /// Turn value at the common vertex when walking `d_in` then `d_out`,
    /// without checking incidence.
    #[inline]
    pub(crate) fn turn(&self, d_in: DartId, d_out: DartId) -> i32 {
        let g = &self.graph;
        let mut x = d_in;
        let mut sweep = self.quarter(x);
        let mut o = g.next_in_face(x);
        while o != d_out {
            x = twin(o);
            sweep += self.quarter(x);
            o = g.next_in_face(x);
        }
        2 - sweep
    }

    /// Rotation at `head(d_in) = tail(d_out)`: `1` right, `0` straight,
    /// `-1` left and `-2` when `d_out` reverses `d_in`.
    pub fn rotation_turn(&self, d_in: DartId, d_out: DartId) -> Result<i32, RepError> {
        let g = &self.graph;
        if d_in >= g.dart_count() || d_out >= g.dart_count() || g.head(d_in) != g.tail(d_out) {
            return Err(RepError::NotIncident(d_in, d_out));
        }
        Ok(self.turn(d_in, d_out))
    }

    /// Sum of turns at internal vertices of an open walk.
    pub fn open_rotation(&self, walk: &[DartId]) -> Result<i32, RepError> {
        self.check_walk(walk)?;
        Ok(walk.windows(2).map(|w| self.turn(w[0], w[1])).sum())
    }

    /// Rotation of a walk; a walk that returns to its start is treated as a
    /// cycle and the turn at the closing vertex is included.
    pub fn path_rotation(&self, walk: &[DartId]) -> Result<i32, RepError> {
        let open = self.open_rotation(walk)?;
        let g = &self.graph;
        match (walk.first(), walk.last()) {
            (Some(&first), Some(&last)) if walk.len() > 1 && g.head(last) == g.tail(first) => {
                Ok(open + self.turn(last, first))
            }
            _ => Ok(open),
        }
    }

    fn check_walk(&self, walk: &[DartId]) -> Result<(), RepError> {
        let g = &self.graph;
        if let Some(&d) = walk.iter().find(|&&d| d >= g.dart_count()) {
            return Err(RepError::NotIncident(d, d));
        }
        for (i, w) in walk.windows(2).enumerate() {
            if g.head(w[0]) != g.tail(w[1]) {
                return Err(RepError::Disconnected(i, i + 1));
            }
        }
        Ok(())
    }

    /// Rotation of the face walk, face on the right.
    pub fn face_rotation(&self, f: FaceId) -> i32 {
        let walk = self.graph.face(f);
        walk.iter()
            .map(|&d| 2 - self.quarter(d))
            .sum()
    }

    /// All violations of the vertex-sum and face-rotation conditions.
    pub fn check_conditions(&self) -> Vec<Violation> {
        let g = &self.graph;
        let mut out = Vec::new();
        for v in 0..g.vertex_count() {
            let sum: u32 = g
                .rotation(v)
                .iter()
                .map(|&d| self.angle(twin(d)) as u32)
                .sum();
            if sum != 360 {
                out.push(Violation::VertexSum { vertex: v, sum });
            }
            if g.degree(v) > 1 {
                for &d in g.rotation(v) {
                    if self.quarters[twin(d)] == 4 {
                        out.push(Violation::FullAngle {
                            dart: twin(d),
                            vertex: v,
                        });
                    }
                }
            }
        }
        for f in 0..g.face_count() {
            let expected = self.face_kind(f).required_rotation();
            let observed = self.face_rotation(f);
            if observed != expected {
                out.push(Violation::FaceRotation {
                    face: f,
                    expected,
                    observed,
                });
            }
        }
        out
    }

    /// Direction of every dart, the reference dart pointing right.
    pub fn directions(&self) -> Result<Vec<Direction>, RepError> {
        let g = &self.graph;
        let mut dir: Vec<Option<Direction>> = vec![None; g.dart_count()];
        let mut done = vec![false; g.vertex_count()];
        let r = self.reference;
        dir[r] = Some(Direction::Right);
        dir[twin(r)] = Some(Direction::Left);
        let mut queue = std::collections::VecDeque::from([g.head(r)]);
        // Every vertex is entered over a dart of known direction.
        while let Some(v) = queue.pop_front() {
            if done[v] {
                continue;
            }
            done[v] = true;
            let anchor = g
                .rotation(v)
                .iter()
                .copied()
                .find(|&d| dir[twin(d)].is_some())
                .expect("queued vertices have a directed incoming dart");
            let base = dir[twin(anchor)].unwrap();
            for &o in g.rotation(v) {
                let want = base.turned(self.turn(twin(anchor), o) as i64);
                match dir[o] {
                    Some(have) if have != want => return Err(RepError::InconsistentDirections(o)),
                    _ => {}
                }
                dir[o] = Some(want);
                let back = want.reversed();
                match dir[twin(o)] {
                    Some(have) if have != back => {
                        return Err(RepError::InconsistentDirections(twin(o)))
                    }
                    _ => {}
                }
                dir[twin(o)] = Some(back);
                if !done[g.head(o)] {
                    queue.push_back(g.head(o));
                }
            }
        }
        Ok(dir.into_iter().map(|d| d.expect("graph is connected")).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ring_conditions_hold() {
        let rep = fixtures::ring4();
        assert!(rep.check_conditions().is_empty());
        assert_eq!(rep.face_rotation(rep.outer()), 0);
        assert_eq!(rep.face_rotation(rep.central()), 0);
    }

    #[test]
    fn single_corner_change_breaks_vertex_sum() {
        let rep = fixtures::ring4();
        let mut angles: Vec<u16> = (0..8).map(|d| rep.angle(d)).collect();
        angles[0] = 90;
        let bad = OrthoRadialRep::new(
            rep.graph().clone(),
            &angles,
            rep.outer(),
            rep.central(),
            rep.reference(),
        )
        .unwrap();
        let v = bad.check_conditions();
        assert!(v.contains(&Violation::VertexSum { vertex: 1, sum: 270 }));
    }

    #[test]
    fn rectangle_face_is_outer_and_central() {
        let rep = fixtures::square();
        assert_eq!(rep.outer(), rep.central());
        assert!(rep.check_conditions().is_empty());
        assert_eq!(rep.face_rotation(rep.outer()), -4);
    }

    #[test]
    fn turn_values() {
        let rep = fixtures::spiral4();
        // a->b = 0, b->c = 2, c->d = 4, d->a = 6
        assert_eq!(rep.rotation_turn(0, 2), Ok(1));
        assert_eq!(rep.rotation_turn(2, 4), Ok(0));
        assert_eq!(rep.rotation_turn(4, 6), Ok(-1));
        assert_eq!(rep.rotation_turn(0, 1), Ok(-2));
        assert!(rep.rotation_turn(0, 4).is_err());
        for d_in in 0..8 {
            for d_out in 0..8 {
                if rep.graph().head(d_in) == rep.graph().tail(d_out) && d_out != twin(d_in) {
                    let a = rep.rotation_turn(d_in, d_out).unwrap();
                    let b = rep.rotation_turn(twin(d_out), twin(d_in)).unwrap();
                    assert_eq!(a + b, 0);
                }
            }
        }
    }

    #[test]
    fn path_rotation_basics() {
        let rep = fixtures::spiral4();
        assert_eq!(rep.path_rotation(&[2]), Ok(0));
        assert_eq!(rep.path_rotation(&[0, 2, 4]), Ok(1));
        assert_eq!(rep.path_rotation(&[5, 3, 1]), Ok(-1));
        assert_eq!(rep.path_rotation(&[0, 2, 4, 6]), Ok(0));
        assert_eq!(rep.path_rotation(&[0, 4]), Err(RepError::Disconnected(0, 1)));
    }

    #[test]
    fn spiral_directions() {
        let rep = fixtures::spiral4();
        let dir = rep.directions().unwrap();
        assert_eq!(dir[0], Direction::Right);
        assert_eq!(dir[1], Direction::Left);
        assert_eq!(dir[2], Direction::Down);
        assert_eq!(dir[4], Direction::Down);
        assert_eq!(dir[6], Direction::Right);
    }

    #[test]
    fn direction_arithmetic() {
        assert_eq!(Direction::Right.turned(1), Direction::Down);
        assert_eq!(Direction::Down.turned(1), Direction::Left);
        assert_eq!(Direction::Left.turned(1), Direction::Up);
        assert_eq!(Direction::Up.turned(1), Direction::Right);
        assert_eq!(Direction::Right.turned(-1), Direction::Up);
        assert_eq!(Direction::Up.reversed(), Direction::Down);
    }
}
