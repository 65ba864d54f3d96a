//! Small hand-built representations used by tests, docs and the CLI.

use crate::rep::{Direction::*, OrthoRadialRep};
use crate::sketch::{Anchors, Sketch};

/// Four vertices on one circle, all edges pointing right.
pub fn ring4() -> OrthoRadialRep {
    ring(4)
}

/// `n` vertices on one circle.
pub fn ring(n: usize) -> OrthoRadialRep {
    let mut s = Sketch::with_vertices(n);
    for v in 0..n {
        s.add_edge(v, (v + 1) % n, Right).unwrap();
    }
    s.finish_with(Anchors { outer: 1, central: 0, reference: 0 }).unwrap()
}

/// A 4-cycle a, b, c, d that goes right, down, down, right. Its only
/// essential cycle is decreasing with labels 0, 1, 1, 0.
pub fn spiral4() -> OrthoRadialRep {
    let mut s = Sketch::with_vertices(4);
    s.add_edge(0, 1, Right).unwrap();
    s.add_edge(1, 2, Down).unwrap();
    s.add_edge(2, 3, Down).unwrap();
    s.add_edge(3, 0, Right).unwrap();
    s.finish_with(Anchors { outer: 1, central: 0, reference: 0 }).unwrap()
}

/// A rectangle that does not enclose the center, so the outer face is
/// also the central face.
pub fn square() -> OrthoRadialRep {
    let mut s = Sketch::with_vertices(4);
    s.add_edge(0, 1, Right).unwrap();
    s.add_edge(1, 2, Down).unwrap();
    s.add_edge(2, 3, Left).unwrap();
    s.add_edge(3, 0, Up).unwrap();
    s.finish_with(Anchors { outer: 1, central: 1, reference: 0 }).unwrap()
}

/// Two branch vertices `p = 0` and `q = 2` joined by three paths: the two
/// halves of a ring and a detour above it.
pub fn theta() -> OrthoRadialRep {
    let mut s = Sketch::with_vertices(7);
    let (p, m, q, r, a, b, c) = (0, 1, 2, 3, 4, 5, 6);
    s.add_edge(p, m, Right).unwrap();
    s.add_edge(m, q, Right).unwrap();
    s.add_edge(q, r, Right).unwrap();
    s.add_edge(r, p, Right).unwrap();
    s.add_edge(p, a, Up).unwrap();
    let top = s.add_edge(a, b, Right).unwrap();
    s.add_edge(b, c, Right).unwrap();
    s.add_edge(c, q, Down).unwrap();
    s.finish_with(Anchors {
        outer: 2 * top + 1,
        central: 0,
        reference: 2 * top,
    })
    .unwrap()
}

/// A ring of four with a pendant edge hanging down from vertex 1.
pub fn ring_with_pendant() -> OrthoRadialRep {
    let mut s = Sketch::with_vertices(5);
    for v in 0..4 {
        s.add_edge(v, (v + 1) % 4, Right).unwrap();
    }
    s.add_edge(1, 4, Down).unwrap();
    s.finish_with(Anchors { outer: 1, central: 0, reference: 0 }).unwrap()
}

/// Two concentric rings of four joined by two spokes.
pub fn two_rings() -> OrthoRadialRep {
    let mut s = Sketch::with_vertices(8);
    for v in 0..4 {
        s.add_edge(v, (v + 1) % 4, Right).unwrap();
    }
    for v in 0..4 {
        s.add_edge(4 + v, 4 + (v + 1) % 4, Right).unwrap();
    }
    s.add_edge(0, 4, Down).unwrap();
    s.add_edge(2, 6, Down).unwrap();
    s.finish_with(Anchors { outer: 1, central: 8, reference: 0 }).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_satisfy_conditions() {
        for rep in [ring4(), spiral4(), square(), theta(), ring_with_pendant(), two_rings(), ring(7)] {
            assert!(rep.check_conditions().is_empty(), "{:?}", rep.check_conditions());
        }
    }

    #[test]
    fn spiral_angles_match_listing() {
        let rep = spiral4();
        let got: Vec<u16> = [0, 2, 4, 6, 1, 7, 5, 3].iter().map(|&d| rep.angle(d)).collect();
        assert_eq!(got, vec![90, 180, 270, 180, 180, 90, 180, 270]);
    }
}
