//! Essential cycles and their labelings.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{edge_of, twin, DartId, EdgeId, VertexId};
use crate::rep::OrthoRadialRep;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("darts do not form a closed walk without repeated edges")]
    NotACycle,
    #[error("cycle crosses itself at vertex {0}")]
    SelfCrossing(VertexId),
    #[error("cycle is not essential")]
    NotEssential,
    #[error("no path from the reference edge reaches the cycle")]
    Unreachable,
}

/// An essential cycle with one label per dart, `labels[i]` belonging to
/// `cycle[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleLabeling {
    pub cycle: Vec<DartId>,
    pub labels: Vec<i64>,
    /// Elementary path from the head of the reference dart to the cycle.
    pub witness_path: Vec<DartId>,
}

impl CycleLabeling {
    pub fn is_decreasing(&self) -> bool {
        self.labels.iter().all(|&l| l >= 0) && self.labels.iter().any(|&l| l > 0)
    }

    pub fn is_increasing(&self) -> bool {
        self.labels.iter().all(|&l| l <= 0) && self.labels.iter().any(|&l| l < 0)
    }

    pub fn is_monotone(&self) -> bool {
        self.is_decreasing() || self.is_increasing()
    }

    pub fn label_of(&self, d: DartId) -> Option<i64> {
        self.cycle.iter().position(|&x| x == d).map(|i| self.labels[i])
    }

    /// Labels rotated so that the smallest dart id comes first.
    pub fn canonical(&self) -> (Vec<DartId>, Vec<i64>) {
        let k = (0..self.cycle.len()).min_by_key(|&i| self.cycle[i]).unwrap_or(0);
        let mut c = self.cycle.clone();
        let mut l = self.labels.clone();
        c.rotate_left(k);
        l.rotate_left(k);
        (c, l)
    }
}

fn check_closed(rep: &OrthoRadialRep, cycle: &[DartId]) -> Result<(), CycleError> {
    let g = rep.graph();
    if cycle.is_empty() || !g.is_walk(cycle) {
        return Err(CycleError::NotACycle);
    }
    if g.head(*cycle.last().unwrap()) != g.tail(cycle[0]) {
        return Err(CycleError::NotACycle);
    }
    let mut edges: Vec<EdgeId> = cycle.iter().map(|&d| edge_of(d)).collect();
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return Err(CycleError::NotACycle);
    }
    Ok(())
}

// Position of each outgoing dart in the clockwise order at its tail.
fn slot(rep: &OrthoRadialRep, d: DartId) -> usize {
    let r = rep.graph().rotation(rep.graph().tail(d));
    r.iter().position(|&x| x == d).unwrap()
}

/// Whether `x` lies strictly inside the clockwise sweep from `from` to `to`.
fn strictly_between_cw(rep: &OrthoRadialRep, from: DartId, to: DartId, x: DartId) -> bool {
    let deg = rep.graph().degree(rep.graph().tail(from));
    let a = slot(rep, from);
    let off = |d: DartId| (slot(rep, d) + deg - a) % deg;
    let (t, y) = (off(to), off(x));
    y > 0 && y < t
}

fn check_non_crossing(rep: &OrthoRadialRep, cycle: &[DartId]) -> Result<(), CycleError> {
    let g = rep.graph();
    let k = cycle.len();
    // Passes through each vertex as (vertex, reversed entry, exit).
    let mut passes: Vec<(VertexId, DartId, DartId)> = (0..k)
        .map(|i| (g.tail(cycle[i]), twin(cycle[(i + k - 1) % k]), cycle[i]))
        .collect();
    passes.sort_unstable();
    for group in passes.chunk_by(|a, b| a.0 == b.0) {
        for (i, &(v, a1, b1)) in group.iter().enumerate() {
            for &(_, a2, b2) in &group[i + 1..] {
                let s1 = strictly_between_cw(rep, a1, b1, a2);
                let s2 = strictly_between_cw(rep, a1, b1, b2);
                if s1 != s2 {
                    return Err(CycleError::SelfCrossing(v));
                }
            }
        }
    }
    Ok(())
}

/// Whether the closed walk `cycle` separates the central face, lying on
/// its right, from the outer face.
pub fn is_essential(rep: &OrthoRadialRep, cycle: &[DartId]) -> Result<bool, CycleError> {
    check_closed(rep, cycle)?;
    check_non_crossing(rep, cycle)?;
    if rep.outer() == rep.central() {
        return Ok(false);
    }
    // Contractible walks turn by a full rotation; only rotation 0 needs the
    // face search, which also settles the orientation.
    let k = cycle.len();
    let rotation: i32 = (0..k).map(|i| rep.turn(cycle[i], cycle[(i + 1) % k])).sum();
    if rotation != 0 {
        return Ok(false);
    }
    let g = rep.graph();
    let mut cut = vec![false; g.edge_count()];
    for &d in cycle {
        cut[edge_of(d)] = true;
    }
    let mut seen = vec![false; g.face_count()];
    let mut queue = VecDeque::from([rep.central()]);
    seen[rep.central()] = true;
    while let Some(f) = queue.pop_front() {
        for &d in g.face(f) {
            if cut[edge_of(d)] {
                continue;
            }
            let h = g.face_of(twin(d));
            if !seen[h] {
                seen[h] = true;
                queue.push_back(h);
            }
        }
    }
    Ok(!seen[rep.outer()] && seen[g.face_of(cycle[0])])
}

/// Breadth-first path from the head of the reference dart to the first
/// vertex of the cycle it meets. Returns the path and that vertex.
///
/// The search avoids walking straight back over the reference edge and
/// only does so when nothing else reaches the cycle.
pub fn elementary_path(rep: &OrthoRadialRep, cycle: &[DartId]) -> Result<(Vec<DartId>, VertexId), CycleError> {
    let g = rep.graph();
    let mut on_cycle = vec![false; g.vertex_count()];
    for &d in cycle {
        on_cycle[g.tail(d)] = true;
    }
    let s = g.head(rep.reference());
    if on_cycle[s] {
        return Ok((Vec::new(), s));
    }
    for strict in [true, false] {
        if let Some(found) = bfs_to_cycle(rep, &on_cycle, s, strict) {
            return Ok(found);
        }
    }
    Err(CycleError::Unreachable)
}

fn bfs_to_cycle(
    rep: &OrthoRadialRep,
    on_cycle: &[bool],
    s: VertexId,
    strict: bool,
) -> Option<(Vec<DartId>, VertexId)> {
    let g = rep.graph();
    let back = twin(rep.reference());
    let mut via: Vec<Option<DartId>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let mut out = [usize::MAX; 4];
        let rot = g.rotation(v);
        out[..rot.len()].copy_from_slice(rot);
        out.sort_unstable();
        for &d in &out[..rot.len()] {
            let w = g.head(d);
            if seen[w] || (strict && d == back) {
                continue;
            }
            seen[w] = true;
            via[w] = Some(d);
            if on_cycle[w] {
                let mut path = vec![d];
                let mut x = v;
                while let Some(p) = via[x] {
                    path.push(p);
                    x = g.tail(p);
                }
                path.reverse();
                return Some((path, w));
            }
            queue.push_back(w);
        }
    }
    None
}

/// Rotation of a walk that starts with the reference dart. Turning back
/// over the reference edge goes around the far end of that edge on its
/// central side, a right U-turn, rather than the left U-turn a plain
/// reversal stands for.
pub fn prefix_rotation(rep: &OrthoRadialRep, prefix: &[DartId]) -> Option<i64> {
    let mut r = rep.open_rotation(prefix).ok()? as i64;
    if prefix.len() >= 2 && prefix[1] == twin(prefix[0]) {
        r += 4;
    }
    Some(r)
}

/// Index `i` such that the walk `prefix` continues naturally with
/// `walk[i]`. At a vertex visited several times, the pass whose left
/// side holds the arriving dart is chosen.
pub(crate) fn entry_index(rep: &OrthoRadialRep, walk: &[DartId], last: DartId) -> Option<usize> {
    let g = rep.graph();
    let v = g.head(last);
    let k = walk.len();
    let mut candidates = (0..k).filter(|&i| g.tail(walk[i]) == v);
    let first = candidates.next()?;
    let rest: Vec<usize> = candidates.collect();
    if rest.is_empty() {
        return Some(first);
    }
    for i in std::iter::once(first).chain(rest) {
        let d_in = walk[(i + k - 1) % k];
        if d_in == last {
            return Some(i);
        }
        // Left of the pass: clockwise from the reversed entry to the exit.
        let (a, b) = (twin(d_in), walk[i]);
        if strictly_between_cw(rep, a, b, twin(last)) {
            return Some(i);
        }
    }
    None
}

/// Labels of a closed walk given the walk from the reference dart to it.
/// `prefix` starts with the reference dart and ends at a vertex of `walk`.
pub fn label_walk(rep: &OrthoRadialRep, walk: &[DartId], prefix: &[DartId]) -> Option<Vec<i64>> {
    let last = *prefix.last()?;
    let i0 = entry_index(rep, walk, last)?;
    let k = walk.len();
    let base = prefix_rotation(rep, prefix)?;
    let mut labels = vec![0i64; k];
    let mut cur = base + rep.turn(last, walk[i0]) as i64;
    labels[i0] = cur;
    for step in 1..k {
        let i = (i0 + step) % k;
        let p = (i + k - 1) % k;
        cur += rep.turn(walk[p], walk[i]) as i64;
        labels[i] = cur;
    }
    Some(labels)
}

/// Labels of an essential cycle.
pub fn labeling(rep: &OrthoRadialRep, cycle: &[DartId]) -> Result<CycleLabeling, CycleError> {
    if !is_essential(rep, cycle)? {
        return Err(CycleError::NotEssential);
    }
    let (path, _) = elementary_path(rep, cycle)?;
    let mut prefix = Vec::with_capacity(path.len() + 1);
    prefix.push(rep.reference());
    prefix.extend_from_slice(&path);
    let labels = label_walk(rep, cycle, &prefix).ok_or(CycleError::NotACycle)?;
    Ok(CycleLabeling {
        cycle: cycle.to_vec(),
        labels,
        witness_path: path,
    })
}

/// The face walk of a face as a cycle starting at its smallest dart.
pub fn face_cycle(rep: &OrthoRadialRep, f: usize) -> Vec<DartId> {
    rep.graph().face(f).to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ring_cycle_is_essential_with_zero_labels() {
        let rep = fixtures::ring4();
        let c = [0, 2, 4, 6];
        assert_eq!(is_essential(&rep, &c), Ok(true));
        assert_eq!(is_essential(&rep, &[1, 7, 5, 3]), Ok(false));
        let (p, v) = elementary_path(&rep, &c).unwrap();
        assert!(p.is_empty());
        assert_eq!(v, 1);
        let l = labeling(&rep, &c).unwrap();
        assert_eq!(l.labels, vec![0, 0, 0, 0]);
    }

    #[test]
    fn spiral_labels() {
        let rep = fixtures::spiral4();
        let l = labeling(&rep, &[0, 2, 4, 6]).unwrap();
        assert_eq!(l.labels, vec![0, 1, 1, 0]);
        assert!(l.is_decreasing());
    }

    #[test]
    fn regular_face_is_not_essential() {
        let rep = fixtures::square();
        assert_eq!(is_essential(&rep, &[0, 2, 4, 6]), Ok(false));
        let rep = fixtures::theta();
        let g = rep.graph();
        for f in 0..g.face_count() {
            if f != rep.outer() && f != rep.central() {
                assert_eq!(is_essential(&rep, g.face(f)), Ok(false));
            }
        }
    }

    #[test]
    fn rejects_open_walks() {
        let rep = fixtures::ring4();
        assert_eq!(is_essential(&rep, &[0, 2]), Err(CycleError::NotACycle));
        assert_eq!(is_essential(&rep, &[]), Err(CycleError::NotACycle));
        assert_eq!(is_essential(&rep, &[0, 1]), Err(CycleError::NotACycle));
    }

    #[test]
    fn theta_has_path_to_lower_ring() {
        let rep = fixtures::theta();
        // p->m->q->r->p is the lower ring.
        let c = [0, 2, 4, 6];
        assert_eq!(is_essential(&rep, &c), Ok(true));
        let l = labeling(&rep, &c).unwrap();
        assert_eq!(l.labels, vec![0, 0, 0, 0]);
        assert!(!l.witness_path.is_empty());
    }
}
