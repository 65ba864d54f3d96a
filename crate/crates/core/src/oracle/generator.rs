//! Random instances read off actual drawings on a cylinder grid.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{twin, DartId, EmbeddedGraph, VertexId};
use crate::layout::GridDrawing;
use crate::rep::{Direction, OrthoRadialRep};
use crate::sketch::{Anchors, Sketch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Valid,
    Mutated,
}

impl InstanceKind {
    fn tag(self) -> u64 {
        match self {
            InstanceKind::Valid => 0x56_41_4c_49_44,
            InstanceKind::Mutated => 0x4d_55_54_41_54_45,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerationError {
    #[error("instances need at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("gave up generating an instance with n = {n}, seed = {seed}")]
    Failed { n: usize, seed: u64 },
}

const ATTEMPTS: usize = 64;

fn rng_for(n: usize, seed: u64, tag: u64) -> ChaCha8Rng {
    let mix = seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add((n as u64).rotate_left(32))
        ^ tag;
    ChaCha8Rng::seed_from_u64(mix)
}

/// A representation with `n` vertices; `Valid` ones come with a drawing,
/// `Mutated` ones have a few angles shuffled between faces.
pub fn random_instance(n: usize, seed: u64, kind: InstanceKind) -> Result<OrthoRadialRep, GenerationError> {
    if kind == InstanceKind::Valid {
        return random_drawn_instance(n, seed).map(|(rep, _)| rep);
    }
    if n < 3 {
        return Err(GenerationError::TooSmall(n));
    }
    // Trees have a single face and admit no mutation, so redraw as needed.
    let mut rng = rng_for(n, seed, kind.tag());
    for _ in 0..ATTEMPTS {
        let Some((rep, _)) = attempt(n, &mut rng) else {
            continue;
        };
        for _ in 0..4 {
            if let Some(m) = mutate(&rep, &mut rng) {
                return Ok(m);
            }
        }
    }
    Err(GenerationError::Failed { n, seed })
}

/// A valid representation together with the drawing it was read from.
pub fn random_drawn_instance(n: usize, seed: u64) -> Result<(OrthoRadialRep, GridDrawing), GenerationError> {
    if n < 3 {
        return Err(GenerationError::TooSmall(n));
    }
    let mut rng = rng_for(n, seed, InstanceKind::Valid.tag());
    for _ in 0..ATTEMPTS {
        if let Some(found) = attempt(n, &mut rng) {
            return Ok(found);
        }
    }
    Err(GenerationError::Failed { n, seed })
}

struct Grid {
    width: usize,
    alive: Vec<bool>,
    // Edge to the right and edge downwards of every cell.
    right: Vec<bool>,
    down: Vec<bool>,
}

impl Grid {
    fn id(&self, c: usize, r: usize) -> usize {
        r * self.width + c
    }

    fn right_of(&self, v: usize) -> usize {
        let (c, r) = (v % self.width, v / self.width);
        self.id((c + 1) % self.width, r)
    }

    fn neighbours(&self, v: usize, out: &mut Vec<usize>) {
        out.clear();
        let (c, r) = (v % self.width, v / self.width);
        let left = self.id((c + self.width - 1) % self.width, r);
        if self.right[v] {
            out.push(self.right_of(v));
        }
        if self.right[left] {
            out.push(left);
        }
        if self.down[v] {
            out.push(self.id(c, r + 1));
        }
        if r > 0 && self.down[self.id(c, r - 1)] {
            out.push(self.id(c, r - 1));
        }
    }

    fn connected(&self) -> bool {
        let Some(start) = self.alive.iter().position(|&a| a) else {
            return false;
        };
        let total = self.alive.iter().filter(|&&a| a).count();
        let mut seen = vec![false; self.alive.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        let mut nb = Vec::with_capacity(4);
        while let Some(v) = queue.pop_front() {
            self.neighbours(v, &mut nb);
            for &w in &nb {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == total
    }

    fn kill(&mut self, v: usize) -> [(usize, bool); 4] {
        let (c, r) = (v % self.width, v / self.width);
        let left = self.id((c + self.width - 1) % self.width, r);
        let up = if r > 0 { self.id(c, r - 1) } else { v };
        let saved = [
            (v, self.right[v]),
            (left, self.right[left]),
            (v, self.down[v]),
            (up, if r > 0 { self.down[up] } else { false }),
        ];
        self.alive[v] = false;
        self.right[v] = false;
        self.right[left] = false;
        self.down[v] = false;
        if r > 0 {
            self.down[up] = false;
        }
        saved
    }

    fn revive(&mut self, v: usize, saved: [(usize, bool); 4]) {
        self.alive[v] = true;
        self.right[saved[0].0] = saved[0].1;
        self.right[saved[1].0] = saved[1].1;
        self.down[saved[2].0] = saved[2].1;
        if v / self.width > 0 {
            self.down[saved[3].0] = saved[3].1;
        }
    }
}

fn attempt(n: usize, rng: &mut ChaCha8Rng) -> Option<(OrthoRadialRep, GridDrawing)> {
    let cells = n + rng.gen_range(0..=n / 2 + 2);
    let max_w = ((2.0 * (cells as f64).sqrt()) as usize).max(3);
    let width = rng.gen_range(3..=max_w);
    let height = cells.div_ceil(width);
    let total = width * height;
    let mut grid = Grid {
        width,
        alive: vec![true; total],
        right: vec![true; total],
        down: (0..total).map(|v| v / width + 1 < height).collect(),
    };
    let mut alive = total;
    let mut budget = 20 * total;
    while alive > n {
        if budget == 0 {
            return None;
        }
        budget -= 1;
        let v = rng.gen_range(0..total);
        if !grid.alive[v] {
            continue;
        }
        let saved = grid.kill(v);
        if grid.connected() {
            alive -= 1;
        } else {
            grid.revive(v, saved);
        }
    }
    let p: f64 = rng.gen_range(0.0..0.45);
    let mut edges: Vec<(usize, bool)> = (0..total)
        .flat_map(|v| [(v, true), (v, false)])
        .filter(|&(v, horizontal)| if horizontal { grid.right[v] } else { grid.down[v] })
        .collect();
    edges.shuffle(rng);
    for (v, horizontal) in edges {
        if !rng.gen_bool(p) {
            continue;
        }
        let slot = if horizontal { &mut grid.right[v] } else { &mut grid.down[v] };
        *slot = false;
        if !grid.connected() {
            let slot = if horizontal { &mut grid.right[v] } else { &mut grid.down[v] };
            *slot = true;
        }
    }
    read_off(&grid, rng)
}

fn read_off(grid: &Grid, rng: &mut ChaCha8Rng) -> Option<(OrthoRadialRep, GridDrawing)> {
    let cells: Vec<usize> = (0..grid.alive.len()).filter(|&v| grid.alive[v]).collect();
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.shuffle(rng);
    let mut index = vec![usize::MAX; grid.alive.len()];
    for (i, &v) in cells.iter().enumerate() {
        index[v] = order[i];
    }
    let mut coords = vec![(0i64, 0i64); cells.len()];
    for &v in &cells {
        coords[index[v]] = ((v % grid.width) as i64, (v / grid.width + 1) as i64);
    }
    let mut edges: Vec<(usize, usize, Direction)> = Vec::new();
    for &v in &cells {
        if grid.right[v] {
            edges.push((index[v], index[grid.right_of(v)], Direction::Right));
        }
        if grid.down[v] {
            edges.push((index[v], index[v + grid.width], Direction::Down));
        }
    }
    edges.shuffle(rng);
    let mut sketch = Sketch::with_vertices(cells.len());
    let mut spans = Vec::with_capacity(edges.len());
    for (u, v, dir) in edges {
        let flip = rng.gen_bool(0.5);
        let (a, b, d) = if flip { (v, u, dir.reversed()) } else { (u, v, dir) };
        sketch.add_edge(a, b, d).ok()?;
        spans.push(match d {
            Direction::Right => Some(1),
            Direction::Left => Some(-1),
            _ => None,
        });
    }
    let (g, q) = sketch.preview().ok()?;
    let top = (0..cells.len()).min_by_key(|&v| coords[v].1)?;
    let bottom = (0..cells.len()).max_by_key(|&v| coords[v].1)?;
    let outer_dart = corner_of(&g, &q, &sketch, top, Direction::Up)?;
    let central_dart = corner_of(&g, &q, &sketch, bottom, Direction::Down)?;
    let outer = g.face_of(outer_dart);
    // The outer face can wind down around the cylinder; a reference deep in
    // such a bay would shift every label by a full turn. Edges in the highest
    // row that has any are safe.
    let mut refs: Vec<DartId> = (0..g.dart_count())
        .filter(|&d| sketch.dir(d) == Direction::Right && g.face_of(twin(d)) == outer)
        .collect();
    let top_row = refs.iter().map(|&d| coords[g.tail(d)].1).min()?;
    refs.retain(|&d| coords[g.tail(d)].1 == top_row);
    let reference = *refs.choose(rng)?;
    let rep = sketch
        .finish_with(Anchors {
            outer: outer_dart,
            central: central_dart,
            reference,
        })
        .ok()?;
    let drawing = GridDrawing {
        width: grid.width as i64,
        coords,
        spans,
    };
    Some((rep, drawing))
}

fn corner_of(g: &EmbeddedGraph, q: &[u8], sketch: &Sketch, v: VertexId, dir: Direction) -> Option<DartId> {
    g.rotation(v).iter().map(|&o| twin(o)).find(|&x| {
        let s = g.next_in_face(x);
        let off = (dir.index() - sketch.dir(s).index()).rem_euclid(4);
        off > 0 && off < q[x] as i64
    })
}

// Moves 90 degrees of corner angle from face f1 to face f2 at one vertex
// and back again along a chain of faces at other vertices, so every
// vertex sum and face rotation is untouched.
fn mutate(rep: &OrthoRadialRep, rng: &mut ChaCha8Rng) -> Option<OrthoRadialRep> {
    let g = rep.graph();
    let mut angles: Vec<u16> = (0..g.dart_count()).map(|d| rep.angle(d)).collect();
    let rounds = rng.gen_range(1..=3);
    let mut done = 0;
    for _ in 0..rounds * 16 {
        if done == rounds {
            break;
        }
        let mut moves = transfers(g, &angles);
        if moves.is_empty() {
            break;
        }
        moves.shuffle(rng);
        let first = moves[0];
        let Some(chain) = face_chain(g, &moves, first) else {
            continue;
        };
        for (give, take) in std::iter::once(first).chain(chain).map(|t| (t.give, t.take)) {
            angles[give] -= 90;
            angles[take] += 90;
        }
        done += 1;
    }
    if done == 0 {
        return None;
    }
    let m = OrthoRadialRep::new(g.clone(), &angles, rep.outer(), rep.central(), rep.reference()).ok()?;
    if m.check_conditions().is_empty() && m.directions().is_ok() {
        Some(m)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy)]
struct Transfer {
    vertex: VertexId,
    // Corner losing 90 degrees, then the corner gaining them.
    give: DartId,
    take: DartId,
    from: usize,
    to: usize,
}

fn transfers(g: &EmbeddedGraph, angles: &[u16]) -> Vec<Transfer> {
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        // Incoming darts own the corners at their head.
        let corners: Vec<DartId> = g.rotation(v).iter().map(|&o| twin(o)).collect();
        for &give in &corners {
            for &take in &corners {
                let (from, to) = (g.face_of(give), g.face_of(take));
                if give != take && from != to && angles[give] >= 180 && angles[take] <= 180 {
                    out.push(Transfer { vertex: v, give, take, from, to });
                }
            }
        }
    }
    out
}

// Transfers at distinct vertices leading from `first.to` back to `first.from`.
fn face_chain(g: &EmbeddedGraph, moves: &[Transfer], first: Transfer) -> Option<Vec<Transfer>> {
    let mut via: Vec<Option<usize>> = vec![None; g.face_count()];
    let mut seen = vec![false; g.face_count()];
    seen[first.to] = true;
    let mut queue = VecDeque::from([first.to]);
    while let Some(f) = queue.pop_front() {
        for (i, t) in moves.iter().enumerate() {
            if t.from != f || seen[t.to] || t.vertex == first.vertex {
                continue;
            }
            seen[t.to] = true;
            via[t.to] = Some(i);
            queue.push_back(t.to);
        }
    }
    let mut chain = Vec::new();
    let mut f = first.from;
    while f != first.to {
        let t = moves[via[f]?];
        chain.push(t);
        f = t.from;
    }
    chain.reverse();
    let mut used: Vec<VertexId> = chain.iter().map(|t| t.vertex).collect();
    used.push(first.vertex);
    used.sort_unstable();
    used.dedup();
    (used.len() == chain.len() + 1).then_some(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::check_realization;

    #[test]
    fn drawn_instances_realize_their_drawing() {
        for n in [3, 4, 7, 12, 40] {
            for seed in 0..20 {
                let (rep, dr) = random_drawn_instance(n, seed).unwrap();
                assert_eq!(rep.graph().vertex_count(), n);
                assert!(rep.check_conditions().is_empty());
                assert_eq!(check_realization(&rep, &dr), Ok(()), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = random_instance(10, 7, InstanceKind::Mutated).unwrap();
        let b = random_instance(10, 7, InstanceKind::Mutated).unwrap();
        assert_eq!(a, b);
        assert!(a.check_conditions().is_empty());
    }

    #[test]
    fn tiny_requests_fail() {
        assert_eq!(random_instance(2, 1, InstanceKind::Valid), Err(GenerationError::TooSmall(2)));
    }
}
