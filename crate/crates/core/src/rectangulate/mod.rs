//! Augmentation of valid representations until every face is a rectangle.
//!
//! A port is a reflex corner of a face followed by two right turns. Its
//! candidates are the face edges reached with net rotation 2; augmenting
//! with a candidate subdivides it and joins the port to the new vertex by an
//! edge that continues the port's entering edge straight on.

pub mod two_phase;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{edge_of, DartId, EdgeId, FaceId, VertexId};
use crate::rep::{Direction, FaceKind, OrthoRadialRep, RepError};
use crate::sketch::{Anchors, Sketch, SketchError};
use crate::transform::{central_labels, flip, normalize, HelperRole, Lineage, TransformError, VertexOrigin};
use crate::validity::{decreasing_labeling, find_decreasing, is_valid, Search, ValidityError, Verdict};

pub use two_phase::{lies_on_right_cycle, resolve_port_two_phase, KStructure, TwoPhaseReport};

/// Provenance of every vertex and edge of a rectangulated representation.
pub type AugmentMap = Lineage;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RectError {
    #[error("input representation is not valid ({0:?})")]
    NotValid(Verdict),
    #[error("dart {0} is not a candidate of the port")]
    NotACandidate(DartId),
    #[error("port at vertex {0} has no candidates")]
    NoCandidates(VertexId),
    #[error("face {0} is not a rectangle but has no port")]
    NoPort(FaceId),
    #[error("gave up at the deadline")]
    Deadline,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(&'static str),
    #[error(transparent)]
    Validity(#[from] ValidityError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Sketch(#[from] SketchError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Naive,
    Binary,
    TwoPhase,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Mode::Naive),
            "binary" => Ok(Mode::Binary),
            "two_phase" | "two-phase" => Ok(Mode::TwoPhase),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Naive => "naive",
            Mode::Binary => "binary",
            Mode::TwoPhase => "two_phase",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PortKind {
    Vertical,
    Horizontal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Port {
    pub vertex: VertexId,
    pub face: FaceId,
    pub kind: PortKind,
    /// Dart of the face entering the port.
    pub entry: DartId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateList {
    pub port: Port,
    pub edges: Vec<DartId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    pub port: VertexId,
    pub target: DartId,
    pub new_vertex: VertexId,
    /// Dart from the port to the new vertex.
    pub new_edge: DartId,
    pub rep: OrthoRadialRep,
}

/// Outcome of the path test between two consecutive candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    /// Join the port directly to an existing vertex.
    Insert(VertexId),
    Augment(DartId),
}

fn dir_of(rep: &OrthoRadialRep, d: DartId) -> Result<Direction, RepError> {
    Ok(rep.directions()?[d])
}

/// Turn at the head of each dart of a face walk.
fn face_turns(rep: &OrthoRadialRep, f: FaceId) -> Vec<i32> {
    rep.graph().face(f).iter().map(|&d| 2 - rep.quarter(d)).collect()
}

/// Rectangle test: a regular face turns right exactly four times and never
/// left; the outer and central faces do not turn at all.
pub fn is_rectangle(rep: &OrthoRadialRep, f: FaceId) -> bool {
    let turns = face_turns(rep, f);
    match rep.face_kind(f) {
        FaceKind::Regular => turns.iter().all(|&t| t == 0 || t == 1) && turns.iter().filter(|&&t| t == 1).count() == 4,
        _ => turns.iter().all(|&t| t == 0),
    }
}

pub fn is_rectangulated(rep: &OrthoRadialRep) -> bool {
    (0..rep.graph().face_count()).all(|f| is_rectangle(rep, f))
}

/// Reflex corners counted by the direction of the entering dart:
/// `(horizontal, vertical)`.
pub fn reflex_counts(rep: &OrthoRadialRep) -> Result<(usize, usize), RepError> {
    let dirs = rep.directions()?;
    let (mut h, mut v) = (0, 0);
    for (d, dir) in dirs.iter().enumerate() {
        if rep.quarter(d) == 3 {
            if dir.is_horizontal() {
                h += 1;
            } else {
                v += 1;
            }
        }
    }
    Ok((h, v))
}

/// First vertex of `f`, in face order, whose turn is left and whose next two
/// non-straight turns are right.
pub fn find_port(rep: &OrthoRadialRep, f: FaceId) -> Option<Port> {
    let walk = rep.graph().face(f);
    let turns = face_turns(rep, f);
    let bends: Vec<usize> = (0..walk.len()).filter(|&i| turns[i] != 0).collect();
    let m = bends.len();
    if m < 3 {
        return None;
    }
    (0..m)
        .find(|&j| turns[bends[j]] == -1 && turns[bends[(j + 1) % m]] == 1 && turns[bends[(j + 2) % m]] == 1)
        .map(|j| {
            let entry = walk[bends[j]];
            let kind = match rep.directions().map(|d| d[entry].is_vertical()) {
                Ok(true) => PortKind::Vertical,
                _ => PortKind::Horizontal,
            };
            Port {
                vertex: rep.graph().head(entry),
                face: f,
                kind,
                entry,
            }
        })
}

/// Port of the first face, by face id, that has one.
pub fn next_port(rep: &OrthoRadialRep) -> Result<Option<Port>, RectError> {
    for f in 0..rep.graph().face_count() {
        if is_rectangle(rep, f) {
            continue;
        }
        return find_port(rep, f).map(Some).ok_or(RectError::NoPort(f));
    }
    Ok(None)
}

pub fn candidates(rep: &OrthoRadialRep, port: &Port) -> Result<CandidateList, RectError> {
    let walk = rep.graph().face(port.face);
    let k = walk.len();
    let i0 = walk
        .iter()
        .position(|&d| d == port.entry)
        .ok_or(RectError::PreconditionUnmet("entry dart not on the port face"))?;
    let mut edges = Vec::new();
    let mut c = 0i32;
    for s in 2..=k {
        let prev = walk[(i0 + s - 1) % k];
        c += 2 - rep.quarter(prev);
        if c == 2 {
            edges.push(walk[(i0 + s) % k]);
        }
    }
    if edges.is_empty() {
        return Err(RectError::NoCandidates(port.vertex));
    }
    Ok(CandidateList { port: *port, edges })
}

/// A representation together with its provenance.
#[derive(Debug, Clone)]
pub(crate) struct Work {
    pub rep: OrthoRadialRep,
    pub lin: Lineage,
}

/// Record of one edge insertion, for callers tracking regions.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Inserted {
    pub z: VertexId,
    pub uz: DartId,
    /// Edge that was split and the edge split off it.
    pub split: Option<(EdgeId, EdgeId)>,
}

pub(crate) fn split_in(s: &mut Sketch, lin: &mut Lineage, d: DartId, role: HelperRole) -> Result<(VertexId, EdgeId), RectError> {
    let e = edge_of(d);
    let (z, e2) = s.split_edge(e)?;
    lin.record_split(e, z, e2, role);
    Ok((z, e2))
}

impl Work {
    pub fn new(rep: OrthoRadialRep, lin: Lineage) -> Self {
        Work { rep, lin }
    }

    /// Joins `u` to the head of a split of `target`, or to an existing
    /// vertex, by an edge pointing in `dir`.
    pub fn insert(&self, u: VertexId, target: Resolution, dir: Direction) -> Result<(Work, Inserted), RectError> {
        let mut s = Sketch::from_rep(&self.rep)?;
        let mut lin = self.lin.clone();
        let (z, split) = match target {
            Resolution::Augment(vw) => {
                let (z, e2) = split_in(&mut s, &mut lin, vw, HelperRole::Augment)?;
                (z, Some((edge_of(vw), e2)))
            }
            Resolution::Insert(x) => (x, None),
        };
        // Joining two adjacent vertices again would double an edge, so the
        // new edge gets a midpoint. Candidates ending at u itself occur in
        // faces winding around the cylinder.
        let g = self.rep.graph();
        let adjacent = match target {
            Resolution::Augment(vw) => g.tail(vw) == u || g.head(vw) == u,
            Resolution::Insert(x) => g.dart_between(u, x).is_some(),
        };
        let mid = if adjacent {
            let m = s.add_vertex();
            lin.push_vertex(m, VertexOrigin::Helper { role: HelperRole::Augment });
            m
        } else {
            z
        };
        let e = s.add_edge(u, mid, dir)?;
        lin.push_edge(e, None);
        if adjacent {
            let e2 = s.add_edge(mid, z, dir)?;
            lin.push_edge(e2, None);
        }
        let rep = s.finish()?;
        Ok((Work { rep, lin }, Inserted { z, uz: 2 * e, split }))
    }
}

fn check_candidate(rep: &OrthoRadialRep, port: &Port, vw: DartId) -> Result<(), RectError> {
    if candidates(rep, port)?.edges.contains(&vw) {
        Ok(())
    } else {
        Err(RectError::NotACandidate(vw))
    }
}

pub fn augment(rep: &OrthoRadialRep, port: &Port, vw: DartId) -> Result<Augmentation, RectError> {
    check_candidate(rep, port, vw)?;
    let w = Work::new(rep.clone(), Lineage::identity(rep));
    let dir = dir_of(rep, port.entry)?;
    let (out, ins) = w.insert(port.vertex, Resolution::Augment(vw), dir)?;
    Ok(Augmentation {
        port: port.vertex,
        target: vw,
        new_vertex: ins.z,
        new_edge: ins.uz,
        rep: out.rep,
    })
}

/// Whether the augmentation through `uz` contains a decreasing cycle. Only
/// cycles through `uz` with label 0 need to be considered; when `uz` points
/// left the cylinder is flipped first so that it points right.
pub fn has_decreasing(rep_aug: &OrthoRadialRep, uz: DartId) -> Result<bool, RectError> {
    let dir = dir_of(rep_aug, uz)?;
    let one_search = |r: &OrthoRadialRep| -> bool {
        Search::new(r)
            .run(uz)
            .is_some_and(|c| decreasing_labeling(r, &c).is_some())
    };
    match dir {
        Direction::Right => Ok(one_search(rep_aug)),
        Direction::Left => match flip(rep_aug) {
            Ok(flipped) => Ok(one_search(&flipped)),
            // The flip needs a central boundary with a label-0 edge and both
            // signs; without it fall back to the full search.
            Err(TransformError::CentralBoundaryMonotone) | Err(TransformError::OuterIsCentral) => {
                Ok(find_decreasing(rep_aug).is_some())
            }
            Err(e) => Err(e.into()),
        },
        _ => Err(RectError::PreconditionUnmet("augmentation edge is vertical")),
    }
}

// First vertex of the longest path of darts pointing `dir` that ends at
// `u`; none if `u` has no such incoming dart or the path closes up.
fn straight_start(rep: &OrthoRadialRep, dirs: &[Direction], u: VertexId, dir: Direction) -> Option<VertexId> {
    let g = rep.graph();
    let back = dir.reversed();
    let mut x = u;
    for _ in 0..g.vertex_count() {
        match g.rotation(x).iter().find(|&&d| dirs[d] == back) {
            Some(&d) => x = g.head(d),
            None => return (x != u).then_some(x),
        }
        if x == u {
            return None;
        }
    }
    None
}

/// Decides between two consecutive candidates `e_i` (decreasing) and
/// `e_next` (not decreasing). If the longest straight path in the direction
/// of the augmentation edge that ends at the port starts at the lower end of
/// `e_i` or the upper end of `e_next`, the port is joined to that vertex;
/// otherwise `e_next` is used.
pub fn horizontal_path_resolution(
    rep: &OrthoRadialRep,
    port: &Port,
    e_i: DartId,
    e_next: DartId,
) -> Result<Resolution, RectError> {
    if port.kind != PortKind::Horizontal {
        return Err(RectError::PreconditionUnmet("path resolution needs a horizontal port"));
    }
    let g = rep.graph();
    let dirs = rep.directions()?;
    let h = dirs[port.entry];
    let start = straight_start(rep, &dirs, port.vertex, h);
    for x in [g.head(e_i), g.tail(e_next)] {
        if start == Some(x) {
            return Ok(Resolution::Insert(x));
        }
    }
    Ok(Resolution::Augment(e_next))
}

/// Straight path from the upper end of the first candidate to the port.
/// In faces winding around the cylinder the port's ray can meet that vertex,
/// and then no candidate works.
fn before_first(rep: &OrthoRadialRep, port: &Port, cands: &[DartId]) -> Result<Option<Resolution>, RectError> {
    end_path(rep, port, rep.graph().tail(cands[0]))
}

/// The same for the lower end of the last candidate.
fn after_last(rep: &OrthoRadialRep, port: &Port, cands: &[DartId]) -> Result<Option<Resolution>, RectError> {
    end_path(rep, port, rep.graph().head(cands[cands.len() - 1]))
}

fn end_path(rep: &OrthoRadialRep, port: &Port, x: VertexId) -> Result<Option<Resolution>, RectError> {
    let dirs = rep.directions()?;
    let h = dirs[port.entry];
    Ok((straight_start(rep, &dirs, port.vertex, h) == Some(x)).then_some(Resolution::Insert(x)))
}

fn decreasing_after(work: &Work, port: &Port, vw: DartId, dir: Direction) -> Result<(Work, Inserted, bool), RectError> {
    let (aug, ins) = work.insert(port.vertex, Resolution::Augment(vw), dir)?;
    let dec = has_decreasing(&aug.rep, ins.uz)?;
    Ok((aug, ins, dec))
}

pub(crate) fn apply_resolution(work: &Work, port: &Port, res: Resolution) -> Result<(Work, Inserted), RectError> {
    let dir = dir_of(&work.rep, port.entry)?;
    work.insert(port.vertex, res, dir)
}

pub(crate) fn binary_step(work: &Work, port: &Port) -> Result<(Work, Inserted), RectError> {
    let dir = dir_of(&work.rep, port.entry)?;
    let cands = candidates(&work.rep, port)?.edges;
    if port.kind == PortKind::Vertical {
        return work.insert(port.vertex, Resolution::Augment(cands[0]), dir);
    }
    if let Some(res) = before_first(&work.rep, port, &cands)? {
        return apply_resolution(work, port, res);
    }
    let (first, ins, dec) = decreasing_after(work, port, cands[0], dir)?;
    if !dec {
        return Ok((first, ins));
    }
    let last = cands.len() - 1;
    if last == 0 || decreasing_after(work, port, cands[last], dir)?.2 {
        let res = after_last(&work.rep, port, &cands)?
            .ok_or(RectError::PreconditionUnmet("last candidate produces a decreasing cycle"))?;
        return apply_resolution(work, port, res);
    }
    // Invariant: augmenting with cands[i] is decreasing, with cands[j] not.
    let (mut i, mut j) = (0, last);
    while j > i + 1 {
        let m = (i + j) / 2;
        if decreasing_after(work, port, cands[m], dir)?.2 {
            i = m;
        } else {
            j = m;
        }
    }
    let res = horizontal_path_resolution(&work.rep, port, cands[i], cands[j])?;
    apply_resolution(work, port, res)
}

/// Valid augmentation for a horizontal port by binary search over the
/// candidates.
pub fn resolve_port_binary(rep: &OrthoRadialRep, port: &Port) -> Result<OrthoRadialRep, RectError> {
    let w = Work::new(rep.clone(), Lineage::identity(rep));
    Ok(binary_step(&w, port)?.0.rep)
}

/// Tests candidates in order with full validity checks.
pub(crate) fn naive_step(work: &Work, port: &Port) -> Result<(Work, Inserted), RectError> {
    let dir = dir_of(&work.rep, port.entry)?;
    let cands = candidates(&work.rep, port)?.edges;
    if port.kind == PortKind::Horizontal {
        if let Some(res) = before_first(&work.rep, port, &cands)? {
            return apply_resolution(work, port, res);
        }
    }
    let mut prev_decreasing = false;
    for (i, &vw) in cands.iter().enumerate() {
        let (aug, ins) = work.insert(port.vertex, Resolution::Augment(vw), dir)?;
        match is_valid(&aug.rep)?.verdict {
            Verdict::Valid => return Ok((aug, ins)),
            Verdict::Decreasing => prev_decreasing = true,
            Verdict::Increasing if prev_decreasing && port.kind == PortKind::Horizontal => {
                let res = horizontal_path_resolution(&work.rep, port, cands[i - 1], vw)?;
                return apply_resolution(work, port, res);
            }
            Verdict::Increasing => {
                return Err(RectError::PreconditionUnmet("first tested candidate is increasing"))
            }
        }
    }
    match after_last(&work.rep, port, &cands)? {
        Some(res) if port.kind == PortKind::Horizontal => apply_resolution(work, port, res),
        _ => Err(RectError::PreconditionUnmet("no candidate yields a valid augmentation")),
    }
}

// Splits `on` and hangs an all-right triangle off the midpoint by a stem
// pointing `stem`. Returns the sketch, lineage and the first ring edge.
fn hang_ring(work: &Work, on: DartId, stem: Direction) -> Result<(Sketch, Lineage, EdgeId), RectError> {
    let mut s = Sketch::from_rep(&work.rep)?;
    let mut lin = work.lin.clone();
    let (m, _) = split_in(&mut s, &mut lin, on, HelperRole::Ring)?;
    let ring: Vec<VertexId> = (0..3)
        .map(|_| {
            let x = s.add_vertex();
            lin.push_vertex(x, VertexOrigin::Helper { role: HelperRole::Ring });
            x
        })
        .collect();
    let mut edge = |s: &mut Sketch, a: VertexId, b: VertexId, dir: Direction| -> Result<EdgeId, RectError> {
        let e = s.add_edge(a, b, dir)?;
        lin.push_edge(e, None);
        Ok(e)
    };
    edge(&mut s, m, ring[0], stem)?;
    let first = edge(&mut s, ring[0], ring[1], Direction::Right)?;
    edge(&mut s, ring[1], ring[2], Direction::Right)?;
    edge(&mut s, ring[2], ring[0], Direction::Right)?;
    Ok((s, lin, first))
}

/// Encloses the drawing in a ring hung above the reference edge. The ring
/// carries label 0 and becomes the turnless outer face.
fn add_outer_ring(work: &Work) -> Result<Work, RectError> {
    let rep = &work.rep;
    let central = rep.graph().face(rep.central())[0];
    let (s, lin, top) = hang_ring(work, rep.reference(), Direction::Up)?;
    let anchors = Anchors {
        outer: 2 * top + 1,
        central,
        reference: 2 * top,
    };
    Ok(Work { rep: s.finish_with(anchors)?, lin })
}

/// Puts a ring inside the central face, hung below a right-pointing edge
/// of label 0, so that the central face becomes turnless.
fn add_inner_ring(work: &Work) -> Result<Work, RectError> {
    let rep = &work.rep;
    let g = rep.graph();
    let dirs = rep.directions()?;
    let walk = g.face(rep.central());
    let labels = central_labels(rep).ok_or(RectError::PreconditionUnmet("central face has no labelling"))?;
    let on = walk
        .iter()
        .zip(&labels)
        .find(|&(&d, &l)| l == 0 && dirs[d] == Direction::Right)
        .map(|(&d, _)| d)
        .ok_or(RectError::PreconditionUnmet("central face boundary has no edge of label 0"))?;
    let outer = g.face(rep.outer())[0];
    let reference = rep.reference();
    let (s, lin, bottom) = hang_ring(work, on, Direction::Down)?;
    let anchors = Anchors {
        outer,
        central: 2 * bottom,
        reference,
    };
    Ok(Work { rep: s.finish_with(anchors)?, lin })
}

/// Removes degree-1 vertices and makes the outer and central faces
/// turnless by adding rings, so that every port lies in a regular face.
pub fn prepare(rep: &OrthoRadialRep) -> Result<(OrthoRadialRep, Lineage), RectError> {
    let (norm, lin) = normalize(rep)?;
    let mut work = Work::new(norm, lin);
    if work.rep.outer() == work.rep.central() || !is_rectangle(&work.rep, work.rep.outer()) {
        work = add_outer_ring(&work)?;
    }
    if !is_rectangle(&work.rep, work.rep.central()) {
        work = add_inner_ring(&work)?;
    }
    Ok((work.rep, work.lin))
}

/// Augments a valid representation until every face is a rectangle.
/// Degree-1 vertices are replaced first; the map traces every vertex and
/// edge of the result back to the input.
pub fn rectangulate(rep: &OrthoRadialRep, mode: Mode) -> Result<(OrthoRadialRep, AugmentMap), RectError> {
    rectangulate_until(rep, mode, None)
}

/// Like `rectangulate`, but stops with `RectError::Deadline` once
/// `deadline` has passed. The clock is read between ports.
pub fn rectangulate_until(
    rep: &OrthoRadialRep,
    mode: Mode,
    deadline: Option<Instant>,
) -> Result<(OrthoRadialRep, AugmentMap), RectError> {
    let report = is_valid(rep)?;
    if !report.is_valid() {
        return Err(RectError::NotValid(report.verdict));
    }
    let (rep, lin) = prepare(rep)?;
    let mut work = Work::new(rep, lin);
    while let Some(port) = next_port(&work.rep)? {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(RectError::Deadline);
        }
        work = match (mode, port.kind) {
            (Mode::Naive, _) => naive_step(&work, &port)?.0,
            (Mode::TwoPhase, PortKind::Horizontal) => two_phase::two_phase_step(&work, &port)?.0,
            _ => binary_step(&work, &port)?.0,
        };
    }
    Ok((work.rep, work.lin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::{random_instance, InstanceKind};

    #[test]
    fn ring_is_already_rectangulated() {
        let rep = fixtures::ring4();
        assert!(is_rectangulated(&rep));
        assert_eq!(next_port(&rep), Ok(None));
        let (out, map) = rectangulate(&rep, Mode::TwoPhase).unwrap();
        assert_eq!(out, rep);
        assert!(map.is_identity());
    }

    #[test]
    fn square_gets_two_rings() {
        let (out, map) = rectangulate(&fixtures::square(), Mode::Binary).unwrap();
        assert!(is_rectangulated(&out));
        assert!(is_valid(&out).unwrap().is_valid());
        let ring = map.vertices.iter().filter(|o| **o == VertexOrigin::Helper { role: HelperRole::Ring });
        assert!(ring.count() >= 6);
    }

    #[test]
    fn candidates_point_clockwise_of_the_port() {
        for seed in 0..40 {
            let rep = random_instance(10, seed, InstanceKind::Valid).unwrap();
            let (rep, _) = prepare(&rep).unwrap();
            let dirs = rep.directions().unwrap();
            let Ok(Some(port)) = next_port(&rep) else { continue };
            for vw in candidates(&rep, &port).unwrap().edges {
                assert_eq!(dirs[vw], dirs[port.entry].turned(1));
            }
        }
    }

    #[test]
    fn augmentation_removes_one_reflex_corner() {
        for seed in 0..40 {
            let rep = random_instance(10, seed, InstanceKind::Valid).unwrap();
            let (rep, _) = prepare(&rep).unwrap();
            let Ok(Some(port)) = next_port(&rep) else { continue };
            let before = reflex_counts(&rep).unwrap();
            let first = candidates(&rep, &port).unwrap().edges[0];
            let aug = augment(&rep, &port, first).unwrap();
            assert!(aug.rep.check_conditions().is_empty());
            let after = reflex_counts(&aug.rep).unwrap();
            assert_eq!(after.0 + after.1 + 1, before.0 + before.1, "seed {seed}");
        }
    }

    #[test]
    fn all_modes_rectangulate_small_instances() {
        for seed in 0..60 {
            let rep = random_instance(9, seed, InstanceKind::Valid).unwrap();
            for mode in [Mode::Naive, Mode::Binary, Mode::TwoPhase] {
                let (out, map) = rectangulate(&rep, mode).unwrap_or_else(|e| panic!("seed {seed} {mode}: {e}"));
                assert!(out.check_conditions().is_empty());
                assert!(is_rectangulated(&out), "seed {seed} {mode}");
                assert!(is_valid(&out).unwrap().is_valid(), "seed {seed} {mode}");
                assert_eq!(map.vertices.len(), out.graph().vertex_count());
                assert_eq!(map.edges.len(), out.graph().edge_count());
            }
        }
    }

    #[test]
    fn invalid_input_is_rejected() {
        assert_eq!(
            rectangulate(&fixtures::spiral4(), Mode::Binary),
            Err(RectError::NotValid(Verdict::Decreasing))
        );
    }
}
