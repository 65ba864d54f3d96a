//! Two-phase resolution of a horizontal port.
//!
//! The first phase tests candidates in order. When the accepted candidate
//! e_k comes late (k >= 4), the augmentation edge uz is replaced by three
//! paths: R from u to z, T from R up and over to e_1 and B from R up and
//! over to e_{k-1}. The face between T and B holds all intermediate
//! candidates and is rectangulated without any validity test.
//!
//! Directions, with h the direction of uz and turns measured clockwise:
//!
//! | path | edges                                                  |
//! |------|--------------------------------------------------------|
//! | R    | h, h or h+1 (r2 r3), h, h, h                           |
//! | T    | h+3, h, h+1, h (ends on a subdivision of e_1)          |
//! | B    | h+3, h, h+1, h (ends on a subdivision of e_{k-1})      |
//!
//! All corner angles follow from these directions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{
    after_last, before_first, binary_step, candidates, find_port, has_decreasing, horizontal_path_resolution, is_rectangle, reflex_counts,
    split_in, Inserted, Port, PortKind, RectError, Resolution, Work,
};
use crate::graph::{twin, DartId, VertexId};
use crate::rep::{Direction, OrthoRadialRep};
use crate::sketch::Sketch;
use crate::transform::{HelperRole, Lineage, VertexOrigin};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KStructure {
    pub r: [VertexId; 6],
    pub t: [VertexId; 5],
    pub b: [VertexId; 5],
    pub r2r3: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPhaseReport {
    /// Position of the accepted candidate, counting from 1.
    pub k: usize,
    pub kstructure: Option<KStructure>,
    pub intermediates_on_rectangles: bool,
    /// Change in reflex corners entered horizontally and vertically,
    /// relative to the first-phase result.
    pub new_horizontal_reflex: i64,
    pub new_vertical_reflex: i64,
}

/// Whether `uz` lies on a cycle all of whose edges point like `uz`.
pub fn lies_on_right_cycle(rep: &OrthoRadialRep, uz: DartId) -> bool {
    let g = rep.graph();
    let Ok(dirs) = rep.directions() else { return false };
    let h = dirs[uz];
    let mut x = g.head(uz);
    for _ in 0..g.vertex_count() {
        if x == g.tail(uz) {
            return true;
        }
        match g.rotation(x).iter().find(|&&d| dirs[d] == h) {
            Some(&d) => x = g.head(d),
            None => return false,
        }
    }
    false
}

struct PhaseOne {
    k: usize,
    result: Work,
    inserted: Inserted,
    target: Resolution,
    cands: Vec<DartId>,
}

// Sequential candidate tests; the first non-decreasing one is accepted,
// resolved against its predecessor when there is one.
fn phase_one(work: &Work, port: &Port) -> Result<PhaseOne, RectError> {
    let rep = &work.rep;
    let dir = rep.directions()?[port.entry];
    let cands = candidates(rep, port)?.edges;
    let boundary = |target: Option<Resolution>| -> Result<Option<PhaseOne>, RectError> {
        let Some(target) = target else { return Ok(None) };
        let (result, inserted) = work.insert(port.vertex, target, dir)?;
        Ok(Some(PhaseOne {
            k: 1,
            result,
            inserted,
            target,
            cands: cands.clone(),
        }))
    };
    if let Some(one) = boundary(before_first(rep, port, &cands)?)? {
        return Ok(one);
    }
    for (i, &vw) in cands.iter().enumerate() {
        let (aug, ins) = work.insert(port.vertex, Resolution::Augment(vw), dir)?;
        if has_decreasing(&aug.rep, ins.uz)? {
            continue;
        }
        let target = if i == 0 {
            Resolution::Augment(vw)
        } else {
            horizontal_path_resolution(rep, port, cands[i - 1], vw)?
        };
        let (result, inserted) = if target == Resolution::Augment(vw) {
            (aug, ins)
        } else {
            work.insert(port.vertex, target, dir)?
        };
        return Ok(PhaseOne {
            k: i + 1,
            result,
            inserted,
            target,
            cands,
        });
    }
    boundary(after_last(rep, port, &cands)?)?
        .ok_or(RectError::PreconditionUnmet("every candidate produces a decreasing cycle"))
}

fn helper(s: &mut Sketch, lin: &mut Lineage, role: HelperRole) -> VertexId {
    let x = s.add_vertex();
    lin.push_vertex(x, VertexOrigin::Helper { role });
    x
}

fn path(s: &mut Sketch, lin: &mut Lineage, vs: &[VertexId], dirs: &[Direction]) -> Result<Vec<DartId>, RectError> {
    vs.windows(2)
        .zip(dirs)
        .map(|(w, &d)| {
            let e = s.add_edge(w[0], w[1], d)?;
            lin.push_edge(e, None);
            Ok(2 * e)
        })
        .collect()
}

// Keeps dart sets in step with an insertion: pieces of split edges inherit
// their side, and the new edge joins every set containing the face it cut.
fn track(sets: &mut [&mut BTreeSet<DartId>], ins: &Inserted, cut: DartId) {
    for s in sets.iter_mut() {
        if let Some((e, e2)) = ins.split {
            for side in 0..2 {
                if s.contains(&(2 * e + side)) {
                    s.insert(2 * e2 + side);
                }
            }
        }
        if s.contains(&cut) {
            s.insert(ins.uz);
            s.insert(twin(ins.uz));
        }
    }
}

type Step = fn(&Work, &Port) -> Result<(Work, Inserted), RectError>;

// Rectangulates every face containing a dart of `sets[0]`.
fn rectangulate_region(mut work: Work, sets: &mut [&mut BTreeSet<DartId>], step: Step) -> Result<Work, RectError> {
    loop {
        let g = work.rep.graph();
        let faces: BTreeSet<usize> = sets[0].iter().map(|&d| g.face_of(d)).collect();
        let Some(f) = faces.into_iter().find(|&f| !is_rectangle(&work.rep, f)) else {
            return Ok(work);
        };
        let port = find_port(&work.rep, f).ok_or(RectError::NoPort(f))?;
        let (next, ins) = step(&work, &port)?;
        track(sets, &ins, port.entry);
        work = next;
    }
}

// Vertical ports take the first candidate and horizontal ports the last.
fn untested_step(work: &Work, port: &Port) -> Result<(Work, Inserted), RectError> {
    let dir = work.rep.directions()?[port.entry];
    let cands = candidates(&work.rep, port)?.edges;
    let vw = match port.kind {
        PortKind::Vertical => cands[0],
        PortKind::Horizontal => cands[cands.len() - 1],
    };
    work.insert(port.vertex, Resolution::Augment(vw), dir)
}

pub(crate) fn two_phase_step(work: &Work, port: &Port) -> Result<(Work, TwoPhaseReport), RectError> {
    if port.kind != PortKind::Horizontal {
        return Err(RectError::PreconditionUnmet("two-phase resolution needs a horizontal port"));
    }
    let one = phase_one(work, port)?;
    let k = one.k;
    if k < 4 {
        let report = TwoPhaseReport {
            k,
            kstructure: None,
            intermediates_on_rectangles: true,
            new_horizontal_reflex: 0,
            new_vertical_reflex: 0,
        };
        return Ok((one.result, report));
    }
    let h = work.rep.directions()?[port.entry];
    let r2r3 = if lies_on_right_cycle(&one.result.rep, one.inserted.uz) {
        h
    } else {
        h.turned(1)
    };
    let cands = &one.cands;

    // Step 1: the K structure instead of uz.
    let mut s = Sketch::from_rep(&work.rep)?;
    let mut lin = work.lin.clone();
    let z = match one.target {
        Resolution::Augment(d) => split_in(&mut s, &mut lin, d, HelperRole::KR)?.0,
        Resolution::Insert(x) => x,
    };
    let mut r = [port.vertex; 6];
    for x in &mut r[1..5] {
        *x = helper(&mut s, &mut lin, HelperRole::KR);
    }
    r[5] = z;
    path(&mut s, &mut lin, &r, &[h, r2r3, h, h, h])?;
    let side = [h.turned(3), h, h.turned(1), h];
    let arm = |s: &mut Sketch, lin: &mut Lineage, start: VertexId, on: DartId, role: HelperRole| {
        let mut p = [start; 5];
        for x in &mut p[1..4] {
            *x = helper(s, lin, role);
        }
        p[4] = split_in(s, lin, on, role)?.0;
        let darts = path(s, lin, &p, &side)?;
        Ok::<_, RectError>((p, darts))
    };
    let (t, t_darts) = arm(&mut s, &mut lin, r[3], cands[0], HelperRole::KT)?;
    let (b, _) = arm(&mut s, &mut lin, r[4], cands[k - 2], HelperRole::KB)?;
    let g1 = Work::new(s.finish()?, lin);
    debug_assert!(g1.rep.check_conditions().is_empty());

    // Steps 2 and 3: the face right of T without tests, then the face left
    // of T with the binary method.
    let g = g1.rep.graph();
    let mut f1: BTreeSet<DartId> = g.face(g.face_of(t_darts[0])).iter().copied().collect();
    let mut f2: BTreeSet<DartId> = g.face(g.face_of(twin(t_darts[0]))).iter().copied().collect();
    let g2 = rectangulate_region(g1, &mut [&mut f1, &mut f2], untested_step)?;
    let g3 = rectangulate_region(g2, &mut [&mut f2], binary_step)?;

    let rep3 = &g3.rep;
    let intermediates_on_rectangles = cands[1..k - 2].iter().all(|&vw| {
        g3.lin
            .descendants(vw / 2)
            .into_iter()
            .all(|e| is_rectangle(rep3, rep3.graph().face_of(2 * e + vw % 2)))
    });
    let before = reflex_counts(&one.result.rep)?;
    let after = reflex_counts(rep3)?;
    let report = TwoPhaseReport {
        k,
        kstructure: Some(KStructure { r, t, b, r2r3 }),
        intermediates_on_rectangles,
        new_horizontal_reflex: after.0 as i64 - before.0 as i64,
        new_vertical_reflex: after.1 as i64 - before.1 as i64,
    };
    Ok((g3, report))
}

/// Resolves a horizontal port with the two-phase method.
pub fn resolve_port_two_phase(rep: &OrthoRadialRep, port: &Port) -> Result<(OrthoRadialRep, TwoPhaseReport), RectError> {
    let w = Work::new(rep.clone(), Lineage::identity(rep));
    let (out, report) = two_phase_step(&w, port)?;
    Ok((out.rep, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ring_darts_lie_on_right_cycles() {
        let rep = fixtures::ring4();
        for d in [0, 2, 4, 6] {
            assert!(lies_on_right_cycle(&rep, d));
        }
    }

    #[test]
    fn square_has_no_right_cycle() {
        let rep = fixtures::square();
        assert!((0..rep.graph().dart_count()).all(|d| !lies_on_right_cycle(&rep, d)));
    }
}
