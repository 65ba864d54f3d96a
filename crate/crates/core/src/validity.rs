//! Detection of monotone essential cycles.
//!
//! A decreasing cycle is found by a depth-first search from each dart that
//! always tries the leftmost continuation first and never follows a dart
//! whose search label would turn negative. Increasing cycles are the
//! decreasing cycles of the mirrored representation.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycle::{labeling, CycleLabeling};
use crate::graph::{twin, DartId, VertexId};
use crate::rep::{OrthoRadialRep, Violation};
use crate::transform::{mirror, mirror_walk, normalize, TransformError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidityError {
    #[error("representation violates {} local conditions", .0.len())]
    ConditionsViolated(Vec<Violation>),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Valid,
    Decreasing,
    Increasing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneReport {
    pub verdict: Verdict,
    pub witness: Option<CycleLabeling>,
}

impl MonotoneReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }
}

/// Reusable buffers for repeated searches on one representation.
pub struct Search<'a> {
    rep: &'a OrthoRadialRep,
    stamp: Vec<u32>,
    generation: u32,
    // Dart by which a vertex was entered and the search label of that dart.
    via: Vec<DartId>,
    label: Vec<i64>,
    cursor: Vec<usize>,
    stack: Vec<VertexId>,
}

impl<'a> Search<'a> {
    pub fn new(rep: &'a OrthoRadialRep) -> Self {
        let n = rep.graph().vertex_count();
        Search {
            rep,
            stamp: vec![0; n],
            generation: 0,
            via: vec![0; n],
            label: vec![0; n],
            cursor: vec![0; n],
            stack: Vec::new(),
        }
    }

    /// Left-first search from `vw`; returns the closed walk `vw` + tree
    /// path back to `v` if the tail of `vw` is reached.
    pub fn run(&mut self, vw: DartId) -> Option<Vec<DartId>> {
        let g = self.rep.graph();
        let (v, w) = (g.tail(vw), g.head(vw));
        self.generation += 1;
        let gen = self.generation;
        self.stack.clear();
        self.stamp[w] = gen;
        self.via[w] = vw;
        self.label[w] = 0;
        self.cursor[w] = 1;
        self.stack.push(w);
        while let Some(&x) = self.stack.last() {
            let rot = g.rotation(x);
            let deg = rot.len();
            let k = self.cursor[x];
            if k >= deg {
                self.stack.pop();
                continue;
            }
            self.cursor[x] = k + 1;
            let r = self.via[x];
            let o = g.cw_nth(twin(r), k);
            let l = self.label[x] + self.rep.turn(r, o) as i64;
            if l < 0 {
                continue;
            }
            let y = g.head(o);
            if y == v {
                let mut path = vec![o];
                let mut z = x;
                while z != w {
                    path.push(self.via[z]);
                    z = g.tail(self.via[z]);
                }
                path.push(vw);
                path.reverse();
                return Some(path);
            }
            if self.stamp[y] == gen {
                continue;
            }
            self.stamp[y] = gen;
            self.via[y] = o;
            self.label[y] = l;
            self.cursor[y] = 1;
            self.stack.push(y);
        }
        None
    }
}

/// Candidate cycle through `vw` found by the left-first search, if any.
pub fn left_first_dfs(rep: &OrthoRadialRep, vw: DartId) -> Option<Vec<DartId>> {
    Search::new(rep).run(vw)
}

/// Labeling of `cycle` if it is an essential decreasing cycle.
pub fn decreasing_labeling(rep: &OrthoRadialRep, cycle: &[DartId]) -> Option<CycleLabeling> {
    labeling(rep, cycle).ok().filter(|l| l.is_decreasing())
}

pub fn verify_decreasing(rep: &OrthoRadialRep, cycle: &[DartId]) -> bool {
    decreasing_labeling(rep, cycle).is_some()
}

/// A decreasing cycle, trying start darts in ascending id order.
pub fn find_decreasing(rep: &OrthoRadialRep) -> Option<CycleLabeling> {
    let mut search = Search::new(rep);
    // Many start darts lead to the same cycle; each is labelled once.
    let mut checked: HashSet<Vec<DartId>> = HashSet::new();
    (0..rep.graph().dart_count()).find_map(|d| {
        let mut c = search.run(d)?;
        let start = (0..c.len()).min_by_key(|&i| c[i]).unwrap_or(0);
        c.rotate_left(start);
        if checked.contains(&c) {
            return None;
        }
        let found = decreasing_labeling(rep, &c);
        checked.insert(c);
        found
    })
}

/// Decides validity. Degree-1 vertices are removed internally; witnesses
/// are reported on `rep` itself.
pub fn is_valid(rep: &OrthoRadialRep) -> Result<MonotoneReport, ValidityError> {
    let violations = rep.check_conditions();
    if !violations.is_empty() {
        return Err(ValidityError::ConditionsViolated(violations));
    }
    let (norm, _) = normalize(rep)?;
    // Monotone cycles never enter the added squares, and normalization keeps
    // dart ids, so a witness is a cycle of `rep` as well.
    let relabel = |cycle: &[DartId]| labeling(rep, cycle).expect("witness is an essential cycle of the input");
    if let Some(l) = find_decreasing(&norm) {
        return Ok(MonotoneReport {
            verdict: Verdict::Decreasing,
            witness: Some(relabel(&l.cycle)),
        });
    }
    if let Some(l) = find_decreasing(&mirror(&norm)) {
        return Ok(MonotoneReport {
            verdict: Verdict::Increasing,
            witness: Some(relabel(&mirror_walk(&l.cycle))),
        });
    }
    Ok(MonotoneReport {
        verdict: Verdict::Valid,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::{oracle_is_valid, random_instance, InstanceKind, DEFAULT_CAP};

    fn cyclic_eq(a: &[i64], b: &[i64]) -> bool {
        a.len() == b.len() && (0..a.len().max(1)).any(|k| a.iter().cycle().skip(k).take(a.len()).eq(b.iter()))
    }

    #[test]
    fn ring_is_valid() {
        let r = is_valid(&fixtures::ring4()).unwrap();
        assert_eq!(r.verdict, Verdict::Valid);
        assert_eq!(left_first_dfs(&fixtures::ring4(), 0), Some(vec![0, 2, 4, 6]));
    }

    #[test]
    fn spiral_is_decreasing() {
        let rep = fixtures::spiral4();
        assert_eq!(left_first_dfs(&rep, 0), Some(vec![0, 2, 4, 6]));
        assert!(verify_decreasing(&rep, &[0, 2, 4, 6]));
        let r = is_valid(&rep).unwrap();
        assert_eq!(r.verdict, Verdict::Decreasing);
        assert!(cyclic_eq(&r.witness.unwrap().labels, &[0, 1, 1, 0]));
    }

    #[test]
    fn mirrored_spiral_is_increasing() {
        let r = is_valid(&mirror(&fixtures::spiral4())).unwrap();
        assert_eq!(r.verdict, Verdict::Increasing);
        let labels = r.witness.unwrap().labels;
        assert!(cyclic_eq(&labels, &[0, -1, -1, 0]), "{labels:?}");
    }

    #[test]
    fn agrees_with_oracle_on_small_instances() {
        for seed in 0..150 {
            for kind in [InstanceKind::Valid, InstanceKind::Mutated] {
                let rep = random_instance(8, seed, kind).unwrap();
                let fast = is_valid(&rep).unwrap();
                let slow = oracle_is_valid(&rep, DEFAULT_CAP).unwrap();
                assert_eq!(fast.is_valid(), slow.valid, "seed {seed} {kind:?}");
                if let Some(w) = fast.witness {
                    assert!(w.is_monotone());
                }
            }
        }
    }
}
