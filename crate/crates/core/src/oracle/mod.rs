//! Brute-force ground truth for small instances and a random instance
//! generator.

mod corpus;
pub mod facts;
mod generator;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycle::{is_essential, CycleLabeling};
use crate::graph::{twin, DartId, VertexId};
use crate::rep::OrthoRadialRep;

pub use corpus::{exhaustive_corpus, valid_corpus, CorpusEntry, VALID_TIERS};
pub use generator::{random_drawn_instance, random_instance, GenerationError, InstanceKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("more than {0} cycles")]
    CapExceeded(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub valid: bool,
    pub decreasing_cycles: Vec<CycleLabeling>,
    pub increasing_cycles: Vec<CycleLabeling>,
}

/// Every simple closed walk that is essential, each starting at its
/// smallest vertex. `cap` bounds the number of simple cycles inspected.
pub fn enumerate_essential_cycles(rep: &OrthoRadialRep, cap: usize) -> Result<Vec<Vec<DartId>>, OracleError> {
    let g = rep.graph();
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut seen_cycles = 0usize;
    let mut on_path = vec![false; n];
    let mut path: Vec<DartId> = Vec::new();
    for s in 0..n {
        // Depth-first over vertices larger than s, closing back at s.
        let mut stack: Vec<(VertexId, usize)> = vec![(s, 0)];
        on_path[s] = true;
        while let Some(&mut (v, ref mut k)) = stack.last_mut() {
            let rot = g.rotation(v);
            if *k == rot.len() {
                stack.pop();
                on_path[v] = false;
                path.pop();
                continue;
            }
            let d = rot[*k];
            *k += 1;
            let w = g.head(d);
            if w == s {
                if path.len() >= 2 {
                    seen_cycles += 1;
                    if seen_cycles > cap {
                        return Err(OracleError::CapExceeded(cap));
                    }
                    let mut c = path.clone();
                    c.push(d);
                    if is_essential(rep, &c) == Ok(true) {
                        out.push(c);
                    }
                }
                continue;
            }
            if w < s || on_path[w] {
                continue;
            }
            on_path[w] = true;
            path.push(d);
            stack.push((w, 0));
        }
        on_path[s] = false;
    }
    Ok(out)
}

/// Depth-first path from the head of the reference dart to the cycle,
/// preferring large dart ids and avoiding the reversed reference dart.
fn oracle_path(rep: &OrthoRadialRep, cycle: &[DartId]) -> Option<Vec<DartId>> {
    let g = rep.graph();
    let on_cycle: HashSet<VertexId> = cycle.iter().map(|&d| g.tail(d)).collect();
    let s = g.head(rep.reference());
    if on_cycle.contains(&s) {
        return Some(Vec::new());
    }
    for strict in [true, false] {
        let mut seen = vec![false; g.vertex_count()];
        seen[s] = true;
        let mut path = Vec::new();
        if dfs_path(rep, &on_cycle, s, &mut seen, &mut path, strict) {
            return Some(path);
        }
    }
    None
}

fn dfs_path(
    rep: &OrthoRadialRep,
    on_cycle: &HashSet<VertexId>,
    v: VertexId,
    seen: &mut [bool],
    path: &mut Vec<DartId>,
    strict: bool,
) -> bool {
    let g = rep.graph();
    let mut out: Vec<DartId> = g.rotation(v).to_vec();
    out.sort_unstable_by(|a, b| b.cmp(a));
    for d in out {
        if d == twin(rep.reference()) && strict {
            continue;
        }
        let w = g.head(d);
        if seen[w] {
            continue;
        }
        path.push(d);
        if on_cycle.contains(&w) {
            return true;
        }
        seen[w] = true;
        if dfs_path(rep, on_cycle, w, seen, path, strict) {
            return true;
        }
        path.pop();
    }
    false
}

/// Labels of a simple essential cycle, each summed from scratch along the
/// reference dart, a depth-first path and the cycle.
pub fn oracle_labeling(rep: &OrthoRadialRep, cycle: &[DartId]) -> Option<CycleLabeling> {
    let g = rep.graph();
    let path = oracle_path(rep, cycle)?;
    let v = path.last().map_or(g.head(rep.reference()), |&d| g.head(d));
    let start = cycle.iter().position(|&d| g.tail(d) == v)?;
    let k = cycle.len();
    let mut labels = vec![0i64; k];
    for step in 0..k {
        let mut walk = vec![rep.reference()];
        walk.extend_from_slice(&path);
        walk.extend((0..=step).map(|j| cycle[(start + j) % k]));
        let mut rot = 0i64;
        for w in walk.windows(2) {
            rot += rep.rotation_turn(w[0], w[1]).ok()? as i64;
        }
        if walk.len() > 1 && walk[1] == twin(walk[0]) {
            rot += 4;
        }
        labels[(start + step) % k] = rot;
    }
    Some(CycleLabeling {
        cycle: cycle.to_vec(),
        labels,
        witness_path: path,
    })
}

/// Validity by definition: label every essential cycle.
pub fn oracle_is_valid(rep: &OrthoRadialRep, cap: usize) -> Result<OracleVerdict, OracleError> {
    let mut decreasing = Vec::new();
    let mut increasing = Vec::new();
    for c in enumerate_essential_cycles(rep, cap)? {
        let l = oracle_labeling(rep, &c).expect("connected graphs reach every cycle");
        if l.is_decreasing() {
            decreasing.push(l);
        } else if l.is_increasing() {
            increasing.push(l);
        }
    }
    Ok(OracleVerdict {
        valid: decreasing.is_empty() && increasing.is_empty(),
        decreasing_cycles: decreasing,
        increasing_cycles: increasing,
    })
}

/// Default cycle cap for oracle runs on corpus instances.
pub const DEFAULT_CAP: usize = 200_000;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::labeling;
    use crate::fixtures;

    #[test]
    fn ring_has_one_essential_cycle() {
        let rep = fixtures::ring4();
        let cs = enumerate_essential_cycles(&rep, 100).unwrap();
        assert_eq!(cs, vec![vec![0, 2, 4, 6]]);
        assert!(oracle_is_valid(&rep, 100).unwrap().valid);
    }

    #[test]
    fn theta_has_two_essential_cycles() {
        let rep = fixtures::theta();
        assert_eq!(enumerate_essential_cycles(&rep, 100).unwrap().len(), 2);
    }

    #[test]
    fn spiral_is_decreasing() {
        let v = oracle_is_valid(&fixtures::spiral4(), 100).unwrap();
        assert!(!v.valid);
        assert_eq!(v.decreasing_cycles.len(), 1);
        assert!(v.increasing_cycles.is_empty());
        assert_eq!(v.decreasing_cycles[0].labels, vec![0, 1, 1, 0]);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_essential_cycles(&fixtures::theta(), 1),
            Err(OracleError::CapExceeded(1))
        );
    }

    #[test]
    fn oracle_labels_match_fast_labels_on_generated() {
        for seed in 0..60 {
            let rep = random_instance(10, seed, InstanceKind::Valid).unwrap();
            for c in enumerate_essential_cycles(&rep, DEFAULT_CAP).unwrap() {
                let a = oracle_labeling(&rep, &c).unwrap();
                let b = labeling(&rep, &c).unwrap();
                assert_eq!(a.labels, b.labels, "seed {seed} cycle {c:?}");
            }
            assert!(oracle_is_valid(&rep, DEFAULT_CAP).unwrap().valid, "seed {seed}");
        }
    }
}
