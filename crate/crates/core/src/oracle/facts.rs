//! Ground-truth checks of the candidate facts the rectangulation relies on.
//!
//! Every port met while rectangulating is examined: each candidate is
//! augmented and judged by the brute-force oracle, falling back to the fast
//! test when the oracle gives up.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::oracle_is_valid;
use crate::graph::DartId;
use crate::rectangulate::{
    augment, candidates, has_decreasing, horizontal_path_resolution, next_port, prepare, resolve_port_binary, Port,
    PortKind, RectError, Resolution,
};
use crate::rep::OrthoRadialRep;
use crate::validity::{is_valid, Verdict};

/// Monotone cycles after augmenting one candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Judgement {
    pub decreasing: bool,
    pub increasing: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactCounts {
    pub ports: usize,
    pub vertical: usize,
    pub horizontal: usize,
    pub vertical_invalid: usize,
    pub first_increasing: usize,
    pub last_decreasing: usize,
    /// Neighbouring candidates going from decreasing to increasing only.
    pub switches: usize,
    pub switches_without_path: usize,
    pub judged: usize,
    /// Augmentations judged by the fast test because the oracle gave up.
    pub fallbacks: usize,
    /// Position of the first non-decreasing candidate at horizontal ports.
    pub k_histogram: BTreeMap<usize, usize>,
}

impl FactCounts {
    pub fn violations(&self) -> usize {
        self.vertical_invalid + self.first_increasing + self.last_decreasing + self.switches_without_path
    }
}

fn judge(rep: &OrthoRadialRep, port: &Port, vw: DartId, cap: usize, counts: &mut FactCounts) -> Result<Judgement, RectError> {
    counts.judged += 1;
    let a = augment(rep, port, vw)?;
    if let Ok(v) = oracle_is_valid(&a.rep, cap) {
        return Ok(Judgement {
            decreasing: !v.decreasing_cycles.is_empty(),
            increasing: !v.increasing_cycles.is_empty(),
        });
    }
    counts.fallbacks += 1;
    // The fast test reports one kind; look for the other in the mirror.
    let v = is_valid(&a.rep)?.verdict;
    let other = is_valid(&crate::transform::mirror(&a.rep))?.verdict;
    Ok(Judgement {
        decreasing: v == Verdict::Decreasing || other == Verdict::Increasing,
        increasing: v == Verdict::Increasing || other == Verdict::Decreasing,
    })
}

/// Checks every port met while rectangulating `rep` with the binary
/// method and adds the outcome to `counts`. The oracle inspects at most
/// `cap` cycles per augmentation.
pub fn check_facts(rep: &OrthoRadialRep, cap: usize, counts: &mut FactCounts) -> Result<(), RectError> {
    let (mut rep, _) = prepare(rep)?;
    while let Some(port) = next_port(&rep)? {
        counts.ports += 1;
        let cands = candidates(&rep, &port)?.edges;
        match port.kind {
            PortKind::Vertical => {
                counts.vertical += 1;
                let j = judge(&rep, &port, cands[0], cap, counts)?;
                if j.decreasing || j.increasing {
                    counts.vertical_invalid += 1;
                }
            }
            PortKind::Horizontal => {
                counts.horizontal += 1;
                let mut js = Vec::with_capacity(cands.len());
                for &vw in &cands {
                    js.push(judge(&rep, &port, vw, cap, counts)?);
                }
                counts.first_increasing += usize::from(js[0].increasing);
                counts.last_decreasing += usize::from(js[js.len() - 1].decreasing);
                let k = js.iter().position(|j| !j.decreasing).map_or(0, |i| i + 1);
                *counts.k_histogram.entry(k).or_default() += 1;
                for i in 0..js.len().saturating_sub(1) {
                    if js[i].decreasing && !js[i + 1].decreasing && js[i + 1].increasing {
                        counts.switches += 1;
                        if !matches!(
                            horizontal_path_resolution(&rep, &port, cands[i], cands[i + 1]),
                            Ok(Resolution::Insert(_))
                        ) {
                            counts.switches_without_path += 1;
                        }
                    }
                }
            }
        }
        rep = resolve_port_binary(&rep, &port)?;
    }
    Ok(())
}

/// Horizontal ports met while rectangulating `rep` whose first
/// non-decreasing candidate comes fourth or later, each with the
/// representation it belongs to.
pub fn long_ports(rep: &OrthoRadialRep) -> Result<Vec<(OrthoRadialRep, Port, usize)>, RectError> {
    let (mut rep, _) = prepare(rep)?;
    let mut found = Vec::new();
    while let Some(port) = next_port(&rep)? {
        if port.kind == PortKind::Horizontal {
            let cands = candidates(&rep, &port)?.edges;
            let mut k = 0;
            for (i, &vw) in cands.iter().enumerate() {
                let a = augment(&rep, &port, vw)?;
                if !has_decreasing(&a.rep, a.new_edge)? {
                    k = i + 1;
                    break;
                }
            }
            if k >= 4 {
                found.push((rep.clone(), port, k));
            }
        }
        rep = resolve_port_binary(&rep, &port)?;
    }
    Ok(found)
}
