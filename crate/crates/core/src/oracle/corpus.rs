//! The fixed instance corpus used by the test suites.

use super::generator::{random_instance, GenerationError, InstanceKind};
use crate::rep::OrthoRadialRep;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub n: usize,
    pub seed: u64,
    pub kind: InstanceKind,
    pub rep: OrthoRadialRep,
}

/// Sizes and seed counts of the valid corpus: dense below 13 vertices,
/// thinning out up to 500.
pub const VALID_TIERS: &[(usize, u64)] = &[
    (3, 20),
    (4, 20),
    (5, 20),
    (6, 20),
    (7, 20),
    (8, 20),
    (9, 20),
    (10, 20),
    (11, 20),
    (12, 20),
    (16, 4),
    (24, 4),
    (32, 4),
    (48, 3),
    (64, 3),
    (96, 2),
    (128, 2),
    (192, 1),
    (256, 1),
    (384, 1),
    (500, 1),
];

/// Valid corpus instances with at most `max_n` vertices.
pub fn valid_corpus(max_n: usize) -> Result<Vec<CorpusEntry>, GenerationError> {
    let mut out = Vec::new();
    for &(n, seeds) in VALID_TIERS.iter().filter(|t| t.0 <= max_n) {
        for seed in 0..seeds {
            out.push(CorpusEntry {
                n,
                seed,
                kind: InstanceKind::Valid,
                rep: random_instance(n, seed, InstanceKind::Valid)?,
            });
        }
    }
    Ok(out)
}

/// Every `(n, seed, kind)` with `3 <= n <= max_n` and `seed < seeds`.
pub fn exhaustive_corpus(max_n: usize, seeds: u64) -> Result<Vec<CorpusEntry>, GenerationError> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for seed in 0..seeds {
            for kind in [InstanceKind::Valid, InstanceKind::Mutated] {
                out.push(CorpusEntry {
                    n,
                    seed,
                    kind,
                    rep: random_instance(n, seed, kind)?,
                });
            }
        }
    }
    Ok(out)
}
