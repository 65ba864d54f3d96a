use orthoradial::oracle::{enumerate_essential_cycles, random_instance, InstanceKind, DEFAULT_CAP};
use orthoradial::transform::mirror_walk;
use orthoradial::{flip, labeling, mirror, twin, OrthoRadialRep};

// Counts edge-wise label mismatches over all essential cycles: flipped
// cycles run backwards with equal labels, mirrored ones negate them.
fn mismatches(rep: &OrthoRadialRep) -> (usize, usize, bool) {
    let cycles = enumerate_essential_cycles(rep, DEFAULT_CAP).unwrap();
    let flipped = flip(rep).ok();
    let mirrored = mirror(rep);
    let (mut bad_flip, mut bad_mirror) = (0, 0);
    for c in &cycles {
        let l = labeling(rep, c).unwrap();
        if let Some(f) = &flipped {
            let rev: Vec<_> = c.iter().rev().map(|&d| twin(d)).collect();
            let lf = labeling(f, &rev).unwrap();
            for (i, &d) in c.iter().enumerate() {
                if lf.label_of(twin(d)) != Some(l.labels[i]) {
                    bad_flip += 1;
                }
            }
        }
        let m = mirror_walk(c);
        let lm = labeling(&mirrored, &m).unwrap();
        for (i, &d) in c.iter().enumerate() {
            if lm.label_of(twin(d)) != Some(-l.labels[i]) {
                bad_mirror += 1;
            }
        }
    }
    (bad_flip, bad_mirror, flipped.is_some())
}

#[test]
fn flip_keeps_and_mirror_negates_labels() {
    let mut flipped = 0;
    for n in 3..=10 {
        for seed in 0..25 {
            for kind in [InstanceKind::Valid, InstanceKind::Mutated] {
                let Ok(rep) = random_instance(n, seed, kind) else { continue };
                let (f, m, did) = mismatches(&rep);
                assert_eq!((f, m), (0, 0), "n {n} seed {seed} {kind:?}");
                flipped += usize::from(did);
            }
        }
    }
    assert!(flipped > 50);
}
