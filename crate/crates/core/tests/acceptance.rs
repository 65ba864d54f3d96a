//! Acceptance suite: one line per criterion, non-zero exit if any hard
//! criterion fails. Timing ratios are reported but only advisory.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use orthoradial::cycle::CycleLabeling;
use orthoradial::fixtures;
use orthoradial::layout::draw;
use orthoradial::oracle::facts::{check_facts, long_ports, FactCounts};
use orthoradial::oracle::{
    enumerate_essential_cycles, exhaustive_corpus, oracle_is_valid, oracle_labeling, random_instance, valid_corpus,
    InstanceKind, DEFAULT_CAP,
};
use orthoradial::rectangulate::two_phase::resolve_port_two_phase;
use orthoradial::rectangulate::{is_rectangulated, rectangulate, rectangulate_until, Mode, RectError};
use orthoradial::transform::mirror_walk;
use orthoradial::{flip, is_valid, labeling, mirror, twin, OrthoRadialRep, Verdict};

struct Outcome {
    pass: bool,
    advisory: bool,
    summary: String,
}

impl Outcome {
    fn hard(pass: bool, summary: String) -> Self {
        Outcome {
            pass,
            advisory: false,
            summary,
        }
    }
}

fn cyclic_eq(a: &[i64], b: &[i64]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|k| a.iter().cycle().skip(k).take(a.len()).eq(b.iter()))
}

fn witness_confirmed(rep: &OrthoRadialRep, verdict: Verdict, w: Option<&CycleLabeling>) -> bool {
    let Some(w) = w else { return false };
    let Some(l) = oracle_labeling(rep, &w.cycle) else { return false };
    l.labels == w.labels
        && match verdict {
            Verdict::Decreasing => l.is_decreasing(),
            Verdict::Increasing => l.is_increasing(),
            Verdict::Valid => false,
        }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut instances: Vec<OrthoRadialRep> = exhaustive_corpus(8, 25).unwrap().into_iter().map(|e| e.rep).collect();
    let exhaustive = instances.len();
    for i in 0..500u64 {
        let n = 3 + (i % 10) as usize;
        let kind = if i % 2 == 0 { InstanceKind::Valid } else { InstanceKind::Mutated };
        instances.push(random_instance(n, 10_000 + i, kind).unwrap());
    }
    let (mut agree, mut invalid, mut witnesses) = (0, 0, 0);
    for rep in &instances {
        let fast = is_valid(rep).unwrap();
        let slow = oracle_is_valid(rep, DEFAULT_CAP).unwrap();
        if fast.is_valid() == slow.valid {
            agree += 1;
        }
        if !fast.is_valid() {
            invalid += 1;
            witnesses += usize::from(witness_confirmed(rep, fast.verdict, fast.witness.as_ref()));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome::hard(
        agree == instances.len() && witnesses == invalid && secs < 300.0,
        format!(
            "{agree}/{} verdicts agree ({exhaustive} exhaustive n<=8), {witnesses}/{invalid} witnesses confirmed, {secs:.1}s",
            instances.len()
        ),
    )
}

fn canonical_instances() -> Outcome {
    let ring = is_valid(&fixtures::ring4()).unwrap();
    let spiral = is_valid(&fixtures::spiral4()).unwrap();
    let mirrored = is_valid(&mirror(&fixtures::spiral4())).unwrap();
    let labels = |r: &orthoradial::MonotoneReport| r.witness.as_ref().map(|w| w.labels.clone()).unwrap_or_default();
    let ok_ring = ring.verdict == Verdict::Valid;
    let ok_spiral = spiral.verdict == Verdict::Decreasing && cyclic_eq(&labels(&spiral), &[0, 1, 1, 0]);
    let ok_mirror = mirrored.verdict == Verdict::Increasing && cyclic_eq(&labels(&mirrored), &[0, -1, -1, 0]);
    Outcome::hard(
        ok_ring && ok_spiral && ok_mirror,
        format!(
            "ring-4 {:?}; spiral-4 {:?} {:?}; mirror {:?} {:?}",
            ring.verdict,
            spiral.verdict,
            labels(&spiral),
            mirrored.verdict,
            labels(&mirrored)
        ),
    )
}

fn symmetry_identities() -> Outcome {
    let (mut cycles, mut flipped, mut violations) = (0, 0, 0);
    for entry in exhaustive_corpus(10, 20).unwrap() {
        let rep = &entry.rep;
        let f = flip(rep).ok();
        let m = mirror(rep);
        for c in enumerate_essential_cycles(rep, DEFAULT_CAP).unwrap() {
            cycles += 1;
            let l = labeling(rep, &c).unwrap();
            if let Some(f) = &f {
                flipped += 1;
                let rev: Vec<_> = c.iter().rev().map(|&d| twin(d)).collect();
                let lf = labeling(f, &rev).unwrap();
                violations += c.iter().zip(&l.labels).filter(|&(&d, &x)| lf.label_of(twin(d)) != Some(x)).count();
            }
            let lm = labeling(&m, &mirror_walk(&c)).unwrap();
            violations += c.iter().zip(&l.labels).filter(|&(&d, &x)| lm.label_of(twin(d)) != Some(-x)).count();
        }
    }
    Outcome::hard(
        violations == 0,
        format!("{cycles} essential cycles, {flipped} under flip, {violations} edge-wise violations"),
    )
}

// Cycle budget of the oracle per augmentation in the facts suite; larger
// augmentations are judged by the fast test in both orientations.
const FACTS_CAP: usize = 20_000;

fn facts_suite() -> Outcome {
    let mut counts = FactCounts::default();
    let corpus = valid_corpus(12).unwrap();
    for entry in &corpus {
        check_facts(&entry.rep, FACTS_CAP, &mut counts).unwrap();
    }
    Outcome::hard(
        counts.violations() == 0 && counts.ports > 0,
        format!(
            "{} instances, {} ports ({} vertical, {} horizontal): invalid vertical first {}, increasing first {}, decreasing last {}, missing right path {}/{} switches; oracle judged {} of {} augmentations",
            corpus.len(),
            counts.ports,
            counts.vertical,
            counts.horizontal,
            counts.vertical_invalid,
            counts.first_increasing,
            counts.last_decreasing,
            counts.switches_without_path,
            counts.switches,
            counts.judged - counts.fallbacks,
            counts.judged
        ),
    )
}

fn postconditions() -> Outcome {
    let corpus = valid_corpus(500).unwrap();
    let (mut runs, mut bad) = (0, Vec::new());
    let mut slowest = Duration::ZERO;
    for entry in &corpus {
        let n = entry.rep.graph().vertex_count();
        for mode in [Mode::Naive, Mode::Binary, Mode::TwoPhase] {
            // Naive mode is quartic; above 256 vertices it is only timed,
            // by the scaling criterion.
            if mode == Mode::Naive && n > 256 {
                continue;
            }
            runs += 1;
            let t = Instant::now();
            let (out, _) = rectangulate(&entry.rep, mode).unwrap();
            let el = t.elapsed();
            if n == 500 && mode != Mode::Naive {
                slowest = slowest.max(el);
            }
            let ok = out.check_conditions().is_empty()
                && is_valid(&out).unwrap().is_valid()
                && is_rectangulated(&out)
                && out.graph().vertex_count() <= 25 * n;
            if !ok {
                bad.push(format!("n={} seed={} {mode}", entry.n, entry.seed));
            }
        }
    }
    Outcome::hard(
        bad.is_empty() && slowest < Duration::from_secs(10),
        format!(
            "{runs} runs on {} instances, {} failures {:?}; slowest n=500 run {:.2}s",
            corpus.len(),
            bad.len(),
            bad,
            slowest.as_secs_f64()
        ),
    )
}

fn median_is_valid(n: usize, seeds: u64) -> f64 {
    let mut ts: Vec<f64> = (0..seeds)
        .map(|seed| {
            let rep = random_instance(n, seed, InstanceKind::Valid).unwrap();
            let t = Instant::now();
            assert!(is_valid(&rep).unwrap().is_valid());
            t.elapsed().as_secs_f64()
        })
        .collect();
    ts.sort_by(f64::total_cmp);
    ts[ts.len() / 2]
}

fn scaling() -> Outcome {
    let m: Vec<f64> = [250, 500, 1000].iter().map(|&n| median_is_valid(n, 31)).collect();
    let (r1, r2) = (m[1] / m[0], m[2] / m[1]);
    let growth_ok = r1 <= 5.5 && r2 <= 5.5;

    let rep = random_instance(500, 0, InstanceKind::Valid).unwrap();
    let t = Instant::now();
    rectangulate(&rep, Mode::TwoPhase).unwrap();
    let fast = t.elapsed();
    let t = Instant::now();
    let naive = match rectangulate_until(&rep, Mode::Naive, Some(t + fast * 10)) {
        Ok(_) => Some(t.elapsed()),
        Err(RectError::Deadline) => None,
        Err(e) => panic!("naive mode failed: {e}"),
    };
    let speed = match naive {
        None => format!("naive still running after 10x two_phase ({:.2}s)", fast.as_secs_f64()),
        Some(d) => format!("naive/two_phase = {:.1}", d.as_secs_f64() / fast.as_secs_f64()),
    };
    let speed_ok = naive.is_none_or(|d| d >= fast * 10);
    Outcome {
        pass: growth_ok && speed_ok,
        advisory: speed_ok,
        summary: format!(
            "median is_valid {:.1}/{:.1}/{:.1} ms at n=250/500/1000, growth {r1:.2} and {r2:.2} per doubling; {speed}",
            m[0] * 1e3,
            m[1] * 1e3,
            m[2] * 1e3
        ),
    }
}

fn realization() -> Outcome {
    let corpus = valid_corpus(500).unwrap();
    let (mut bad, mut cycles) = (Vec::new(), 0);
    for entry in &corpus {
        let result = draw(&entry.rep, Mode::TwoPhase);
        let p = match result {
            Ok(p) => p,
            Err(e) => {
                bad.push(format!("n={} seed={}: {e}", entry.n, entry.seed));
                continue;
            }
        };
        let g = entry.rep.graph();
        let ends_ok = p.drawing.edges.iter().enumerate().all(|(e, line)| {
            line.points.first() == Some(&p.drawing.coords[g.tail(2 * e)])
                && line.points.last() == Some(&p.drawing.coords[g.head(2 * e)])
        });
        if !ends_ok {
            bad.push(format!("n={} seed={}: polyline ends", entry.n, entry.seed));
        }
        if entry.n <= 12 {
            for c in enumerate_essential_cycles(&entry.rep, DEFAULT_CAP).unwrap() {
                cycles += 1;
                let wind: i64 = c
                    .iter()
                    .map(|&d| {
                        let s: i64 = p.drawing.edges[d / 2].spans.iter().sum();
                        if d % 2 == 0 {
                            s
                        } else {
                            -s
                        }
                    })
                    .sum();
                if wind.abs() != p.drawing.width {
                    bad.push(format!("n={} seed={}: cycle winds {wind}", entry.n, entry.seed));
                }
            }
        }
    }
    Outcome::hard(
        bad.is_empty(),
        format!(
            "{} drawings checked, {cycles} essential cycles wind once, {} violations {:?}",
            corpus.len(),
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn two_phase_bookkeeping() -> Outcome {
    let mut planted = Vec::new();
    for entry in valid_corpus(12).unwrap() {
        planted.extend(long_ports(&entry.rep).unwrap());
    }
    let mut bad = 0;
    let mut structures = 0;
    for (rep, port, k) in &planted {
        let (out, report) = resolve_port_two_phase(rep, port).unwrap();
        structures += usize::from(report.kstructure.is_some());
        let ok = report.k == *k
            && report.kstructure.is_some()
            && report.intermediates_on_rectangles
            && report.new_horizontal_reflex <= 0
            && report.new_vertical_reflex <= 2
            && out.check_conditions().is_empty()
            && is_valid(&out).unwrap().is_valid();
        bad += usize::from(!ok);
    }
    Outcome::hard(
        bad == 0 && !planted.is_empty(),
        format!(
            "{} ports with k >= 4, {structures} K structures built, {bad} violations",
            planted.len()
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence", oracle_equivalence),
        ("canonical instances", canonical_instances),
        ("symmetry identities", symmetry_identities),
        ("facts suite", facts_suite),
        ("rectangulation postconditions", postconditions),
        ("scaling", scaling),
        ("drawing realization", realization),
        ("two-phase bookkeeping", two_phase_bookkeeping),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let verdict = match (o.pass, o.advisory) {
            (true, _) => "PASS",
            (false, true) => "FAIL (advisory)",
            (false, false) => "FAIL",
        };
        if !o.pass && !o.advisory {
            failed += 1;
        }
        println!("criterion {} {name}: {verdict} - {} [{:.1}s]", i + 1, o.summary, t.elapsed().as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
