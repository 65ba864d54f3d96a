use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use orthoradial::{fixtures, write_instance, OrthoRadialRep};
use serde_json::Value;
use tempfile::TempDir;

fn orad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orad")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn put(dir: &TempDir, name: &str, rep: &OrthoRadialRep) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, write_instance(rep)).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn ring_is_valid_and_spiral_is_not() {
    let dir = TempDir::new().unwrap();
    let ring = put(&dir, "ring.json", &fixtures::ring4());
    let spiral = put(&dir, "spiral.json", &fixtures::spiral4());
    assert_eq!(code(&orad(&["check", s(&ring)])), 0);
    assert_eq!(code(&orad(&["validate", s(&ring)])), 0);
    let o = orad(&["--json", "validate", s(&spiral), "--witness"]);
    assert_eq!(code(&o), 1);
    let r = report(&o);
    assert_eq!(r["status"], "decreasing");
    assert_eq!(r["witness"]["labels"].as_array().unwrap().len(), 4);
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, "{\"vertices\": 3}").unwrap();
    assert_eq!(code(&orad(&["validate", s(&p)])), 2);
    assert_eq!(code(&orad(&["check", s(&dir.path().join("missing.json"))])), 2);

    let mut v: Value = serde_json::from_str(&write_instance(&fixtures::ring4())).unwrap();
    v.as_object_mut().unwrap().remove("reference");
    fs::write(&p, v.to_string()).unwrap();
    assert_eq!(code(&orad(&["check", s(&p)])), 2);
}

#[test]
fn gen_rejects_tiny_n_and_is_deterministic() {
    assert_eq!(code(&orad(&["gen", "2", "0", "valid"])), 2);
    let a = orad(&["gen", "20", "7", "mutated"]);
    let b = orad(&["gen", "20", "7", "mutated"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_appends_to_manifest() {
    let dir = TempDir::new().unwrap();
    let m = dir.path().join("manifest.jsonl");
    for seed in ["1", "2"] {
        let out = dir.path().join(format!("g{seed}.json"));
        let o = orad(&["gen", "8", seed, "valid", "--out", s(&out), "--manifest", s(&m)]);
        assert_eq!(code(&o), 0);
        assert_eq!(code(&orad(&["validate", s(&out)])), 0);
    }
    let lines: Vec<Value> = fs::read_to_string(&m)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["seed"], 2);
    assert_eq!(lines[0]["verdict"], "valid");
    assert_eq!(lines[0]["oracle_valid"], true);
}

#[test]
fn rectangulate_writes_a_rectangulated_instance() {
    let dir = TempDir::new().unwrap();
    let src = put(&dir, "sq.json", &fixtures::square());
    let out = dir.path().join("out.json");
    let map = dir.path().join("map.json");
    for mode in ["naive", "binary", "two_phase"] {
        let o = orad(&["rectangulate", s(&src), "--mode", mode, "--out", s(&out), "--map", s(&map)]);
        assert_eq!(code(&o), 0, "{mode}");
        assert_eq!(code(&orad(&["validate", s(&out)])), 0);
        let _: Value = serde_json::from_str(&fs::read_to_string(&map).unwrap()).unwrap();
    }
    let spiral = put(&dir, "spiral.json", &fixtures::spiral4());
    assert_eq!(code(&orad(&["rectangulate", s(&spiral)])), 1);
    assert_eq!(code(&orad(&["rectangulate", s(&src), "--mode", "bogus"])), 2);
}

#[test]
fn draw_emits_svg_and_coordinates() {
    let dir = TempDir::new().unwrap();
    let src = put(&dir, "t.json", &fixtures::ring_with_pendant());
    let svg = dir.path().join("d.svg");
    let full = dir.path().join("full.svg");
    let coords = dir.path().join("c.json");
    let o = orad(&[
        "--json",
        "draw",
        s(&src),
        "--svg",
        s(&svg),
        "--full-svg",
        s(&full),
        "--coords",
        s(&coords),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(report(&o)["status"], "ok");
    assert!(fs::read_to_string(&svg).unwrap().contains("<svg"));
    assert!(fs::read_to_string(&full).unwrap().contains("</svg>"));
    let c: Value = serde_json::from_str(&fs::read_to_string(&coords).unwrap()).unwrap();
    assert_eq!(c["edges"].as_array().unwrap().len(), fixtures::ring_with_pendant().graph().edge_count());
}
