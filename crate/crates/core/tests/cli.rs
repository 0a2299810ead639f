use std::path::Path;
use std::process::{Command, Output};

use splitcolor::generator::CATALOG;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitcolor")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "--named", "K7", "--mode", "edge"]);
    assert_eq!(code(&o), 0);
    assert!(text(&o.stdout).contains("Class 2") && text(&o.stdout).contains("certificate"));

    let o = run(&["classify", "--named", "K4", "--mode", "total", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["total"]["verdict"], "Type 2");
    assert_eq!(doc["total"]["hilton_witness"]["order"], 4);

    let o = run(&["classify", "--named", "sigma3witness", "--mode", "edge"]);
    assert_eq!(code(&o), 2);
    assert!(text(&o.stderr).contains("sigma=3 out of scope"));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(code(&run(&["classify"])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["classify", "--named", "K0"])), 1);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\n1 2\n2 3 4\n").unwrap();
    let o = run(&["classify", "--input", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(text(&o.stderr).contains("line 3"), "{}", text(&o.stderr));

    let c4 = dir.path().join("c4.txt");
    std::fs::write(&c4, "a b\nb c\nc d\nd a\n").unwrap();
    assert_eq!(code(&run(&["classify", "--input", c4.to_str().unwrap(), "--mode", "edge"])), 2);
}

#[test]
fn color_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut written = 0;
    for name in CATALOG.iter().copied().chain(["K4", "K5", "K6", "K7", "K8"]) {
        for mode in ["edge", "total"] {
            let out = dir.path().join(format!("{name}-{mode}.json"));
            let o = run(&["color", "--named", name, "--mode", mode, "--out", out.to_str().unwrap()]);
            match code(&o) {
                0 => {
                    written += 1;
                    let v = run(&["verify", "--named", name, "--coloring", out.to_str().unwrap(), "--mode", mode]);
                    assert_eq!(code(&v), 0, "{name} {mode}: {}", text(&v.stderr));
                }
                2 | 3 => assert!(!Path::new(&out).exists(), "{name} {mode} wrote a file"),
                c => panic!("{name} {mode}: exit {c}: {}", text(&o.stderr)),
            }
        }
    }
    assert!(written >= 8);
}

#[test]
fn color_examples() {
    let o = run(&["color", "--named", "K4+p0p1", "--mode", "edge"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["colors"], 4);

    assert_eq!(code(&run(&["color", "--named", "K7", "--mode", "edge"])), 3);
    let o = run(&["color", "--named", "H6+p5", "--mode", "total"]);
    assert_eq!(code(&o), 3);
    assert!(text(&o.stdout).contains("Type 2"));

    let o = run(&["color", "--named", "K4+p0p0", "--mode", "total", "--emit", "dot"]);
    assert_eq!(code(&o), 0);
    let dot = text(&o.stdout);
    assert!(dot.starts_with("graph G {") && dot.contains("fillcolor=") && dot.contains("[color="));
}

#[test]
fn verify_rejects_corruption_and_tight_budget() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.json");
    assert_eq!(code(&run(&["color", "--named", "K4", "--out", path.to_str().unwrap()])), 0);
    let p = path.to_str().unwrap();
    assert_eq!(code(&run(&["verify", "--named", "K4", "--coloring", p])), 0);

    let o = run(&["verify", "--named", "K4", "--coloring", p, "--max-colors", "2"]);
    assert_eq!(code(&o), 4);

    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc["edges"][1]["color"] = doc["edges"][0]["color"].clone();
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = run(&["verify", "--named", "K4", "--coloring", p]);
    assert_eq!(code(&o), 4);
    assert!(text(&o.stderr).contains("share color"), "{}", text(&o.stderr));

    assert_eq!(code(&run(&["verify", "--named", "K5", "--coloring", p])), 4);
}

#[test]
fn fuzz_echoes_seed_and_passes() {
    let o = run(&["fuzz", "--count", "40", "--max-n", "8", "--suite", "sigma", "--seed", "7"]);
    assert_eq!(code(&o), 0, "{}", text(&o.stdout));
    let out = text(&o.stdout);
    assert!(out.contains("seed=7") && out.contains("0 disagreements"));

    let o = run(&["fuzz", "--count", "0", "--suite", "edge"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(&["fuzz", "--suite", "nope"])), 1);
}

#[test]
fn generate_is_reproducible() {
    let args = ["generate", "--clique", "5", "--independent", "3", "--pendants", "2", "--seed", "9"];
    let a = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, run(&args).stdout);
    assert!(text(&a.stdout).starts_with("# seed=9"));
}
