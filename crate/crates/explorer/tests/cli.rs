use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_borcherds-rc"))
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Fixture {
    dir: TempDir,
    d2: PathBuf,
    d1: PathBuf,
}

fn fixture() -> Fixture {
    let dir = TempDir::new().unwrap();
    let d2 = write(dir.path(), "d2.json", r#"{"indices": ["1", "2"], "cartan": [[-2, -1], [-1, -2]]}"#);
    let d1 = write(dir.path(), "d1.json", r#"{"indices": ["1"], "cartan": [[2]]}"#);
    Fixture { dir, d2, d1 }
}

#[test]
fn validate_exit_codes() {
    let f = fixture();
    let ok = run(&["validate", "--datum", f.d2.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = write(f.dir.path(), "bad.json", r#"{"indices": ["1", "2"], "cartan": [[2, -1], [0, 2]]}"#);
    let o = run(&["validate", "--datum", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let broken = write(f.dir.path(), "broken.json", "{\"indices\": [");
    assert_eq!(run(&["validate", "--datum", broken.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn apply_renders_worked_example() {
    let f = fixture();
    let o = run(&["apply", "--datum", f.d2.to_str().unwrap(), "--word", "f1^3 f2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1)\n  7 [ ] 5\n  7 [ ] 3\n  7 [ ] 1\n(2)\n  5 [ ] 4\n");
    let bad = run(&["apply", "--datum", f.d2.to_str().unwrap(), "--word", "g1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn generate_round_trip_and_determinism() {
    let f = fixture();
    let out = f.dir.path().join("g.json");
    let args = ["generate", "--datum", f.d2.to_str().unwrap(), "--depth", "4", "--out", out.to_str().unwrap()];
    assert_eq!(run(&args).status.code(), Some(0));
    let first = std::fs::read_to_string(&out).unwrap();
    assert_eq!(run(&args).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), first);
    let g = borcherds_rc_explorer::format::import_json(&first).unwrap();
    assert_eq!(borcherds_rc_explorer::format::export_json(&g), first);
}

#[test]
fn dot_single_node() {
    let f = fixture();
    let o = run(&["generate", "--datum", f.d1.to_str().unwrap(), "--depth", "0", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 1);
    assert!(!dot.contains("->"));
}

#[test]
fn checks_pass() {
    let f = fixture();
    let d2 = f.d2.to_str().unwrap();
    for cmd in ["check-axioms", "check-recognition", "check-balanced", "check-cayley"] {
        let o = run(&[cmd, "--datum", d2, "--depth", "3"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", stdout(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(v.is_object() || v.is_array());
    }
    let d1 = f.d1.to_str().unwrap();
    assert_eq!(run(&["check-balanced", "--datum", d1]).status.code(), Some(2));
}

#[test]
fn lambda_models() {
    let f = fixture();
    let lambda = write(f.dir.path(), "l.json", r#"{"pairings": {"1": 2}}"#);
    let (d1, l) = (f.d1.to_str().unwrap(), lambda.to_str().unwrap());
    let o = run(&["generate", "--datum", d1, "--model", "lambda", "--lambda", l, "--depth", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(run(&["generate", "--datum", d1, "--model", "lambda"]).status.code(), Some(2));
    let o = run(&["check-lambda", "--datum", d1, "--lambda", l, "--depth", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["apply", "--datum", d1, "--lambda", l, "--word", "f'1^3"]);
    assert_eq!(o.status.code(), Some(0));
}
