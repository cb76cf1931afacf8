use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

const GOLDEN: &str = "F: (12y+49)z^2 - (12y^2+62y+56)z + y^2 + 8y + 16\n";

struct Run {
    code: i32,
    stdout: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).expect("stdout is JSON")
    }
}

fn aode(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_aode")).args(args).output().expect("binary runs");
    Run { code: out.status.code().expect("exit code"), stdout: String::from_utf8(out.stdout).unwrap() }
}

fn file(dir: &TempDir, name: &str, text: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn solve_golden() {
    let dir = TempDir::new().unwrap();
    let r = aode(&["solve", &file(&dir, "f.txt", GOLDEN)]);
    assert_eq!(r.code, 0);
    let doc = r.json();
    assert_eq!(doc["status"], "Solved");
    assert_eq!(doc["bounds"]["N"], 2);
    assert_eq!(doc["bounds"]["M"], 4);
    assert_eq!(doc["candidates"].as_array().unwrap().len(), 4);
    let sol = &doc["solutions"][0];
    assert_eq!(sol["degree"], 4);
    assert_eq!(sol["verified"], true);
}

#[test]
fn bound_only() {
    let dir = TempDir::new().unwrap();
    let r = aode(&["bound", &file(&dir, "f.txt", GOLDEN)]);
    assert_eq!(r.code, 0);
    let doc = r.json();
    assert_eq!(doc["status"], "Bounded");
    assert_eq!(doc["bounds"]["M"], 4);
    assert!(doc["solutions"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes_by_status() {
    let dir = TempDir::new().unwrap();
    let null = aode(&["solve", &file(&dir, "a.txt", "F: z - y^2\n")]);
    assert_eq!(null.code, 1);
    assert_eq!(null.json()["status"], "Null");
    assert_eq!(null.json()["constant_solutions"].as_array().unwrap().len(), 2);

    let diag = aode(&["solve", &file(&dir, "d.txt", "F: z - y\n")]);
    assert_eq!(diag.code, 0);
    assert_eq!(diag.json()["status"], "ConstantsOnly");
    assert_eq!(diag.json()["constant_solutions"], "all");

    // genus one
    let cubic = aode(&["solve", &file(&dir, "c.txt", "F: y^3 + z^3 - 1\n")]);
    assert_eq!(cubic.code, 1);
    assert_eq!(cubic.json()["genus"], 1);
}

#[test]
fn input_errors() {
    let dir = TempDir::new().unwrap();
    let r = aode(&["solve", &file(&dir, "bad.txt", "F: (y + \n")]);
    assert_eq!(r.code, 3);
    assert_eq!(r.json()["status"], "Error");
    let r = aode(&["solve", &file(&dir, "noz.txt", "F: y^2 - 1\n")]);
    assert_eq!(r.code, 3);
    let r = aode(&["solve", "/nonexistent/instance.txt"]);
    assert_eq!(r.code, 3);
    let r = aode(&["gen", "--seed", "1", "--deg", "9"]);
    assert_eq!(r.code, 3);
}

#[test]
fn gen_is_deterministic_and_solvable() {
    let a = aode(&["gen", "--seed", "11", "--deg", "1"]);
    let b = aode(&["gen", "--seed", "11", "--deg", "1"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with("# seed 11\n# planted y(x) = "));
    let planted = a.stdout.lines().nth(1).unwrap().trim_start_matches("# planted y(x) = ").to_owned();

    let dir = TempDir::new().unwrap();
    let path = file(&dir, "g.txt", &a.stdout);
    assert_eq!(aode(&["verify", &path, "--candidate", &planted]).code, 0);
    let r = aode(&["solve", &path]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["status"], "Solved");
}

#[test]
fn verify_candidates() {
    let dir = TempDir::new().unwrap();
    let path = file(&dir, "f.txt", GOLDEN);
    let good = aode(&["verify", &path, "--candidate", "(1 - 4x + 2x^2)^2 / (2x(1 - 3x + 2x^2))"]);
    assert_eq!(good.code, 0);
    assert_eq!(good.json()["verified"], true);
    let bad = aode(&["verify", &path, "--candidate", "x"]);
    assert_eq!(bad.code, 1);
    assert_eq!(bad.json()["verified"], false);
}

#[test]
fn imported_parametrization() {
    let dir = TempDir::new().unwrap();
    let path = file(&dir, "f.txt", GOLDEN);
    let param = file(&dir, "p.txt", "p1 = (9t^2 - 12t + 4) / (12t)\np2 = (9t^2 + 36t + 4) / (12(t + 4))\n");
    let r = aode(&["param-import", &path, "--parametrization", &param]);
    assert_eq!(r.code, 0);
    let doc = r.json();
    assert_eq!(doc["status"], "Solved");
    assert_eq!(doc["parametrization"]["source"], "imported");
    assert_eq!(doc["bounds"]["M"], 4);

    let wrong = file(&dir, "w.txt", "p1 = t\np2 = t + 1\n");
    let r = aode(&["solve", &path, "--parametrization", &wrong]);
    assert_eq!(r.code, 3);
    assert_eq!(r.json()["status"], "Error");
}
