use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma-quiver")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    (code(&o), serde_json::from_slice(&o.stdout).expect("json report"))
}

fn temp_fixture(body: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), body).unwrap();
    f
}

#[test]
fn slice_two_row() {
    let (c, j) = json(&["slice", "--input", fixture("two_row.json").to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(j["report"]["mu_prime"], serde_json::json!([6]));
    assert_eq!(j["report"]["lambda"], serde_json::json!([4, 2]));
    assert_eq!(j["report"]["type"], "symplectic");
    assert_eq!(j["seed"], 1);
}

#[test]
fn slice_first_vertex_and_empty() {
    let f = temp_fixture(r#"{"graph": "A3", "v": [2, 1, 0], "w": [3, 0, 0]}"#);
    let (c, j) = json(&["slice", "--input", f.path().to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(j["report"]["lambda"], serde_json::json!([1, 1, 1]));

    let f = temp_fixture(r#"{"graph": "A2", "v": [0, 0], "w": [0, 0]}"#);
    let o = run(&["slice", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("nothing to report"));
}

#[test]
fn symmetry_kinds() {
    let two_row = fixture("two_row.json");
    let (c, j) = json(&["symmetry", "--kind", "rect", "--input", two_row.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(j["report"]["mu_prime_hat"], serde_json::json!([7, 1]));
    assert_eq!(j["report"]["lambda_hat"], serde_json::json!([5, 3]));
    for kind in ["col", "row"] {
        let o = run(&["symmetry", "--kind", kind, "--input", fixture("n2.json").to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{kind}: {}", stdout(&o));
        assert!(stdout(&o).contains("PASS"));
    }
}

#[test]
fn bad_input_exits_2() {
    let o = run(&["symmetry", "--kind", "rect", "--input", fixture("corrupted.json").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let f = temp_fixture("{ not json");
    assert_eq!(code(&run(&["slice", "--input", f.path().to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["slice", "--input", "/nonexistent/fixture.json"])), 2);
    assert_eq!(code(&run(&["verify", "nope"])), 2);
    assert_eq!(code(&run(&["verify", "weyl", "--caps", "rank=0"])), 2);
    let o = run(&["reflect", "--vertex", "2", "--input", fixture("a1.json").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn reflect_a1_writes_point() {
    let out = tempfile::NamedTempFile::new().unwrap();
    let o = run(&["reflect", "--vertex", "1", "--input", fixture("a1.json").to_str().unwrap(), "--output", out.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("v′ = [1]"));
    // the written point is a valid input and reflects back
    let (c, j) = json(&["reflect", "--vertex", "1", "--input", out.path().to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(j["report"]["v"], serde_json::json!([1]));
    assert_eq!(j["report"]["xi"], serde_json::json!([1]));
    assert_eq!(j["report"]["zeta_c"], serde_json::json!(["1"]));
}

#[test]
fn fixed_points_a1() {
    let (c, j) = json(&["fixed-points", "--input", fixture("a1_torus.json").to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(j["report"]["count"], 2);
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "tau", "--caps", "small", "--seed", "7"];
    let (c1, mut a) = json(&args);
    let (c2, mut b) = json(&args);
    assert_eq!((c1, c2), (0, 0));
    strip_timing(&mut a);
    strip_timing(&mut b);
    assert_eq!(a, b);
    assert_eq!(a["seed"], 7);
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "weyl", "--caps", "small"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("seed 1 caps rank=3"));
    // the literal boundary-matrix identities are false, so this suite reports failures
    assert_eq!(code(&run(&["kmatrix"])), 1);
}

#[test]
fn verify_all_small() {
    let (c, j) = json(&["verify", "all", "--caps", "small"]);
    assert_eq!(c, 1);
    let reports = j["report"].as_array().unwrap();
    assert_eq!(reports.len(), 10);
    for r in reports {
        let pass = r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true);
        assert_eq!(pass, r["suite"] != "kmatrix", "suite {}", r["suite"]);
    }
}
