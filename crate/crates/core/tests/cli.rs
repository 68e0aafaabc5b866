use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_inertia-lab"))
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&o.stdout));
    })
}

fn gen(spec: &str) -> String {
    let o = run(&["gen", "--family", spec], None);
    assert!(o.status.success());
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn gen_then_inertia() {
    let g = gen("cycle:5");
    let o = run(&["inertia", "--method", "exact"], Some(&g));
    assert_eq!(stdout_json(&o), serde_json::json!({"i_plus": 3, "i_minus": 2, "i_zero": 0}));
    let o = run(&["inertia", "--method", "numeric"], Some(&g));
    assert_eq!(stdout_json(&o)["i_minus"], 2);
}

#[test]
fn gen_writes_file_and_delta_reads_it() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.json");
    let o = run(&["gen", "--family", "path:3", "--out", path.to_str().unwrap()], None);
    assert!(o.status.success());
    let o = run(&["delta", path.to_str().unwrap()], None);
    let m = stdout_json(&o);
    assert_eq!(m["n"], 3);
    assert_eq!(m["data"][0][2], "4/1");
}

#[test]
fn matrix_input_and_spectrum() {
    let o = run(&["inertia"], Some(r#"{"n":2,"data":[["0","1"],["1","0"]]}"#));
    assert_eq!(stdout_json(&o), serde_json::json!({"i_plus": 1, "i_minus": 1, "i_zero": 0}));
    let o = run(&["spectrum", "--tol", "1e-9"], Some(&gen("cycle:4")));
    let v = stdout_json(&o);
    let eig: Vec<f64> = v["eigenvalues"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    for (a, b) in eig.iter().zip([-4.0, -4.0, 2.0, 6.0]) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn predict_star_and_unsupported() {
    let o = run(&["predict"], Some(&gen("star:5")));
    let v = stdout_json(&o);
    assert_eq!(v["status"], "predicted");
    assert_eq!(v["inertia"]["i_minus"], 4);
    let o = run(&["predict"], Some(&gen("opposite:3")));
    assert_eq!(stdout_json(&o)["status"], "unsupported");
    let o = run(&["predict"], Some(&gen("pendants:6x3")));
    assert!(stdout_json(&o)["inertia"]["i_zero"].is_null());
}

#[test]
fn witness_kinds() {
    let o = run(&["witness", "--kind", "opposite", "--args", "k=3"], None);
    assert!(o.status.success());
    assert_eq!(stdout_json(&o)["status"], "verified: Δv = 0");

    let p4 = gen("path:4");
    let o = run(&["witness", "--kind", "row", "--args", "v=1"], Some(&p4));
    assert_eq!(stdout_json(&o)["status"], "verified: Δx = 2·1");
    let o = run(&["witness", "--kind", "pair", "--args", "v1=1,v2=2"], Some(&p4));
    assert_eq!(stdout_json(&o)["vector"], serde_json::json!(["1/1", "-3/1", "3/1", "-1/1"]));

    let o = run(&["witness", "--kind", "branch", "--args", "u=4"], Some(&gen("evencycle-tree:4+path:2")));
    assert!(o.status.success());

    let o = run(&["witness", "--kind", "row", "--args", "v=0"], Some(&p4));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = run(
        &["verify", "--family", "trees", "--range", "3..8", "--out", path.to_str().unwrap()],
        None,
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["schema"], "inertia-lab/1");
    assert_eq!(r["instance_count"], 1 + 2 + 3 + 6 + 11 + 23);
    assert_eq!(r["mismatches"], serde_json::json!([]));

    let o = run(&["verify", "--family", "evencycle-tree", "--range", "4..10", "--tree-max", "5"], None);
    assert!(o.status.success());
    let o = run(&["verify", "--family", "cycles", "--range", "3..20"], None);
    assert!(o.status.success());

    let o = run(&["verify", "--family", "cycles", "--range", "3..30", "--max-n", "24"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--family", "nope", "--range", "3..4"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn env_cap_override() {
    let o = bin()
        .args(["verify", "--family", "cycles", "--range", "3..30"])
        .env("INERTIA_LAB_MAX_N", "40")
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn scan_is_deterministic() {
    let a = run(&["scan", "--samples", "100", "--max-n", "10", "--seed", "7"], None);
    let b = run(&["scan", "--samples", "100", "--max-n", "10", "--seed", "7"], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["type"], "header");
    assert_eq!(lines.last().unwrap()["type"], "summary");
}

#[test]
fn props_and_usage_errors() {
    let o = run(&["props", "--seed", "1", "--trials", "10"], None);
    assert!(o.status.success());
    assert!(stdout_json(&o)["checks"].as_array().unwrap().len() >= 4);
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(run(&["inertia"], Some("not json")).status.code(), Some(2));
    assert_eq!(run(&["inertia", "/nonexistent/file.json"], None).status.code(), Some(2));
}
