use std::path::PathBuf;
use std::process::{Command, Output};

fn problem_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn mz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mz")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gb_subcommand() {
    let p = problem_file("gb.json", r#"{"ideal": ["x^2 - y", "x*y - 1"]}"#);
    let out = mz(&["gb", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["variables"], serde_json::json!(["x", "y"]));
    let texts: Vec<&str> = v["basis"].as_array().unwrap().iter().map(|g| g["text"].as_str().unwrap()).collect();
    assert_eq!(texts, vec!["x^2 - y", "x*y - 1", "y^2 - x"]);
}

#[test]
fn idempotents_subcommand() {
    let p = problem_file("idem.json", r#"{"eliminants": ["t^2 - t"], "vectors": []}"#);
    let out = mz(&["idempotents", p.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("shift: (1)\n"), "{text}");
    assert!(text.contains("point 1: t = 0\n  g = -t + 1\n"), "{text}");
    assert!(text.contains("point 2: t = 1\n  g = t\n"), "{text}");
    assert!(text.ends_with("verified: true\n"));
}

#[test]
fn oracle_subcommand() {
    let p = problem_file("oracle.json", r#"{"ideal": ["(x1-1)^2"], "vectors": ["1"]}"#);
    let out = mz(&["oracle", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["is_mz"], false);
    assert_eq!(v["witness"]["subset"], serde_json::json!([1]));
    assert_eq!(v["witness"]["monomial_text"], "x1");
}

#[test]
fn option_overrides() {
    let p = problem_file("cap.json", r#"{"eliminants": ["(x-1)*(x-2)*(x-3)"], "options": {"run_oracle": true}}"#);
    let p = p.to_str().unwrap();
    let out = mz(&["decide", p]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["oracle"]["agrees"], true);
    assert_eq!(mz(&["decide", p, "--subset-cap", "2"]).status.code(), Some(3));
}

#[test]
fn input_errors() {
    let missing = mz(&["decide", "/nonexistent/problem.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let p = problem_file("bad.json", r#"{"ideal": ["x1 x2"]}"#);
    let out = mz(&["decide", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("ideal[0]") && err.contains("position 3"), "{err}");
    let p = problem_file("inf.json", r#"{"variables": ["x1", "x2"], "ideal": ["x1"]}"#);
    let out = mz(&["decide", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("infinite codimension"));
}

#[test]
fn timings_only_on_request() {
    let p = problem_file("t.json", r#"{"ideal": ["x^2 - 1"], "vectors": ["x"]}"#);
    let p = p.to_str().unwrap();
    assert!(json(&mz(&["decide", p])).get("timings").is_none());
    assert!(json(&mz(&["decide", p, "--timings"]))["timings"]["prepare_us"].is_u64());
}
