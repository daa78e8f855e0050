use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groupext"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_groupext"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("groupext-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn enumerate_twelve() {
    let out = run(&["enumerate", "--n", "12"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["count"], 8);
    let names: Vec<&str> = v["classes"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"Z3 ⋊ Q8"));
    assert!(names.contains(&"Z4 x S3"));
}

#[test]
fn enumerate_out_of_range_is_invalid_input() {
    assert_eq!(code(&run(&["enumerate", "--n", "99"])), 2);
}

#[test]
fn act_inversion() {
    let out = run(&["act", "--preset", "t-i", "--element", "I0", "--object", "3+", "--side", "left"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["image"], "9-");
}

#[test]
fn act_on_the_right_with_a_product_of_generators() {
    let out = run(&["act", "--preset", "plr-right", "--element", "L.P", "--object", "0+", "--side", "right"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["image"], "4+");
}

#[test]
fn interval_round_trip() {
    let out = run(&["interval", "--preset", "t-i", "--from", "3+", "--to", "9-", "--side", "left"]);
    assert_eq!(code(&out), 0);
    let g = json(&out)["element"].as_str().unwrap().to_string();
    let back = run(&["act", "--preset", "t-i", "--element", &g, "--object", "3+", "--side", "left"]);
    assert_eq!(json(&back)["image"], "9-");
}

#[test]
fn contextual_listing() {
    let out = run(&["contextual", "--preset", "t-i", "--side", "left"]);
    assert_eq!(json(&out)["count"], 0);
    let out = run(&["contextual", "--preset", "t-i", "--side", "right"]);
    assert!(json(&out)["count"].as_u64().unwrap() > 0);
    let out = run(&["contextual", "--preset", "q8-dyads", "--element", "I", "--side", "left"]);
    assert_eq!(json(&out)["contextual"], true);
}

#[test]
fn golden_diffs() {
    let out = run(&["verify", "--preset", "sl23", "--golden"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["mismatches"].as_array().unwrap().len(), 0);

    let out = run(&["verify", "--preset", "d24-of-d12", "--golden"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert!(!v["mismatches"].as_array().unwrap().is_empty());
    assert!(v["golden"]["stabilizer_witness"].is_object());
    assert_eq!(v["computed"]["simply_transitive"], true);
}

#[test]
fn verify_preset_laws() {
    let out = run(&["verify", "--preset", "metacyclic(8,4,7)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["left_action"].as_array().unwrap().len(), 0);
}

#[test]
fn golden_requires_a_preset() {
    let spec = temp_file("unused.json", "{}");
    assert_eq!(code(&run(&["verify", "--golden", "--spec", spec.to_str().unwrap()])), 2);
}

#[test]
fn spec_documents() {
    let out = run(&["build", "--metacyclic", "6,3,-1", "--emit-spec"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let good = temp_file("good.json", &text);
    let out = run(&["verify", "--spec", good.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["valid"], true);
    let out = run(&["identify", "--spec", good.to_str().unwrap()]);
    assert_eq!(json(&out)["name"], "Z3 ⋊ Z4");

    let mut doc: Value = serde_json::from_str(&text).unwrap();
    doc["zeta"][1][1] = Value::from(1);
    let bad = temp_file("bad.json", &doc.to_string());
    let out = run(&["verify", "--spec", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["valid"], false);
    assert_eq!(code(&run(&["build", "--spec", bad.to_str().unwrap()])), 2);
}

#[test]
fn build_summary() {
    let out = run(&["build", "--metacyclic", "4,2,3"]);
    let v = json(&out);
    assert_eq!(v["order"], 8);
    assert_eq!(v["name"], "Q8");
    assert_eq!(v["kind"], "non-split");
    assert!(v.get("table").is_none());
}

#[test]
fn inconsistent_presentation_is_invalid_input() {
    let out = run(&["build", "--metacyclic", "12,1,5"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("p(q-1) = 4 is not 0 mod 12"), "{err}");
}

#[test]
fn rhythm_transforms() {
    let out = run_stdin(&["rhythm", "--op", "1,2", "--input", "-", "--format", "text"], "0 1\n1 1/2\n");
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 2\n3 1\n");

    let out = run_stdin(&["rhythm", "--op", "-1,1", "--side", "right", "--input", "-"], "0 1\n1 2\n");
    assert_eq!(code(&out), 1);
    assert!(json(&out)["overlap"].is_object());

    let out = run_stdin(&["rhythm", "--op", "0,0", "--input", "-"], "0 1\n");
    assert_eq!(code(&out), 2);
}

#[test]
fn twoline_iterations() {
    let out = run(&["twoline", "--op", "1,1;0,1/2,2,0", "--initial", "0,0;1,0,0,1/2", "--iterations", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let onsets: Vec<&str> = v["sequence"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["lines"][0]["onset"].as_str().unwrap())
        .collect();
    assert_eq!(onsets, ["0", "1", "3/2", "5/2"]);
    let out = run(&["twoline", "--op", "1,1;1,1,0,1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_subcommands_and_flags() {
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["act", "--preset", "t-i", "--bogus"])), 2);
    assert_eq!(code(&run(&["act", "--preset", "t-i", "--element", "X9", "--object", "0+"])), 2);
    assert_eq!(code(&run(&["act", "--preset", "t-i", "--element", "T", "--object", "13+"])), 2);
}
