use std::process::Command;

use serde_json::Value;

fn properclass(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_properclass")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out) = properclass(&a);
    (code, serde_json::from_str(&out).unwrap_or(Value::Null))
}

#[test]
fn bbar_p3_betti() {
    let (code, v) = json(&["bbar", "--group", "p3"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["betti"], serde_json::json!([1, 0, 1]));
    assert_eq!(v["shape"], "S2");
}

#[test]
fn unknown_group_exits_3() {
    let (code, v) = json(&["bbar", "--group", "nosuch"]);
    assert_eq!(code, 3);
    assert!(v["error"].as_str().unwrap().contains("nosuch"));
    assert_eq!(properclass(&["orbitcat", "--group", "Q8"]).0, 3);
    assert_eq!(properclass(&["bbar"]).0, 3);
}

#[test]
fn cell_bound_exits_2() {
    let (code, _) = json(&["orbitcat", "--group", "D4", "--max-cells", "100"]);
    assert_eq!(code, 2);
}

#[test]
fn text_and_json_report_the_same_numbers() {
    let (_, v) = json(&["colimit", "--op", "wedge", "--a", "sphere", "--b", "circle"]);
    let (_, text) = properclass(&["colimit", "--op", "wedge", "--a", "sphere", "--b", "circle"]);
    assert!(text.contains(&format!("simplices = {}", v["simplices"])), "{text}");
    assert!(text.contains("betti = [1, 1, 1]"), "{text}");
}

#[test]
fn out_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, stdout) = properclass(&["group", "S3", "--subgroups", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["subgroups"].as_array().unwrap().len(), 6);
}

#[test]
fn group_file_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d4.txt");
    std::fs::write(&path, "perm: (1 2 3 4)\nperm: (1 3)\n").unwrap();
    let (code, v) = json(&["orbitcat", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["group_order"], 8);
    assert_eq!(v["acyclic"], true);
}

#[test]
fn pushout_and_telescope() {
    let (code, v) = json(&["colimit", "--op", "pushout", "--a", "interval", "--b", "interval", "--glue", "0:0,1:1"]);
    assert_eq!(code, 0);
    assert_eq!(v["betti"], serde_json::json!([1, 1]));
    let (_, v) = json(&["colimit", "--op", "telescope", "--a", "circle", "--stages", "3"]);
    assert_eq!(v["betti"][1], 1);
}

#[test]
fn comma_reports_the_failing_overcategory() {
    let (code, v) = json(&["comma", "--complex", "rp2", "--sigma", "0"]);
    assert_eq!(code, 1);
    assert_eq!(v["reports"][0]["pi1_order"], 2);
    assert_eq!(v["all_acyclic"], false);
}

#[test]
fn verify_items() {
    let (code, v) = json(&["verify", "--suite", "paper", "--only", "A1,A9"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], 2);
    let (code, _) = json(&["verify", "--only", "A12"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_is_deterministic_given_a_seed() {
    let run = || json(&["verify", "--only", "A13", "--seed", "11"]).1["items"][0]["values"].clone();
    let first = run();
    assert_eq!(first["seed"], 11);
    assert_eq!(first, run());
}
