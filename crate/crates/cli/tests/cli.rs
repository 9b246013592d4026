use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use equicoh::fixtures::g1;
use equicoh::EquivariantClass;
use serde_json::Value;

fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(rel)
}

fn equicoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicoh"))
        .args(args)
        .env_remove("EQUICOH_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = equicoh(args);
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_exit_codes() {
    let g = fixture("graphs/g1.json");
    assert_eq!(run(&["validate", path(&g)]).0, 0);
    assert_eq!(run(&["validate", "no/such/file.json"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let mut doc: Value = serde_json::from_str(&fs::read_to_string(&g).unwrap()).unwrap();
    doc["edges"][1]["ell"] = 5.into();
    let broken = dir.path().join("broken.json");
    fs::write(&broken, doc.to_string()).unwrap();
    let (code, text) = run(&["validate", path(&broken)]);
    assert_eq!(code, 1);
    assert!(text.contains("edge B-C"), "{text}");

    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{\"kind\": \"graph\", ").unwrap();
    assert_eq!(run(&["validate", path(&garbage)]).0, 2);
}

#[test]
fn validate_dispatches_on_kind() {
    assert_eq!(run(&["validate", path(&fixture("xrays/x2_g1.json"))]).0, 0);
    assert_eq!(run(&["xray-validate", path(&fixture("xrays/x2_g1.json"))]).0, 0);
    // a graph is not an x-ray
    assert_eq!(run(&["xray-validate", path(&fixture("graphs/g1.json"))]).0, 2);
}

#[test]
fn poincare_tables() {
    let last = |args: &[&str]| run(args).1.lines().last().unwrap().to_string();
    assert_eq!(last(&["poincare", path(&fixture("graphs/g1.json"))]), "1 0 1 0 1");
    assert_eq!(
        last(&["poincare", "--equivariant", "--max-degree", "4", path(&fixture("graphs/g2_1.json"))]),
        "1 2 3 4 4"
    );
    let g3 = last(&["poincare", "--equivariant", "--max-degree", "2", path(&fixture("graphs/g3.json"))]);
    assert_eq!(g3.split(' ').nth(2), Some("2"));
    assert_eq!(
        last(&["poincare", "--fixed", path(&fixture("graphs/g2_1.json"))]),
        "2 4 2"
    );
}

#[test]
fn poincare_json_lists_coefficients() {
    let (code, out) = run(&["--format", "json", "poincare", "--equivariant", "--max-degree", "6", path(&fixture("graphs/g1.json"))]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!([1, 0, 2, 0, 3, 0, 3]));
}

#[test]
fn basis_rows_and_json_round_trip() {
    let g = fixture("graphs/g1.json");
    let (code, text) = run(&["basis", "--degree", "2", path(&g)]);
    assert_eq!(code, 0);
    assert_eq!(text.lines().filter(|l| l.trim_start().starts_with('#')).count(), 2);

    let (_, out) = run(&["--format", "json", "basis", "--degree", "2", path(&g)]);
    let docs: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(docs.len(), 2);
    let graph = g1();
    for doc in docs {
        let (c, _) = EquivariantClass::from_json(&doc.to_string(), &graph.catalogue()).unwrap();
        assert!(equicoh::s1::check_membership(&graph, &c).unwrap().is_member());
    }
}

#[test]
fn max_degree_cutoff_from_flag_and_env() {
    let g = fixture("graphs/g1.json");
    assert_eq!(run(&["basis", "--degree", "13", path(&g)]).0, 2);
    assert_eq!(run(&["basis", "--degree", "13", "--max-degree", "13", path(&g)]).0, 0);
    let out = Command::new(env!("CARGO_BIN_EXE_equicoh"))
        .args(["basis", "--degree", "4", path(&g)])
        .env("EQUICOH_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["xray-basis", "--degree", "9", path(&fixture("xrays/x2_g1.json"))]).0, 2);
}

#[test]
fn check_verdicts() {
    let (code, text) = run(&["check", path(&fixture("graphs/g2_0.json")), path(&fixture("classes/g2_0/constant.json"))]);
    assert_eq!((code, text.trim()), (0, "member"));
    let (code, text) = run(&["check", path(&fixture("graphs/g1.json")), path(&fixture("classes/g1/nonmember_deg2.json"))]);
    assert_eq!(code, 1);
    assert!(text.contains("[abbv-degree2]"), "{text}");
    let (code, _) = run(&[
        "check",
        "--lambda",
        "1,1",
        path(&fixture("graphs/g2_0.json")),
        path(&fixture("classes/g2_0/constant_rank2.json")),
    ]);
    assert_eq!(code, 0);
}

#[test]
fn class_addressing_errors_are_semantic() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.json");
    fs::write(&c, r#"{"kind":"class","components":{"A":{},"B":{}}}"#).unwrap();
    let (code, out) = run(&["--format", "json", "check", path(&fixture("graphs/g1.json")), path(&c)]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["code"], "addressing");
}

#[test]
fn localize_flags_negative_powers() {
    let g = fixture("graphs/g1.json");
    let (code, text) = run(&["localize", path(&g), path(&fixture("classes/g1/nonmember_deg2.json"))]);
    assert_eq!(code, 0);
    assert!(text.contains("negative powers"), "{text}");
    let (_, out) = run(&["--format", "json", "localize", path(&g), path(&fixture("classes/g1/member_deg2.json"))]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["polynomial"], true);
}

#[test]
fn euler_of_the_interior_vertex() {
    let g = fixture("graphs/g1.json");
    assert_eq!(run(&["euler", path(&g), "--component", "B"]).1.trim(), "-1 * u^2");
    assert_eq!(run(&["euler", path(&g), "--component", "B", "--inverse"]).1.trim(), "-1 * u^-2");
    let (code, out) = run(&["--format", "json", "euler", path(&g), "--component", "nope"]);
    assert_eq!(code, 1);
    assert!(serde_json::from_str::<Value>(&out).unwrap()["error"]["code"].is_string());
}

#[test]
fn xray_check_verdicts() {
    let x = fixture("xrays/x2_g1.json");
    assert_eq!(run(&["xray-check", path(&x), path(&fixture("classes/x2_g1/member_deg2.json"))]).0, 0);
    assert_eq!(run(&["xray-check", path(&x), path(&fixture("classes/x2_g1/nonmember_deg2.json"))]).0, 1);
}

#[test]
fn batch_mode_isolates_failures() {
    let dir = fixture("classes/g1");
    let (code, out) = run(&["--format", "json", "check", path(&fixture("graphs/g1.json")), path(&dir)]);
    assert_eq!(code, 1);
    let docs: Vec<Value> = serde_json::from_str(&out).unwrap();
    let exits: Vec<i64> = docs.iter().map(|d| d["exit"].as_i64().unwrap()).collect();
    assert_eq!(exits, [0, 1, 1]);

    let (_, out) = run(&["--format", "json", "--fail-fast", "check", path(&fixture("graphs/g1.json")), path(&dir)]);
    let docs: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(docs.len(), 2);

    let (code, text) = run(&["validate", path(&fixture("graphs"))]);
    assert_eq!(code, 0);
    assert_eq!(text.matches("== ").count(), 9);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["basis", path(&fixture("graphs/g1.json"))]).0, 2);
    assert_eq!(run(&["--format", "xml", "validate", path(&fixture("graphs/g1.json"))]).0, 2);
}
