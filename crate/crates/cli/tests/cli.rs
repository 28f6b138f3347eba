use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn superu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superu")).args(args).output().unwrap()
}

fn run_on(args: &[&str], input: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superu")).args(args).arg(input).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_doc(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run_json(args: &[&str], input: &Path) -> (Output, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = Command::new(env!("CARGO_BIN_EXE_superu"))
        .args(args)
        .arg("--json")
        .arg(&path)
        .arg(input)
        .output()
        .unwrap();
    let doc = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    (out, doc)
}

#[test]
fn check_accepts_the_gl11_fixture() {
    let out = run_on(&["check"], &fixture("gl11.json"));
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all axioms pass"));
}

#[test]
fn ext_oracles_agree_on_gl11() {
    let (out, doc) = run_json(&["ext", "--module", "trivial", "--max-degree", "3", "--oracle", "both"], &fixture("gl11.json"));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("oracles agree in every degree"));
    let rows = doc["result"]["rows"].as_array().unwrap();
    let by = |oracle: &str| -> Vec<(u64, u64, u64)> {
        rows.iter()
            .filter(|r| r["oracle"] == oracle)
            .map(|r| (r["degree"].as_u64().unwrap(), r["even"].as_u64().unwrap(), r["odd"].as_u64().unwrap()))
            .collect()
    };
    assert_eq!(by("resolution"), [(0, 1, 0), (1, 0, 0), (2, 1, 0), (3, 0, 2)]);
    assert_eq!(by("bar"), by("resolution"));
}

#[test]
fn complexity_of_trivial_over_ext2() {
    let (out, doc) = run_json(&["complexity", "--module", "trivial", "--depth", "6"], &fixture("ext2.json"));
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("complexity c = 2 (stable)"), "{}", stdout(&out));
    let est = &doc["result"]["estimate"];
    assert_eq!(est["complexity"], 2);
    assert_eq!(est["confidence"], "stable");
    assert_eq!(est["window"], serde_json::json!([4, 8, 12, 16, 20, 24, 28]));
}

#[test]
fn fixtures_match_the_catalog() {
    for (file, name) in [("gl11.json", "gl(1|1)"), ("ext2.json", "abelian(0|2)")] {
        let out = superu(&["catalog", name, "--p", "3"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), std::fs::read_to_string(fixture(file)).unwrap(), "{file}");
    }
}

#[test]
fn manifest_records_parameters_and_input_hash() {
    let (_, doc) = run_json(&["resolve", "--depth", "2"], &fixture("gl11.json"));
    let m = &doc["manifest"];
    assert_eq!(m["command"], "resolve");
    assert_eq!(m["input_sha256"].as_str().unwrap().len(), 64);
    assert_eq!(m["parameters"]["depth"], 2);
    assert_eq!(m["parameters"]["field_ext"], 1);
    assert_eq!(m["engine"]["name"], "superu");
    let dims: Vec<u64> = doc["result"]["terms"].as_array().unwrap().iter().map(|t| t["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [4, 8, 12]);
}

#[test]
fn characteristic_two_is_rejected_with_a_pointer() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_doc(&dir, "p2.json", r#"{"p": 2, "even": ["x"], "odd": []}"#);
    let out = run_on(&["check"], &path);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("/p") && err.contains("p > 2"), "{err}");
}

#[test]
fn unknown_names_and_keys_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_doc(&dir, "bad.json", r#"{"p": 3, "even": ["x"], "odd": [], "bracket": {"x,z": {"x": 1}}}"#);
    let out = run_on(&["check"], &path);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("/bracket/x,z"), "{}", stderr(&out));

    let path = write_doc(&dir, "extra.json", r#"{"p": 3, "even": ["x"], "odd": [], "color": 1}"#);
    let out = run_on(&["check"], &path);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("/color"), "{}", stderr(&out));
}

#[test]
fn malformed_inputs_exit_one_without_a_backtrace() {
    let dir = tempfile::tempdir().unwrap();
    for text in ["", "{", "[1,2]", r#"{"p": "three", "even": [], "odd": []}"#] {
        let path = write_doc(&dir, "m.json", text);
        let out = run_on(&["build"], &path);
        assert_eq!(out.status.code(), Some(1), "{text}");
        assert!(!stderr(&out).contains("panicked"), "{text}");
    }
    let out = run_on(&["check"], &dir.path().join("missing.json"));
    assert_eq!(out.status.code(), Some(1));
    let out = superu(&["check", "--no-such-flag", "x.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn failing_axioms_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_doc(
        &dir,
        "broken.json",
        r#"{"p": 3, "even": ["x"], "odd": ["y"], "bracket": {"x,y": {"y": 1}, "y,x": {"y": 1}}}"#,
    );
    let out = run_on(&["check"], &path);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("fail"), "{}", stdout(&out));
}

#[test]
fn bar_budget_exits_two_and_reports_the_kind() {
    let (out, doc) = run_json(&["ext", "--bar-budget", "5"], &fixture("gl11.json"));
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(doc["error"]["kind"], "budget-exceeded");
    assert_eq!(doc["error"]["exit_code"], 2);
}

#[test]
fn resolution_oracle_ignores_the_bar_budget() {
    let out = run_on(&["ext", "--bar-budget", "5", "--oracle", "resolution"], &fixture("gl11.json"));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn nonsplit_simples_ask_for_a_field_extension() {
    let dir = tempfile::tempdir().unwrap();
    // a torus whose p-map swaps the basis: its characters are only defined over F_9
    let path = write_doc(&dir, "torus.json", r#"{"p": 3, "even": ["a", "b"], "odd": [], "pmap": {"a": {"b": 1}, "b": {"a": 1}}}"#);
    let out = run_on(&["simples"], &path);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--field-ext 2"), "{}", stderr(&out));
    let out = run_on(&["simples", "--field-ext", "2"], &path);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("9 simples"), "{}", stdout(&out));
}

#[test]
fn module_grammar_errors_are_input_errors() {
    for spec in ["simple:99", "tensor:trivial", "carlson:2:0,0,0", "bogus"] {
        let out = run_on(&["resolve", "--module", spec], &fixture("ext2.json"));
        assert_eq!(out.status.code(), Some(1), "{spec}: {}", stderr(&out));
    }
}

#[test]
fn realize_of_independent_classes_is_projective() {
    let (out, doc) = run_json(&["realize", "--class", "2:1,0,0", "--class", "2:0,0,1"], &fixture("ext2.json"));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(doc["result"]["projective"], true);
    assert_eq!(doc["result"]["estimate"]["complexity"], 0);
}

#[test]
fn every_subcommand_succeeds_on_the_fixtures() {
    for cmd in ["check", "build", "gr", "simples", "resolve", "ext", "complexity", "carlson", "properties", "e1page"] {
        for file in ["gl11.json", "ext2.json"] {
            let out = run_on(&[cmd], &fixture(file));
            assert_eq!(out.status.code(), Some(0), "{cmd} {file}: {}", stderr(&out));
            assert!(!stdout(&out).is_empty());
        }
    }
}

#[test]
fn shallow_property_runs_are_inconclusive_not_violations() {
    let out = run_on(&["properties", "--depth", "3"], &fixture("ext2.json"));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("larger --depth"), "{}", stderr(&out));
    let out = run_on(&["properties"], &fixture("ext2.json"));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("0 failures"));
}

#[test]
fn json_output_is_deterministic() {
    let a = run_json(&["properties"], &fixture("ext2.json")).1;
    let b = run_json(&["properties"], &fixture("ext2.json")).1;
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}
