//! End-to-end runs of the `tensalg` binary.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/paper_example.json");

fn tensalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tensalg")).args(args).output().expect("binary runs")
}

/// The JSON block is the last top-level object on stdout.
fn result_block(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    let start = text.rfind("\n{").map(|i| i + 1).unwrap_or(0);
    serde_json::from_str(&text[start..]).unwrap_or_else(|e| panic!("no JSON block ({e}) in:\n{text}"))
}

fn workspace_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn paper_example_succeeds() {
    let out = tensalg(&["paper-example"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("lax: yes, injective: no"));
    let r = result_block(&out);
    assert_eq!(r["ok"], true);
    let names: Vec<&str> = r["homs"].as_array().unwrap().iter().map(|h| h["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["f1", "f7", "f8"]);
}

#[test]
fn quiet_prints_only_the_block() {
    let out = tensalg(&["paper-example", "--quiet"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.trim_start().starts_with('{'));
    assert_eq!(result_block(&out)["ok"], true);
}

#[test]
fn empty_workspace_validates() {
    let f = workspace_file("{}");
    let out = tensalg(&["validate", "-w", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(result_block(&out)["objects"]["modules"], 0);
}

#[test]
fn missing_reference_is_an_error() {
    let f = workspace_file(
        r#"{"frames": [{"name": "J", "quantale": "nowhere", "points": ["t"], "r": [["1"]]}]}"#,
    );
    let out = tensalg(&["validate", "-w", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unknown quantale \"nowhere\""), "{err}");
}

#[test]
fn validation_errors_forward_the_witness() {
    let f = workspace_file(
        r#"{"quantales": [{"name": "Q", "elements": ["0","1"], "leq": [[1,1],[0,1]],
            "tensor": [["0","0"],["0","0"]], "unit": "1"}]}"#,
    );
    let out = tensalg(&["validate", "-w", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unit law fails"), "{err}");
}

#[test]
fn parse_errors_report_a_position() {
    let f = workspace_file("{\n  \"quantales\": [\n    oops\n  ]\n}");
    let out = tensalg(&["validate", "-w", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn homs_into_a_one_element_module() {
    let f = workspace_file(
        r#"{
          "quantales": [{"name": "V", "elements": ["0","b","1"], "leq": [[1,1,1],[0,1,1],[0,0,1]],
                         "tensor": [["0","0","0"],["0","b","1"],["0","1","1"]], "unit": "b"}],
          "modules": [
            {"name": "A", "quantale": "V", "elements": ["0","a","b","c","1"],
             "leq": [[1,1,1,1,1],[0,1,0,0,1],[0,0,1,0,1],[0,0,0,1,1],[0,0,0,0,1]],
             "action": [["0","0","0","0","0"],["0","a","b","c","1"],["0","a","1","1","1"]]},
            {"name": "P", "quantale": "V", "elements": ["*"], "leq": [[1]], "action": [["*"],["*"],["*"]]}
          ]
        }"#,
    );
    let out = tensalg(&["homs", "A", "P", "-w", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(result_block(&out)["count"], 1);
}

#[test]
fn validate_output_reloads_to_the_same_document() {
    let out = tensalg(&["validate", "-w", EXAMPLE, "-q"]);
    assert!(out.status.success());
    let doc = result_block(&out)["document"].clone();
    let f = workspace_file(&serde_json::to_string(&doc).unwrap());
    let again = tensalg(&["validate", "-w", f.path().to_str().unwrap(), "-q"]);
    assert!(again.status.success());
    assert_eq!(result_block(&again)["document"], doc);
    let original: Value = serde_json::from_str(&std::fs::read_to_string(EXAMPLE).unwrap()).unwrap();
    assert_eq!(doc, original);
}

#[test]
fn tensor_output_module_reloads() {
    let out = tensalg(&["tensor", "J", "H", "-w", EXAMPLE, "-q"]);
    assert!(out.status.success());
    let r = result_block(&out);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(EXAMPLE).unwrap()).unwrap();
    doc["modules"].as_array_mut().unwrap().push(r["module"].clone());
    let f = workspace_file(&doc.to_string());
    let again = tensalg(&["validate", "-w", f.path().to_str().unwrap(), "-q"]);
    assert!(again.status.success(), "{}", String::from_utf8_lossy(&again.stderr));
    assert_eq!(result_block(&again)["objects"]["modules"], 3);
}

#[test]
fn fj_and_hom_frame_run() {
    let out = tensalg(&["fj", "A", "J", "-w", EXAMPLE, "-q"]);
    assert!(out.status.success());
    assert_eq!(result_block(&out)["size"], 25);
    let out = tensalg(&["hom-frame", "H", "L", "-w", EXAMPLE, "-q"]);
    assert!(out.status.success());
    assert_eq!(result_block(&out)["r"][2][1], "1");
}

#[test]
fn check_exit_code_reflects_failures() {
    let out = tensalg(&["check", "--suite", "nuclei", "--count", "5", "--seed", "11", "-q"]);
    assert!(out.status.success());
    let r = result_block(&out);
    assert_eq!(r["counts"]["failed"], 0);
    assert_eq!(r["seed"], 11);
}

#[test]
fn out_writes_the_block() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("result.json");
    let out = tensalg(&["paper-example", "-q", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, result_block(&out));
}

#[test]
fn carrier_cap_rejects_large_modules() {
    let out = tensalg(&["validate", "-w", EXAMPLE, "--max-carrier", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("above the cap"));
}
