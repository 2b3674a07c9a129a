use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use turan::report::SCHEMA_JSON;

fn turan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("turan-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn validate(doc: &Value) {
    let schema: Value = serde_json::from_str(SCHEMA_JSON).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}");
}

fn json_of(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = turan(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    validate(&doc);
    doc
}

#[test]
fn every_command_emits_schema_valid_json() {
    let doc = json_of(&["construct", "7*T4(6)"]);
    assert_eq!(doc["result"]["graph"]["order"], 42);

    let doc = json_of(&["count", "--graph", "T4(8)", "--pattern", "K3", "--cliques", "4"]);
    assert_eq!(doc["result"][0]["copies"], "32");
    assert_eq!(doc["result"][0]["cliques"][0]["count"], "16");

    let doc = json_of(&["count", "--graph", "split(2,4)", "--pattern", "split(2,2)", "--rooted", "0,1"]);
    assert_eq!(doc["result"][0]["copies"], "6");

    let doc = json_of(&["verify-free", "--graph", "K5", "--u", "1", "--delta", "5", "--omega", "4"]);
    assert_eq!(doc["result"][0]["passes"], false);
    assert_eq!(doc["result"][0]["violations"][0]["kind"], "clique");

    let doc = json_of(&["bounds", "--H", "K3", "--u", "1", "--delta", "6", "--omega", "4", "--grid", "--trend", "8"]);
    let rows = doc["result"].as_array().unwrap();
    assert_eq!(rows.len(), 5 + 4 + 3);
    assert!(rows.iter().filter(|r| r["divisible"] == true).all(|r| r["equal"] == true));

    let doc = json_of(&["localize", "--graph", "K5", "--H", "K3", "--u", "1", "--per-copy"]);
    let r = &doc["result"][0];
    assert_eq!(r["weighted_sum"], serde_json::json!({"num": "5", "den": "3"}));
    assert_eq!(r["equality"], true);
    assert_eq!(r["copies"].as_array().unwrap().len(), 10);

    let doc = json_of(&["search", "--n", "5", "--H", "K3", "--omega", "2"]);
    assert_eq!(doc["result"]["objective"], "0");

    let doc = json_of(&["reproduce-examples"]);
    assert_eq!(doc["result"]["passed"], true);

    let doc = json_of(&["verify", "--level", "quick"]);
    assert_eq!(doc["result"]["passed"], true);
}

#[test]
fn text_output_is_aligned_tables() {
    let out = turan(&["construct", "K4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("graph6         C~"), "{text}");
}

#[test]
fn g6_files_feed_host_graphs() {
    let dir = scratch("g6");
    let path = dir.join("hosts.g6");
    std::fs::write(&path, "C~\nD~{\n").unwrap();
    let doc = json_of(&["--g6", path.to_str().unwrap(), "count", "--pattern", "K3"]);
    let copies: Vec<&str> = doc["result"].as_array().unwrap().iter().map(|r| r["copies"].as_str().unwrap()).collect();
    assert_eq!(copies, vec!["4", "10"]);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn search_dump_writes_extremal_graphs() {
    let dir = scratch("dump");
    let path = dir.join("best.g6");
    let doc = json_of(&["search", "--n", "6", "--H", "K3", "--omega", "3", "--dump", path.to_str().unwrap()]);
    assert_eq!(doc["result"]["objective"], "8");
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    std::fs::remove_dir_all(dir).unwrap();
}

fn replay_ok(manifest: &Path) {
    let out = turan(&["--json", "replay", manifest.to_str().unwrap()]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    validate(&doc);
    assert!(out.status.success(), "{doc}");
    assert_eq!(doc["result"]["identical"], true);
}

#[test]
fn manifests_replay_byte_identical() {
    let dir = scratch("replay");
    let report = dir.join("r.json");
    let out = turan(&[
        "--json",
        "--threads",
        "3",
        "--out",
        report.to_str().unwrap(),
        "search",
        "--n",
        "6",
        "--H",
        "K3",
        "--delta",
        "3",
    ]);
    assert!(out.status.success());
    let manifest = dir.join("r.json.manifest.json");
    let m: Value = serde_json::from_slice(&std::fs::read(&manifest).unwrap()).unwrap();
    assert_eq!(m["command"], "search");
    assert!(m["timestamp"].as_str().unwrap().parse::<u64>().is_ok());
    replay_ok(&manifest);

    // a different thread count gives the same bytes
    let again = dir.join("again.json");
    turan(&[
        "--json",
        "--threads",
        "1",
        "--out",
        again.to_str().unwrap(),
        "search",
        "--n",
        "6",
        "--H",
        "K3",
        "--delta",
        "3",
    ]);
    assert_eq!(std::fs::read(&report).unwrap(), std::fs::read(&again).unwrap());

    // tampering with the report is detected
    std::fs::write(&report, b"{}").unwrap();
    let edited = dir.join("edited.manifest.json");
    let mut m2 = m.clone();
    m2["output_sha256"] = Value::String("0".repeat(64));
    std::fs::write(&edited, serde_json::to_vec(&m2).unwrap()).unwrap();
    let out = turan(&["replay", edited.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn full_suite_replays_byte_identical() {
    let dir = scratch("suite");
    let report = dir.join("suite.json");
    let out = turan(&["--json", "--out", report.to_str().unwrap(), "verify", "--level", "full"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&std::fs::read(&report).unwrap_or_default()));
    replay_ok(&dir.join("suite.json.manifest.json"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn manifest_records_input_hashes() {
    let dir = scratch("inputs");
    let g6 = dir.join("g.g6");
    std::fs::write(&g6, "D~{\n").unwrap();
    let report = dir.join("o.txt");
    let out = turan(&["--g6", g6.to_str().unwrap(), "--out", report.to_str().unwrap(), "verify-free", "--omega", "4"]);
    assert!(out.status.success());
    let manifest = dir.join("o.txt.manifest.json");
    let m: Value = serde_json::from_slice(&std::fs::read(&manifest).unwrap()).unwrap();
    assert_eq!(m["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    replay_ok(&manifest);
    std::fs::write(&g6, "C~\n").unwrap();
    let out = turan(&["--json", "replay", manifest.to_str().unwrap()]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["changed_inputs"].as_array().unwrap().len(), 1);
    assert_eq!(doc["result"]["identical"], false);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn errors_and_failures_have_distinct_exit_codes() {
    assert_eq!(turan(&["construct", "Q7"]).status.code(), Some(2));
    assert_eq!(turan(&["count", "--pattern", "K3"]).status.code(), Some(2));
    assert_eq!(turan(&["bounds", "--H", "K3", "--u", "1", "--delta", "2", "--omega", "4"]).status.code(), Some(2));
    assert_eq!(turan(&["verify", "--criterion", "11"]).status.code(), Some(2));
    assert_eq!(turan(&["search", "--n", "10", "--H", "K3"]).status.code(), Some(2));
}
