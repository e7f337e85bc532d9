use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpp-cones")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn cone_report_for_unit_square() {
    let report = json(&["cone", "--poset", "grid:2x2", "--path", "0"]);
    let cone = &report["result"]["cones"][0];
    assert_eq!(cone["extreme_rays"].as_array().unwrap().len(), 4);
    assert_eq!(cone["facet_count"], 4);
    let tags: Vec<&str> = cone["facet_classification"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["tag"].as_str().unwrap())
        .collect();
    assert_eq!(tags.iter().filter(|t| **t == "redundant").count(), 1);
    assert_eq!(report["tool"], "lpp-cones");
    assert_eq!(report["config"]["command"]["subcommand"], "cone");
}

#[test]
fn path_selectors() {
    let by_labels = json(&["cone", "--poset", "grid:2x2", "--path", r#"["(1,1)","(1,2)","(2,2)"]"#]);
    let by_indices = json(&["cone", "--poset", "grid:2x2", "--path", "[0,2,3]"]);
    assert_eq!(by_labels["result"], by_indices["result"]);
    assert_eq!(by_labels["result"]["cones"][0]["index"], 1);
    let all = json(&["cone", "--poset", "grid:2x3"]);
    assert_eq!(all["result"]["cones"].as_array().unwrap().len(), 3);
    assert_eq!(run(&["cone", "--poset", "grid:2x2", "--path", "9"]).status.code(), Some(1));
    assert_eq!(run(&["cone", "--poset", "grid:2x2", "--path", "[0,3]"]).status.code(), Some(1));
}

#[test]
fn exact_path_probabilities() {
    let report = json(&["pathprob", "--poset", "grid:2x2", "--law", "exp", "--mode", "exact"]);
    let probs: Vec<&str> = report["result"]["paths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["prob"].as_str().unwrap())
        .collect();
    assert_eq!(probs, vec!["1/2", "1/2"]);
    let skewed = json(&["pathprob", "--poset", "grid:2x2", "--rates", "1,2,1,1"]);
    assert_eq!(skewed["result"]["total"], "1");
}

#[test]
fn monte_carlo_report_shape() {
    let report = json(&["pathprob", "--poset", "grid:2x2", "--law", "uniform", "--mode", "mc", "--reps", "1000", "--seed", "1"]);
    let r = &report["result"];
    assert_eq!(r["tie_discards"], 0);
    assert_eq!(r["seed"], 1);
    let total: u64 = r["paths"].as_array().unwrap().iter().map(|p| p["count"].as_u64().unwrap()).sum();
    assert_eq!(total, 1000);
    assert!(r["paths"][0]["prob"]["se"].as_f64().unwrap() > 0.0);
    // Simulation needs a seed.
    assert_eq!(run(&["pathprob", "--poset", "grid:2x2", "--mode", "mc"]).status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    let out = run(&["verify", "--poset", "grid:2x3", "--suite", "facets"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["passed"], true);
    let checks = report["result"]["suites"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["agree"] == true));
    assert_eq!(run(&["verify", "--poset", "young:3,2", "--suite", "all", "--samples", "3"]).status.code(), Some(0));
}

#[test]
fn simulation_statistics() {
    let report = json(&["simulate", "--poset", "grid:2x2", "--law", "uniform", "--reps", "200", "--seed", "5"]);
    assert_eq!(report["result"]["correlation"], Value::Null);
    assert_eq!(report["result"]["deviation_histogram"][0][1], 200);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["paths"]).status.code(), Some(1));
    assert_eq!(run(&["paths", "--poset", "grid:0x2"]).status.code(), Some(1));
    assert_eq!(run(&["paths", "--poset", "/nonexistent/poset.json"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn guards_fail_fast() {
    let out = run(&["extensions", "--poset", "grid:5x5", "--max-extension-vertices", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("25"));
    let out = Command::new(env!("CARGO_BIN_EXE_lpp-cones"))
        .args(["paths", "--poset", "grid:3x3"])
        .env("LPP_CONES_MAX_ITEMS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn poset_files() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let good = dir.join("diamond.json");
    std::fs::write(&good, r#"{"labels": ["a", "b", "c", "d"], "covers": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]}"#).unwrap();
    let report = json(&["paths", "--poset", good.to_str().unwrap()]);
    assert_eq!(report["result"]["count"], 2);
    let bad = dir.join("broken.json");
    std::fs::write(&bad, r#"{"labels": ["a"], "covers": [["a", "zz"]]}"#).unwrap();
    assert_eq!(run(&["paths", "--poset", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn table_output() {
    let out = run(&["--table", "extensions", "--poset", "grid:2x2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("e(P) = 2"));
}
