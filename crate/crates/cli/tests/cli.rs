use std::process::{Command, Output};

use serde_json::Value;

fn rainsat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainsat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = rainsat(&all);
    let doc = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (code(&out), doc)
}

#[test]
fn colorable_exit_codes() {
    let (c, doc) = json(&["colorable", "K4", "P4"]);
    assert_eq!(c, 0);
    assert_eq!(doc["outcome"], "COLORABLE");
    assert_eq!(doc["schema"], "rainsat/1");
    assert_eq!(doc["coloring"].as_array().unwrap().len(), 6);

    // GA with its marked edge forces a rainbow C4.
    let ga = "E|mG";
    let (c, doc) = json(&["colorable", ga, "C4"]);
    assert_eq!(doc["outcome"], "UNCOLORABLE", "{doc}");
    assert_eq!(c, 1);
}

#[test]
fn check_verdicts() {
    let (c, doc) = json(&["check", "W8", "C4"]);
    assert_eq!((c, doc["status"].as_str()), (0, Some("SATURATED")));

    let (c, doc) = json(&["check", "E2", "K2"]);
    assert_eq!((c, doc["status"].as_str()), (0, Some("SATURATED")));

    let (c, doc) = json(&["check", "K1_3", "P4"]);
    assert_eq!((c, doc["status"].as_str()), (1, Some("NOT_SATURATED")));
    assert!(doc["failing_edge"].is_array());
    assert!(doc["failing_coloring"].is_array());
}

#[test]
fn exact_numbers() {
    let (c, doc) = json(&["sat", "5", "K3"]);
    assert_eq!((c, doc["value"].as_u64()), (0, Some(4)));
    let (c, doc) = json(&["sat", "6", "C4"]);
    assert_eq!((c, doc["value"].as_u64()), (0, Some(6)));
    let (c, doc) = json(&["satstar", "5", "P4"]);
    assert_eq!((c, doc["value"].as_u64()), (0, Some(4)));
    assert_eq!(doc["patterns"][0], "P4");
}

#[test]
fn constructions_verify() {
    let (c, doc) = json(&["construct", "wheel", "--n", "8", "--verify"]);
    assert_eq!(c, 0);
    assert_eq!(doc["verification"]["status"], "SATURATED");
    assert_eq!(doc["verification"]["coloring_rainbow_free"], true);

    let (c, doc) = json(&["construct", "ehm", "--n", "7", "--r", "4", "--verify"]);
    assert_eq!(c, 0);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 11);

    let (c, doc) = json(&[
        "construct", "ladder", "--pattern", "K3", "--n", "7", "--policy", "order", "--verify",
    ]);
    assert_eq!(c, 0);
    assert_eq!(doc["verification"]["status"], "SATURATED");
    assert_eq!(doc["trace"]["independent_set_sizes"], serde_json::json!([3]));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&rainsat(&["colorable", "!!", "P4"])), 64);
    assert_eq!(code(&rainsat(&["check", "K4"])), 64);
    assert_eq!(code(&rainsat(&["--timeout", "0", "check", "W8", "C4"])), 64);
    assert_eq!(code(&rainsat(&["--threads", "0", "check", "W8", "C4"])), 64);
    assert_eq!(code(&rainsat(&["construct", "p4", "--n", "7"])), 64);
    assert_eq!(code(&rainsat(&["construct", "ladder", "--pattern", "C4", "--n", "9"])), 64);
    assert_eq!(code(&rainsat(&["gadget", "nope"])), 64);
    assert_eq!(code(&rainsat(&["verify-paper", "--only", "nope"])), 64);
    assert_eq!(code(&rainsat(&["--help"])), 0);
    assert_eq!(code(&rainsat(&["--version"])), 0);
}

#[test]
fn gadgets_match_expectation() {
    for kind in ["GA", "GB", "star_chord", "triangle"] {
        assert_eq!(code(&rainsat(&["gadget", kind])), 0, "{kind}");
    }
}

#[test]
fn verify_output_independent_of_threads() {
    let one = rainsat(&["--threads", "1", "--json", "verify-paper", "--only", "p3"]);
    let four = rainsat(&["--threads", "4", "--json", "verify-paper", "--only", "p3"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let doc: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(doc["report"]["claims"][0]["id"], "p3");
}
