use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkav"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "pf321", "--n", "3"]).trim(), "15");
    assert_eq!(
        stdout(&["count", "pf-nonmonotone", "--n", "3", "--pattern", "132"]).trim(),
        "13"
    );
    assert_eq!(
        stdout(&["count", "sylv-classes", "--content", "2,2,1"]).trim(),
        "7"
    );
    assert_eq!(stdout(&["count", "dyck-ascent", "--alpha", "2,3,2"]).trim(), "7");
    assert_eq!(
        stdout(&["count", "words-monotone", "--n", "3", "--k", "3"]).trim(),
        "26"
    );
}

#[test]
fn envelope_fields() {
    let v = json(&[
        "count",
        "pf-nonmonotone",
        "--n",
        "5",
        "--pattern",
        "231",
        "--oracle",
    ]);
    assert_eq!(v["command"], "count");
    assert_eq!(v["parameters"]["n"], "5");
    assert_eq!(v["parameters"]["pattern"], "231");
    assert_eq!(v["value"], v["oracle"]);
    assert_eq!(v["agreement"], true);
    assert!(v["elapsed_ms"].is_u64());

    let plain = json(&["count", "pf321", "--n", "4"]);
    assert!(plain.get("oracle").is_none());
    assert!(plain.get("agreement").is_none());
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "growth",
        "--n-max",
        "4",
        "--samples",
        "500",
        "--seed",
        "7",
    ];
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v.to_string()
    };
    assert_eq!(strip(json(&args)), strip(json(&args)));
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["count", "pf321"],
        vec!["count", "pf-nonmonotone", "--n", "30", "--pattern", "132"],
        vec!["count", "pf-nonmonotone", "--n", "4", "--pattern", "123"],
        vec!["count", "pf321", "--n", "9", "--oracle"],
        vec!["show", "rothe", "132"],
        vec!["verify", "nonsense"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_passes() {
    let out = stdout(&["verify", "all", "--n-max", "4", "--samples", "200"]);
    assert!(out.lines().last().unwrap().ends_with(" 0 failed"), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn growth_outputs() {
    assert_eq!(
        stdout(&["growth", "--dir", "dec", "--r", "3", "--limit-only"]).trim(),
        "27/2"
    );
    assert_eq!(
        stdout(&["growth", "--dir", "inc", "--r", "3", "--limit-only"]).trim(),
        "8"
    );
    let csv = stdout(&["growth", "--n", "1,2,3", "--csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,count,root");
    assert!(lines[3].starts_with("3,26,"));
}

#[test]
fn show_objects() {
    assert_eq!(
        stdout(&["show", "bst", "155432"]),
        stdout(&["show", "bst", "554312"])
    );
    assert_ne!(
        stdout(&["show", "bst", "155432"]),
        stdout(&["show", "bst", "432115"])
    );
    let rsk = json(&["show", "rsk", "233561635"]);
    assert_eq!(rsk["value"]["shape"], serde_json::json!([6, 3]));
    let rothe = json(&["show", "rothe", "45637812"]);
    assert_eq!(rothe["value"]["path"], "UUUUUDDDUDDDUUDD");
    let classes = json(&["show", "classes", "2,2,1"]);
    assert_eq!(classes["value"]["class_count"], 7);
    let dyck = json(&["show", "dyck", "2,2,1"]);
    assert_eq!(dyck["value"]["paths"].as_array().unwrap().len(), 5);
}
