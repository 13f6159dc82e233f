use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run_with(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_confpoly"));
    cmd.args(args).env_remove("CONFPOLY_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_with(args, &[])
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Successful run; trimmed stdout.
fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out).trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&ok(&all)).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

#[test]
fn psi_examples() {
    let ban4 = data("ban4.graph");
    assert_eq!(ok(&["psi", &ban4]), "A1*A2*A3 + A1*A2*A4 + A1*A3*A4 + A2*A3*A4");
    for method in ["forests", "det", "plucker", "all"] {
        assert_eq!(ok(&["psi", &ban4, "--method", method]), "A1*A2*A3 + A1*A2*A4 + A1*A3*A4 + A2*A3*A4");
    }
    assert_eq!(ok(&["psi", &data("cfg1.conf")]), "A1*A2 + 4*A1*A3 + 4*A2*A3");
    assert_eq!(code(&["psi", &data("path.graph"), "--method", "det"]), Some(2));
    assert_eq!(ok(&["psi", &data("path.graph"), "--method", "forests"]), "1");
    assert_eq!(code(&["psi", &data("cfg1.conf"), "--method", "forests"]), Some(2));
}

#[test]
fn psi_json_schema() {
    let doc = json(&["psi", &data("cfg1.conf")]);
    assert_eq!(doc["v"], 1);
    assert_eq!(doc["polynomial"], "A1*A2 + 4*A1*A3 + 4*A2*A3");
    assert_eq!(doc["coefficients"]["A1*A3"], "4");
    assert_eq!(doc["methods"], serde_json::json!(["det", "plucker"]));
}

#[test]
fn phi_examples() {
    let ban2 = data("ban2.graph");
    assert_eq!(ok(&["phi", &ban2, &data("ban2_p1.mom")]), "A1*A2");
    assert_eq!(ok(&["phi", &ban2, &data("ban2_p2.mom"), "--method", "cutsets"]), "4*A1*A2");
    assert_eq!(ok(&["phi", &ban2, &data("ban2_p2.mom"), "--method", "config"]), "4*A1*A2");
    assert_eq!(code(&["phi", &ban2, &data("zero.mom")]), Some(2));
    assert_eq!(code(&["phi", &ban2, &data("bad.mom")]), Some(2));
    assert_eq!(code(&["phi", &data("cfg1.conf"), &data("ban2_p1.mom")]), Some(2));
}

#[test]
fn plucker_and_restrict() {
    assert_eq!(ok(&["plucker", &data("cfg1.conf")]), "{1,2} -1\n{1,3} 2\n{2,3} 2");
    let doc = json(&["plucker", &data("ban2.graph"), "--momentum", &data("ban2_p1.mom")]);
    assert_eq!(doc["dim"], 2);
    assert_eq!(doc["coordinates"].as_object().unwrap().len(), 1);

    let restricted = ok(&["restrict", &data("cfg1.conf"), "--edges", "2,3"]);
    assert!(restricted.ends_with("psi: A2 + 4*A3"), "{restricted}");
    assert_eq!(ok(&["restrict", &data("cfg1.conf"), "--edges", "1"]), "zero subspace\npsi: 1");
    let by_name = json(&["restrict", &data("ban4.graph"), "--edges", "e1,e2"]);
    assert_eq!(by_name["polynomial"], "A1 + A2");
    assert_eq!(code(&["restrict", &data("cfg1.conf"), "--edges", "4"]), Some(2));
}

#[test]
fn restricted_configuration_round_trips() {
    let doc = json(&["restrict", &data("cfg1.conf"), "--edges", "2,3"]);
    let text = doc["configuration"].as_str().unwrap();
    let path = std::env::temp_dir().join(format!("confpoly-round-trip-{}.conf", std::process::id()));
    std::fs::write(&path, text).unwrap();
    let psi = ok(&["psi", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(psi, "A2 + 4*A3");
}

#[test]
fn analyze_examples() {
    let doc = json(&["analyze", &data("ban4.graph"), "--point", "1,0,0,0", "--tangent-cone"]);
    let r = &doc["report"];
    assert_eq!((r["rank"].as_u64(), r["corank"].as_u64(), r["multiplicity"].as_u64()), (Some(1), Some(2), Some(2)));
    assert_eq!(r["theorem_ok"], true);
    assert_eq!(r["tangent_cone"], "A2*A3 + A2*A4 + A3*A4");
    assert_eq!(r["point"], serde_json::json!(["1", "0", "0", "0"]));

    let r = &json(&["analyze", &data("cfg1.conf"), "--point", "1,1,1", "--tangent-cone"])["report"];
    assert_eq!(r["multiplicity"], 0);
    assert_eq!(r["psi_value"], "9");
    assert!(r["tangent_cone"].is_null());

    let r = &json(&["analyze", &data("triv3.conf"), "--point", "0,0,1"])["report"];
    assert_eq!((r["corank"].as_u64(), r["multiplicity"].as_u64()), (Some(2), Some(2)));
    assert_eq!(r["chart"], "A3");

    let r = &json(&["analyze", &data("cfg1.conf"), "--point", "-1/2,1,0"])["report"];
    assert_eq!(r["point"][0], "-1/2");

    assert_eq!(code(&["analyze", &data("cfg1.conf"), "--point", "1,1"]), Some(2));
    assert_eq!(code(&["analyze", &data("cfg1.conf"), "--point", "0,0,0"]), Some(2));
    assert_eq!(code(&["analyze", &data("cfg1.conf"), "--point", "1,x,0"]), Some(2));
}

#[test]
fn tangent_cone_examples() {
    assert_eq!(
        ok(&["tangent-cone", &data("ban4.graph"), "--point", "1,0,0,0"]),
        "order: 2\nchart: A1\naffine: A2*A3 + A2*A4 + A3*A4\nprojective: A2*A3 + A2*A4 + A3*A4"
    );
    let doc = json(&["tangent-cone", &data("triv3.conf"), "--point", "0,0,1"]);
    assert_eq!(doc["polynomial"], "A1*A2");
    assert_eq!(doc["chart"], "A3");
    assert_eq!(code(&["tangent-cone", &data("cfg1.conf"), "--point", "1,1,1"]), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&[]), Some(2));
    assert_eq!(code(&["psi"]), Some(2));
    assert_eq!(code(&["psi", &data("cfg1.conf"), "--method", "magic"]), Some(2));
    assert_eq!(code(&["psi", &data("missing.conf")]), Some(2));
    assert_eq!(code(&["psi", &data("broken.conf")]), Some(2));
    let out = run_with(&["verify", "--suite", "theorem"], &[("CONFPOLY_THREADS", "0")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for suite in ["matrixtree", "secondpoly", "restriction", "theorem", "cones", "generic"] {
        let out = ok(&["verify", "--suite", suite, "--trials", "12", "--max-edges", "7"]);
        assert!(out.contains("12 trials, 12 passed"), "{suite}: {out}");
    }
}

#[test]
fn theorem_suite_default_run() {
    let doc = json(&["verify", "--suite", "theorem", "--seed", "7", "--trials", "50", "--max-edges", "8"]);
    assert_eq!(doc["passed"], 50);
    assert!(doc["failures"].as_array().unwrap().is_empty());
}

#[test]
fn restriction_suite_on_cfg1_reports_unit_constants() {
    let doc = json(&["verify", "--suite", "restriction", "--input", &data("cfg1.conf")]);
    assert_eq!(doc["passed"], 1);
    assert_eq!(doc["counters"]["proportional pairs"], 3);
    assert_eq!(doc["counters"]["pairs with C = 1"], 2);
    assert_eq!(code(&["verify", "--suite", "matrixtree", "--input", &data("cfg1.conf")]), Some(2));
}

#[test]
fn output_is_independent_of_worker_count() {
    let args = ["verify", "--suite", "cones", "--seed", "3", "--trials", "16", "--json"];
    let one = run_with(&args, &[("CONFPOLY_THREADS", "1")]);
    let four = run_with(&args, &[("CONFPOLY_THREADS", "4")]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
    let other_seed = run(&["verify", "--suite", "cones", "--seed", "4", "--trials", "16", "--json"]);
    assert_ne!(stdout(&one), stdout(&other_seed));
}
