use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ainvariant"))
        .args(args)
        .env_remove("AINVARIANT_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn reproduce_graded_example() {
    let out = run(&["reproduce", "example-2.2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["schema_version"], 1);
    let r = &doc["result"];
    assert_eq!(r["a"], 0);
    assert_eq!(r["h1_0"], 1);
    assert_eq!(r["sharp"], true);
    assert_eq!(r["all_ok"], true);
    assert_eq!(r["mu"], serde_json::json!([4, 7, 10, 13, 16, 19]));
}

#[test]
fn reproduce_semigroup_example() {
    let out = run(&["reproduce", "example-3.2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["result"];
    assert_eq!(r["r"], 2);
    assert_eq!(r["e"], 4);
    assert_eq!(r["sharp"], true);
}

#[test]
fn hilbert_reports_reduced_series() {
    let out = run(&["hilbert", "--ring", "a,b,c,d", "--ideal", "b*d, b*c, b^2, c^3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["result"];
    assert_eq!(r["reduced_numerator"], serde_json::json!([1, 2]));
    assert_eq!(r["dim"], 2);
    assert_eq!(r["series"], "(1 + 2λ)/(1 - λ)^2");
    assert_eq!(r["hilbert_polynomial"], "3*n + 1");
}

#[test]
fn cohomology_table() {
    let out = run(&["cohomology", "--ring", "a,b,c,d", "--ideal", "b*d, b*c, b^2, c^3"]);
    let r = &json(&out)["result"];
    assert_eq!((r["depth"].as_u64(), r["a"].as_i64(), r["eg"].as_u64()), (Some(1), Some(0), Some(1)));
    let rows = r["table"].as_array().unwrap();
    assert!(rows.iter().any(|x| x["i"] == 1 && x["n"] == 0 && x["h"] == 1));
}

#[test]
fn reduction_over_a_semigroup() {
    let out = run(&["reduction", "--semigroup", "4,5,6,7", "--ideal", "4,5,6"]);
    let r = &json(&out)["result"];
    assert_eq!(r["reduction_number"], 2);
    assert_eq!(r["generic_reduction_number"], 2);
    assert_eq!(r["multiplicity"], 4);
}

#[test]
fn verify_single_instance_csv() {
    let out = run(&["verify", "--ring", "x,y", "--ideal", "x^2,x*y,y^2", "--bound", "prop3.3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("instance,bound,relation,lhs,rhs,status,gap"));
    assert!(lines.next().unwrap().starts_with("input,prop3.3,<=,1,1,sharp,0"));
}

#[test]
fn seed_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ainvariant"))
        .args(["reduction", "--ring", "x,y", "--ideal", "x^2,y^2", "--trials", "1"])
        .env("AINVARIANT_SEED", "17")
        .output()
        .unwrap();
    let doc = json(&out);
    assert_eq!(doc["config"]["seed"], 17);
    assert_eq!(doc["result"]["best_seed"], 17);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["hilbert", "--ring", "x,x", "--ideal", "x"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--bound", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn computation_errors_exit_one_with_diagnostics() {
    let out = run(&["reduction", "--ring", "x,y", "--ideal", "x"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["error"]["kind"], "NotPrimary");
    assert_eq!(doc["config"]["ideal"], "x");
}

#[test]
fn corpus_verify_is_byte_identical() {
    let args = ["verify", "--bound", "thm2.1", "--count", "12", "--corpus-seed", "9"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["verify", "--bound", "thm2.1", "--count", "12", "--corpus-seed", "10"]);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(json(&a)["result"]["violations"], 0);
}

#[test]
fn table_is_a_rendering_of_json() {
    let out = run(&["cohomology", "--ring", "x,y", "--ideal", "x^2", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("depth"));
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["i", "n", "h"]));
}
