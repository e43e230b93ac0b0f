use std::process::{Command, Output};

use mdlab::poly::parse_polynomial;
use mdlab::verify::DUAL_214635;
use serde_json::Value;

fn mdlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mdlab"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn multidegree_example_on_all_routes() {
    let o = mdlab(&["multidegree", "--m", "4", "--n", "4", "--t", "3", "--route", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("monomial basis: m_(3,3,1,1) + m_(3,2,2,1) + 2*m_(2,2,2,2)"), "{text}");
    let v = json(&mdlab(&["multidegree", "--m", "4", "--n", "4", "--t", "3", "--json"]));
    assert_eq!(v["results"]["routes_agree"], Value::Bool(true));
    assert_eq!(v["results"]["closed"], v["results"]["paths"]);
    assert_eq!(v["results"]["closed"]["terms"].as_array().unwrap().len(), 19);
}

#[test]
fn schubert_analysis_of_214635() {
    let v = json(&mdlab(&["schubert", "analyze", "214635", "--json"]));
    let r = &v["results"];
    assert_eq!(r["vexillary"], Value::Bool(false));
    assert_eq!(r["cs"], Value::Bool(false));
    assert_eq!(r["cdg_predicted"], Value::Bool(false));
    let text = r["schubert_polynomial"]["text"].as_str().unwrap();
    assert_eq!(parse_polynomial(text).unwrap(), parse_polynomial(DUAL_214635).unwrap());
    let ess: Vec<Vec<u16>> = serde_json::from_value(r["essential_set"].clone()).unwrap();
    assert!(!ess.is_empty());
}

#[test]
fn cdg_groebner_verdict_is_reported() {
    let o = mdlab(&["schubert", "groebner", "1432", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["results"]["groebner_basis"], Value::Bool(true));
}

#[test]
fn json_is_reproducible_and_echoes_the_seed() {
    let args = ["gin", "--ideal", "tests/data/minors_3x3.ideal", "--seed", "11", "--json"];
    let a = mdlab(&args);
    let b = mdlab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], Value::from(11));
    assert_eq!(v["results"]["squarefree"], Value::Bool(true));
    assert_eq!(v["timings"], serde_json::json!({}));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["command", "inputs", "results", "seed", "timings"]);
    let text = stdout(&mdlab(&["gin", "--ideal", "tests/data/minors_3x3.ideal", "--seed", "11"]));
    assert!(text.starts_with("seed: 11\n"));
}

#[test]
fn timings_only_on_request() {
    let v = json(&mdlab(&["schur", "2,1", "--n", "3", "--json", "--timings"]));
    assert!(v["timings"]["total_ms"].is_u64());
}

#[test]
fn graph_files_and_binomial_edge_check() {
    let o = mdlab(&["binedge", "--graph", "tests/data/p3.graph", "--seed", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = &json(&o)["results"];
    assert_eq!(r["verified"], Value::Bool(true));
    assert_eq!(r["predicted_gin"], r["computed_gin"]);
    assert_eq!(r["predicted_gin"].as_array().unwrap().len(), 3);
}

#[test]
fn parse_errors_carry_positions() {
    let o = mdlab(&["gin", "--ideal", "tests/data/unknown_variable.ideal"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown_variable.ideal:2:24"), "{}", stderr(&o));
    let o = mdlab(&["homogenize", "--ideal", "tests/data/bad_syntax.ideal"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad_syntax.ideal:3:"), "{}", stderr(&o));
    let o = mdlab(&["schubert", "analyze", "1433"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mdlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mdlab(&["multidegree", "--m", "4"]).status.code(), Some(2));
    assert_eq!(mdlab(&["multidegree", "--m", "2", "--n", "2", "--t", "3"]).status.code(), Some(2));
    assert_eq!(mdlab(&["verify", "99"]).status.code(), Some(2));
}

#[test]
fn desk_scale_exits_three() {
    let o = mdlab(&["multidegree", "--m", "6", "--n", "6", "--t", "3", "--route", "paths"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("DESK-SCALE-EXCEEDED"));
}

#[test]
fn homogenization_of_an_affine_line() {
    let o = mdlab(&["homogenize", "--ideal", "tests/data/line.ideal", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let gens = json(&o)["results"]["generators"].as_array().unwrap().clone();
    assert_eq!(gens.len(), 1);
    let g = parse_polynomial(gens[0]["text"].as_str().unwrap()).unwrap();
    let want = parse_polynomial("x(1,1)*x(0,2) + x(1,2)*x(0,1) - x(0,1)*x(0,2)").unwrap();
    assert!(g == want || g == -want);
}

#[test]
fn row_sum_readings() {
    let all = mdlab(&[
        "zstar", "--ideal", "tests/data/row_sums.ideal", "--compare", "tests/data/maximal_minors.ideal", "--json",
    ]);
    assert_eq!(all.status.code(), Some(0), "{}", stderr(&all));
    let r = &json(&all)["results"];
    assert_eq!(r["generators"].as_array().unwrap().len(), 4);
    assert_eq!(r["comparison"]["hf_equal"], Value::Bool(true));
    assert_eq!(r["squarefree"], Value::Bool(true));
    let three = mdlab(&[
        "zstar", "--ideal", "tests/data/row_sums_first_three.ideal", "--compare", "tests/data/maximal_minors.ideal",
    ]);
    assert_eq!(three.status.code(), Some(1));
    assert!(stdout(&three).contains("contained in J*: false"));
}

#[test]
fn verify_single_suite() {
    let o = mdlab(&["verify", "7", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("criterion  7 PASS"));
}

#[test]
fn verify_all() {
    let o = mdlab(&["verify", "all", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches(" PASS ").count(), 13);
}
