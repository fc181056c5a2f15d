use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn knotsurg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotsurg"))
        .args(args)
        .output()
        .expect("spawn knotsurg")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = knotsurg(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    knotsurg(args).status.code().expect("exit code")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).expect("valid schema")
}

fn assert_valid(schema_name: &str, output: &str) -> Value {
    let value: Value = serde_json::from_str(output).expect("json output");
    let validator = schema(schema_name);
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}\n{output}");
    value
}

#[test]
fn alexander_examples() {
    assert_eq!(stdout_ok(&["alexander", "torus(2,3)"]), "t - 1 + t^-1\n");
    assert_eq!(stdout_ok(&["alexander", "unknot"]), "1\n");
    assert_eq!(
        stdout_ok(&["alexander", "sum(torus(2,3),torus(2,3))"]),
        "t^2 - 2*t + 3 - 2*t^-1 + t^-2\n"
    );
    assert_eq!(
        stdout_ok(&["alexander", "--no-symmetrize", "mirror(torus(3,4))"]),
        "t^6 - t^5 + t^3 - t + 1\n"
    );
}

#[test]
fn alexander_parse_errors_exit_one() {
    let out = knotsurg(&["alexander", "torus(2,"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    assert!(out.stdout.is_empty());
    assert_eq!(exit_code(&["alexander", "torus(4,6)"]), 1);
}

#[test]
fn torres_examples() {
    assert_eq!(
        stdout_ok(&["torres", "--lk", "1", "t - 1 + t^-1"]),
        "t - 1 + t^-1\n"
    );
    assert_eq!(stdout_ok(&["torres", "--lk", "0", "t"]), "0\n");
    assert_eq!(stdout_ok(&["torres", "--lk", "3", "1"]), "y^2 + y + 1\n");
    assert_eq!(stdout_ok(&["torres", "--lk", "2", "-y + 1"]), "-y^2 + 1\n");
}

#[test]
fn torres_usage_errors() {
    assert_eq!(exit_code(&["torres", "--lk", "-1", "t"]), 1);
    assert_eq!(exit_code(&["torres", "--lk", "1", "x*y"]), 1);
    assert_eq!(exit_code(&["torres", "--lk", "1", "t +"]), 1);
    assert_eq!(
        exit_code(&["torres", "--lk", "1", "t", "--format", "csv"]),
        1
    );
}

#[test]
fn family_csv_has_five_rows() {
    let out = stdout_ok(&[
        "family", "--n", "1", "--pmin", "1", "--pmax", "5", "--format", "csv",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "p,lower_bound,lemma63_ok,genus,span,delta_gamma");
    assert_eq!(lines.len(), 6);
    let bounds: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(bounds, ["1", "3", "5", "7", "9"]);
    assert!(lines[1..]
        .iter()
        .all(|l| l.split(',').nth(2) == Some("true")));
}

#[test]
fn family_single_row() {
    let out = stdout_ok(&[
        "family", "--n", "1", "--pmin", "1", "--pmax", "1", "--format", "csv",
    ]);
    assert_eq!(
        out,
        "p,lower_bound,lemma63_ok,genus,span,delta_gamma\n1,1,true,0,0,1\n"
    );
    let text = stdout_ok(&["family", "--n", "1", "--pmin", "1", "--pmax", "1"]);
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn family_bounds_do_not_depend_on_n() {
    let args = |n: &'static str| {
        [
            "family", "--n", n, "--pmin", "1", "--pmax", "5", "--format", "json",
        ]
    };
    let one: Value = serde_json::from_str(&stdout_ok(&args("1"))).unwrap();
    let two: Value = serde_json::from_str(&stdout_ok(&args("2"))).unwrap();
    assert_eq!(one["rows"], two["rows"]);
    assert_eq!(two["n"], 2);
}

#[test]
fn family_range_violation_exits_one() {
    assert_eq!(exit_code(&["family", "--pmin", "0", "--pmax", "3"]), 1);
    assert_eq!(exit_code(&["family", "--pmin", "5", "--pmax", "3"]), 1);
    assert_eq!(
        exit_code(&["family", "--pmin", "1", "--pmax", "20", "--cap", "10"]),
        1
    );
    assert_eq!(
        exit_code(&["family", "--n", "0", "--pmin", "1", "--pmax", "3"]),
        1
    );
}

#[test]
fn certify_examples() {
    let cert = assert_valid(
        "certificate.schema.json",
        &stdout_ok(&["certify", "--target", "10"]),
    );
    let last = cert["witnesses"].as_array().unwrap().last().unwrap();
    assert!(last["lower_bound"].as_u64().unwrap() > 10);

    let cert = assert_valid(
        "certificate.schema.json",
        &stdout_ok(&["certify", "--target", "0"]),
    );
    assert_eq!(cert["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn certify_cap_exhausted_is_internal() {
    assert_eq!(exit_code(&["certify", "--target", "100", "--cap", "10"]), 2);
}

#[test]
fn certify_verify_round_trip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("cert.json");
    std::fs::write(&good, stdout_ok(&["certify", "--target", "10"])).unwrap();
    let good = good.to_str().unwrap();
    assert_eq!(exit_code(&["certify", "--verify", good]), 0);
    let out = stdout_ok(&["certify", "--verify", good, "--format", "json"]);
    let v = assert_valid("verify_result.schema.json", &out);
    assert_eq!(v["valid"], true);

    let mut cert: Value = serde_json::from_str(&std::fs::read_to_string(good).unwrap()).unwrap();
    cert["witnesses"][1]["lower_bound"] = 4.into();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, cert.to_string()).unwrap();
    assert_eq!(
        exit_code(&["certify", "--verify", bad.to_str().unwrap()]),
        1
    );

    let missing = dir.path().join("missing.json");
    assert_eq!(
        exit_code(&["certify", "--verify", missing.to_str().unwrap()]),
        1
    );
    std::fs::write(&bad, "{}").unwrap();
    assert_eq!(
        exit_code(&["certify", "--verify", bad.to_str().unwrap()]),
        1
    );
}

#[test]
fn sw_text_and_json() {
    let text = stdout_ok(&["sw", "--p", "2"]);
    assert!(text.contains("SW at t_K = 1:           t_G^2 - 1 + t_G^-2"));
    assert!(text.contains("basic class lower bound: 3"));
    assert!(text.contains("full SW polynomial:      unavailable"));

    let v = assert_valid(
        "sw_result.schema.json",
        &stdout_ok(&["sw", "--p", "5", "--n", "2", "--format", "json"]),
    );
    assert_eq!(v["lower_bound"], 9);
    assert_eq!(v["specialization"]["terms"], Value::Array(vec![]));
    assert_eq!(v["full_polynomial"], "unavailable");

    let v = assert_valid(
        "sw_result.schema.json",
        &stdout_ok(&[
            "sw",
            "--p",
            "2",
            "--n",
            "2",
            "--link-poly",
            "x*y - x + x*y^-1",
            "--format",
            "json",
        ]),
    );
    assert_eq!(
        v["full_polynomial"]["variables"],
        serde_json::json!(["t_K", "t_G"])
    );
    assert_eq!(exit_code(&["sw", "--p", "2", "--link-poly", "x + y"]), 1);
    assert_eq!(exit_code(&["sw", "--p", "0"]), 1);
}

#[test]
fn json_outputs_match_schemas() {
    assert_valid(
        "laurent_poly.schema.json",
        &stdout_ok(&["alexander", "torus(5,6)", "--format", "json"]),
    );
    assert_valid(
        "laurent_poly.schema.json",
        &stdout_ok(&["torres", "--lk", "3", "1", "--format", "json"]),
    );
    assert_valid(
        "family_report.schema.json",
        &stdout_ok(&["family", "--pmin", "1", "--pmax", "12", "--format", "json"]),
    );
    assert_valid(
        "sw_result.schema.json",
        &stdout_ok(&["sw", "--p", "7", "--format", "json"]),
    );
    assert_valid(
        "certificate.schema.json",
        &stdout_ok(&["certify", "--target", "37"]),
    );
}

#[test]
fn schemas_reject_malformed_documents() {
    let poly = schema("laurent_poly.schema.json");
    assert!(!poly
        .is_valid(&serde_json::json!({"variables": ["t"], "terms": [{"exps": [1], "coeff": 1}]})));
    assert!(!poly.is_valid(
        &serde_json::json!({"variables": ["t"], "terms": [{"exps": [1], "coeff": "0"}]})
    ));
    let cert = schema("certificate.schema.json");
    assert!(!cert.is_valid(&serde_json::json!({"schema_version": 1, "target": 1, "witnesses": []})));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["family", "--pmin", "1", "--pmax", "40", "--format", "json"][..],
        &["family", "--pmin", "1", "--pmax", "40", "--format", "csv"][..],
        &["certify", "--target", "25"][..],
        &["alexander", "sum(torus(3,7),mirror(torus(2,5)))"][..],
    ] {
        assert_eq!(knotsurg(args).stdout, knotsurg(args).stdout, "{args:?}");
    }
}

#[test]
fn help_exits_zero_and_bad_flags_exit_one() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["family", "--bogus"]), 1);
    assert_eq!(exit_code(&[]), 1);
}
