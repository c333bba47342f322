//! End-to-end tests of the genbell binary: envelope shape against the
//! published schema, exit codes, format parity, and determinism.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn genbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genbell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        !out.stdout.is_empty(),
        "no stdout; stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON envelope")
}

fn schema() -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema.json");
    let text = std::fs::read_to_string(path).expect("schema file");
    let doc: Value = serde_json::from_str(&text).expect("schema parses");
    jsonschema::JSONSchema::compile(&doc).expect("schema compiles")
}

fn assert_valid(envelope: &Value) {
    let compiled = schema();
    let msgs: Vec<String> = match compiled.validate(envelope) {
        Ok(()) => return,
        Err(errors) => errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect(),
    };
    panic!("schema violations: {msgs:?}");
}

#[test]
fn construct_all_routes_agree() {
    let out = genbell(&["construct", "--phi", "1,2", "--n", "2", "--route", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let env = json_of(&out);
    assert_valid(&env);
    assert_eq!(env["results"]["agree"], Value::Bool(true));
    let coeffs = &env["results"]["routes"][0]["coefficients"];
    assert_eq!(coeffs, &serde_json::json!(["2", "4", "1"]));
}

#[test]
fn construct_trivial_and_negative_cases() {
    let out = genbell(&["construct", "--phi", "0", "--n", "0"]);
    let env = json_of(&out);
    assert_valid(&env);
    assert_eq!(
        env["results"]["routes"][0]["coefficients"],
        serde_json::json!(["1"])
    );

    // phi = (-1): Be_2 = x^2
    let out = genbell(&["construct", "--phi", "-1", "--n", "2"]);
    let env = json_of(&out);
    assert_eq!(
        env["results"]["routes"][0]["coefficients"],
        serde_json::json!(["0", "0", "1"])
    );
}

#[test]
fn roots_reports_counts_and_bounds() {
    let out = genbell(&["roots", "--phi", "1,2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let env = json_of(&out);
    assert_valid(&env);
    let counts = &env["results"]["counts"];
    assert_eq!(counts["negative"], 2);
    assert_eq!(counts["nonreal"], 0);
    assert_eq!(env["results"]["simple"], Value::Bool(true));
    let bounds = &env["results"]["bounds"];
    assert_eq!(bounds["lower_status"], "verified");
    assert_eq!(bounds["upper_status"], "verified");

    // negative-pair counts from the double-negative-integer family
    let out = genbell(&["roots", "--phi", "-2,-2", "--n", "4"]);
    let env = json_of(&out);
    assert_valid(&env);
    let counts = &env["results"]["counts"];
    assert_eq!(counts["zero_multiplicity"], 1);
    assert_eq!(counts["negative"], 1);
    assert_eq!(counts["nonreal"], 2);
    assert!(env["results"].get("bounds").is_none());
}

#[test]
fn verify_shift_reproduces_counterexample() {
    let out = genbell(&[
        "verify", "--suite", "shift", "--phi", "1/2", "--s", "3/2", "--n-max", "4",
    ]);
    assert_eq!(out.status.code(), Some(0)); // report-only cases never fail the run
    let env = json_of(&out);
    assert_valid(&env);
    let report = &env["results"]["report"];
    let first = report["cases"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["expected"] == "first failing n")
        .unwrap();
    assert_eq!(first["observed"], "4");
}

#[test]
fn verify_exit_codes() {
    // unknown suite is a usage error
    let out = genbell(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));

    // missing required flag
    let out = genbell(&["verify", "--suite", "zero-mult"]);
    assert_eq!(out.status.code(), Some(2));

    // a passing suite exits 0
    let out = genbell(&[
        "verify", "--suite", "zero-mult", "--phi", "-1,-2", "--n", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_valid(&json_of(&out));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let out = genbell(&["construct", "--phi", "1,x,3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("entry 2"), "{err}");

    let out = genbell(&["roots", "--phi", "1", "--n", "2", "--width", "0"]);
    assert_eq!(out.status.code(), Some(2));

    // bad windows are usage errors, not crashes
    let out = genbell(&[
        "verify", "--suite", "finite-support", "--phi", "-3/2", "--n-lo", "9", "--n-hi", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = genbell(&[
        "verify", "--suite", "conjecture", "--gamma", "1,-1,1/2", "--n-max", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn laguerre_command_examples() {
    let out = genbell(&[
        "laguerre", "--alpha", "1/2,0", "--nvec", "1,1", "--check-orth",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let env = json_of(&out);
    assert_valid(&env);
    assert_eq!(env["results"]["phi_prefix"], serde_json::json!(["3/2", "1"]));
    assert_eq!(env["results"]["orthogonal"], Value::Bool(true));

    // nvec = 0: the constant polynomial
    let out = genbell(&["laguerre", "--alpha", "0", "--nvec", "0"]);
    let env = json_of(&out);
    assert_eq!(env["results"]["coefficients"], serde_json::json!(["1"]));

    // divergent weight with orthogonality requested
    let out = genbell(&["laguerre", "--alpha", "-2", "--nvec", "1", "--check-orth"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let json_env = json_of(&genbell(&["roots", "--phi", "0", "--n", "3"]));
    let csv_out = genbell(&["roots", "--phi", "0", "--n", "3", "--format", "csv"]);
    let csv_text = String::from_utf8(csv_out.stdout).unwrap();

    // every root bound and count appearing in JSON appears in the CSV
    for root in json_env["results"]["roots"].as_array().unwrap() {
        if let Some(pair) = root.get("interval") {
            assert!(csv_text.contains(pair[0].as_str().unwrap()), "{csv_text}");
            assert!(csv_text.contains(pair[1].as_str().unwrap()), "{csv_text}");
        }
        if let Some(v) = root.get("value") {
            assert!(csv_text.contains(v.as_str().unwrap()));
        }
    }
    for key in ["negative", "zero_multiplicity", "positive", "nonreal"] {
        let v = json_env["results"]["counts"][key].to_string();
        assert!(csv_text.lines().any(|l| l.starts_with("count,") && l.contains(&v)));
    }
}

#[test]
fn out_flag_writes_file_and_seed_reproduces() {
    let dir = std::env::temp_dir().join(format!("genbell-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let args = [
        "verify", "--suite", "nonneg", "--trials", "2", "--n-max", "4",
        "--seed", "7", "--out", path.to_str().unwrap(),
    ];
    let out = genbell(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let first: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_valid(&first);

    let out = genbell(&args);
    assert_eq!(out.status.code(), Some(0));
    let second: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(first["results"], second["results"]);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_csv_has_case_rows() {
    let out = genbell(&[
        "verify", "--suite", "zero-mult", "--phi", "-1,-2", "--n", "4", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().next(),
        Some("record,index,outcome,expected,observed,inputs")
    );
    assert!(text.contains("meta,,,suite,zero-mult,"));
    assert!(text.lines().any(|l| l.starts_with("case,0,pass,")), "{text}");
    assert!(text.lines().any(|l| l.starts_with("summary,") && l.contains("pass,2")), "{text}");
}

#[test]
fn construct_csv_layout() {
    let out = genbell(&["construct", "--phi", "1,2", "--n", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("record,route,index,value"));
    assert!(text.contains("coefficient,definition,0,2"));
    assert!(text.contains("agreement,all,,true"));
}
