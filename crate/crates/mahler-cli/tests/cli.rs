//! End-to-end tests against the compiled `mahler` binary: output shapes,
//! frozen values, exit codes, and JSON determinism.

use serde_json::Value;
use std::process::{Command, Output};

fn mahler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mahler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is JSON")
}

#[test]
fn analyze_golden_quadratic_text() {
    let out = mahler(&["analyze", "--poly", "1,-3,1", "--n", "8"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("2^6 * 5"), "Delta(P_3) factorization missing:\n{text}");
    assert!(text.contains("M(P) = 2.618033988749895"));
    assert!(text.contains("constant +1"));
    assert!(text.contains("analyze: PASS"));
}

#[test]
fn analyze_golden_quadratic_json() {
    let out = mahler(&["analyze", "--poly", "1,-3,1", "--n", "6", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["degree"], 2);
    assert_eq!(v["reciprocal"], Value::Bool(true));
    assert_eq!(v["cyclotomic"], Value::Bool(false));
    assert!(v["measure"]["value"].as_str().unwrap().starts_with("2.6180339887498"));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[2]["delta"], "320");
    assert_eq!(rows[2]["factored"], "2^6 * 5");
    assert_eq!(rows[2]["psi"], "64");
    assert_eq!(rows[5]["small_delta"], "103320");
}

#[test]
fn analyze_cyclotomic_input() {
    let out = mahler(&["analyze", "--poly", "1,0,1", "--n", "4", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["cyclotomic"], Value::Bool(true));
    assert_eq!(v["cyclotomic_indices"], serde_json::json!([4]));
    assert!(v["sign"]["zero_at"].is_u64());
    assert!(v["sandwich"].is_null());
}

#[test]
fn gauss_families_pass_for_lehmer() {
    let out = mahler(&["gauss", "--poly", "1,1,0,-1,-1,-1,-1,-1,0,1,1", "--n", "8", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["pass"], Value::Bool(true));
    let families = v["families"].as_array().unwrap();
    // coefficients, delta, three fixed resultant partners, dobrowolski
    assert_eq!(families.len(), 6);
    assert!(families.iter().all(|f| f["pass"] == Value::Bool(true)));
}

#[test]
fn gauss_zero_resultants_pass_trivially() {
    // P(1) = 0 zeroes the x-1 resultant family; zero satisfies every
    // congruence, so the family passes rather than being rejected.
    let out = mahler(&["gauss", "--poly", "x^2-1", "--n", "6", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["skipped"].as_array().unwrap().len(), 0);
}

#[test]
fn u_golden_partition_table() {
    let out = mahler(&["u", "--poly", "1,-3,1", "--n", "6", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["u"], "0");
    assert_eq!(v["exponent"], 4);
    assert_eq!(v["main_divisibility"], Value::Bool(true));
    let factors = v["partitions"]["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 8);
    assert_eq!(v["partitions"]["skipped"], 7);
    assert_eq!(factors[0]["partition"], "{1,2,3,4}");
    assert_eq!(factors[0]["value"], "-5");
}

#[test]
fn u_small_prime_section() {
    let out = mahler(&["u", "--poly", "1,-3,1", "--n", "5", "--k", "11", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["pass"], Value::Bool(true));
    assert!(v["small_prime"]["order_divides"]["ok"] == Value::Bool(true));
}

#[test]
fn genfun_golden_json() {
    let out = mahler(&["genfun", "--poly", "1,-3,1", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["terms"], 14);
    assert_eq!(v["rational_fn"]["num"], "0,5,5");
    assert_eq!(v["rational_fn"]["den"], "1,-8,8,-1");
    assert_eq!(v["product_identity"]["verified"], Value::Bool(true));
    assert_eq!(v["product_identity"]["r"][0], "5");
    assert_eq!(v["product_identity"]["r"][2], "105");
    let minton = v["minton"].as_array().unwrap();
    assert_eq!(minton.len(), 2);
}

#[test]
fn genfun_g_witness() {
    let out = mahler(&["genfun", "--poly", "1,-3,1", "--g", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["g"]["den"], "1,-3,1");
    assert_eq!(v["g"]["witness"], 3);
}

#[test]
fn genfun_too_few_terms_exits_one() {
    let out = mahler(&["genfun", "--poly", "-1,-1,0,1", "--n", "22"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("64 terms"), "stderr: {err}");
}

#[test]
fn vandermonde_rational_points() {
    let out = mahler(&["vandermonde", "--points", "1/2:1,3:1", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["determinant"], "5/2");
    assert_eq!(v["product"], "5/2");
    assert_eq!(v["n"], 2);
}

#[test]
fn vandermonde_rejects_malformed_points() {
    let out = mahler(&["vandermonde", "--points", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mahler(&["vandermonde", "--points", "1/0:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_reciprocal_defaults_find_lehmer() {
    let out = mahler(&["scan", "--reciprocal-only", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 2, "Lehmer's polynomial and its mirror");
    assert!(records
        .iter()
        .any(|r| r["coefficients"] == "1,1,0,-1,-1,-1,-1,-1,0,1,1"));
    for r in records {
        assert!(r["measure"].as_str().unwrap().starts_with("1.17628081825991"));
        assert_eq!(r["reciprocal"], Value::Bool(true));
    }
}

#[test]
fn scan_low_degree_has_no_small_measures() {
    // Below degree 5 at height 1 nothing noncyclotomic gets under 1.3.
    let out = mahler(&["scan", "--degree-cap", "4", "--threshold", "1.3", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["records"].as_array().unwrap().len(), 0);
}

#[test]
fn scan_budget_cap_exits_three() {
    let out = mahler(&["scan", "--degree-cap", "40"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn scan_json_is_deterministic() {
    let a = mahler(&["scan", "--degree-cap", "6", "--reciprocal-only", "--threshold", "1.5", "--json", "--threads", "2"]);
    let b = mahler(&["scan", "--degree-cap", "6", "--reciprocal-only", "--threshold", "1.5", "--json", "--threads", "1"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout_of(&a), stdout_of(&b));
}

#[test]
fn estimate_golden_ratio_near_one() {
    let out = mahler(&["estimate", "--poly", "1,-3,1", "--n", "24", "--q", "-1,1", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    let ratio: f64 = v["delta_growth"]["ratio"].as_str().unwrap().parse().unwrap();
    assert!(ratio > 0.99 && ratio < 1.0 + 1e-9, "ratio {ratio}");
    assert_eq!(v["sandwich"]["exceeds_lower"], Value::Bool(true));
    let rratio: f64 = v["resultant"]["ratio"].as_str().unwrap().parse().unwrap();
    assert!(rratio > 0.9 && rratio < 1.1);
}

#[test]
fn estimate_equidistribution_half() {
    let out = mahler(&["estimate", "--poly", "1,-3,1", "--n", "10", "--angles", "0.5", "--json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["equidistribution"]["achieving"], serde_json::json!([1, 3, 5, 7, 9]));
}

#[test]
fn bad_polynomial_exits_two() {
    let out = mahler(&["analyze", "--poly", "1,,2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mahler(&["analyze", "--poly", "x^70000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn u_domain_and_resource_exit_codes() {
    let out = mahler(&["u", "--poly", "1,-3,1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // degree 8 at n with three prime factors needs d^r = 8^4 past the cap
    let out = mahler(&["u", "--poly", "1,1,1,1,1,1,1,1,1", "--n", "30"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn genfun_g_rejects_nonquadratic() {
    let out = mahler(&["genfun", "--poly", "-1,-1,0,1", "--n", "64", "--g"]);
    assert_eq!(out.status.code(), Some(2));
}
