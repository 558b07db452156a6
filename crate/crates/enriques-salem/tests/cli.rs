//! End-to-end tests of the command-line binary: output formats, exit codes,
//! determinism and the result cache.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_enriques-salem"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn experiment1_csv_has_four_decimal_lambdas() {
    let output = run(&["experiment1", "--format", "csv"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "k,family,word,char_poly,cyclotomic,salem,lambda"
    );
    let k4 = lines.clone().find(|l| l.starts_with("4,")).unwrap();
    assert!(k4.contains("1 -14 1"), "salem factor of c_4: {k4}");
    assert!(k4.ends_with("13.9282"), "4-place lambda: {k4}");
    let k2 = text.lines().find(|l| l.starts_with("2,")).unwrap();
    assert!(k2.ends_with("1.0000"), "non-hyperbolic row: {k2}");
}

#[test]
fn experiment2_rejects_bad_m() {
    let output = run(&["experiment2", "--m", "7"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    let output = run(&["experiment1", "--nope"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn hessian_json_round_trips_byte_identical() {
    let output = run(&[
        "hessian",
        "--word",
        "2,5,8,7,10",
        "--eckardt",
        "table2",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(value["salem"][0], "1");
    assert_eq!(value["family"], "hessian:table2");
    // struct-level round trip is byte identical
    let parsed: enriques_salem::cli::ReportJson = serde_json::from_str(text.trim()).unwrap();
    let re = serde_json::to_string(&parsed).unwrap();
    assert_eq!(re, text.trim());
}

#[test]
fn search_with_seed_is_byte_identical() {
    let args = [
        "search",
        "--family",
        "hessian",
        "--mode",
        "random",
        "--max-len",
        "4",
        "--trials",
        "200",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn exhaustive_search_reports_small_degree_four_class() {
    let output = run(&[
        "search",
        "--family",
        "hessian",
        "--mode",
        "exhaustive",
        "--max-len",
        "4",
        "--distinct",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&output).trim()).unwrap();
    let minima = value["minima"].as_array().unwrap();
    let degree4 = minima
        .iter()
        .find(|entry| entry[0] == 4)
        .expect("degree-4 minimum present");
    let salem: Vec<&str> = degree4[1]["salem"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    // ascending coefficients of x^4 - 5x^3 + 4x^2 - 5x + 1
    assert_eq!(salem, vec!["1", "-5", "4", "-5", "1"]);
    assert_eq!(degree4[1]["lambda"]["display"], "4.330640064312");
}

#[test]
fn search_budget_exhaustion_exits_3() {
    let output = run(&[
        "search",
        "--family",
        "hessian",
        "--mode",
        "exhaustive",
        "--max-len",
        "3",
        "--budget",
        "4",
    ]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn growth_counts_identity_at_radius_ten() {
    let output = run(&[
        "growth",
        "--family",
        "hessian",
        "--h",
        "delta",
        "--r",
        "10",
        "--max-len",
        "3",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&output).trim()).unwrap();
    assert!(value["count"].as_u64().unwrap() >= 1);
    assert_eq!(value["completed"], true);
}

#[test]
fn growth_rejects_malformed_rational() {
    let output = run(&[
        "growth",
        "--family",
        "hessian",
        "--h",
        "delta",
        "--r",
        "ten",
        "--max-len",
        "2",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn cache_reuse_gives_identical_output() {
    let path: PathBuf = std::env::temp_dir().join(format!(
        "enriques-salem-cli-cache-{}.jsonl",
        std::process::id()
    ));
    let _ = std::fs::remove_file(&path);
    let cache = path.to_str().unwrap();
    let args = [
        "hessian",
        "--word",
        "1,2,3,4,5,6,7",
        "--format",
        "json",
        "--cache",
        cache,
    ];
    let first = run(&args);
    assert!(first.status.success());
    assert!(path.exists(), "cache file written");
    let cache_len = std::fs::metadata(&path).unwrap().len();
    let second = run(&args);
    assert_eq!(stdout(&first), stdout(&second));
    // a cache hit must not grow the file
    assert_eq!(std::fs::metadata(&path).unwrap().len(), cache_len);
    // a rotated word hits the same canonical entry and reports its own word
    let rotated = run(&[
        "hessian",
        "--word",
        "2,3,4,5,6,7,1",
        "--format",
        "json",
        "--cache",
        cache,
    ]);
    let value: serde_json::Value = serde_json::from_str(stdout(&rotated).trim()).unwrap();
    assert_eq!(value["word"], serde_json::json!([2, 3, 4, 5, 6, 7, 1]));
    let first_value: serde_json::Value = serde_json::from_str(stdout(&first).trim()).unwrap();
    assert_eq!(value["salem"], first_value["salem"]);
    assert_eq!(value["lambda"], first_value["lambda"]);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn text_format_flags_non_hyperbolic_rows() {
    let output = run(&["experiment2", "--m", "1"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.lines().next().unwrap().contains("not hyperbolic"));
    assert!(text.contains("x^2 - 10x + 1"));
}
