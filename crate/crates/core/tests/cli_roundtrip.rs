use std::fs;
use std::process::Command;

use psp4::cli::{main_with_args, EXIT_CONFIG, EXIT_OK};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_psp4"))
}

#[test]
fn compute_then_characterize() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q8");
    let code = main_with_args(["psp4", "compute", "--q", "8", "--output", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    for name in ["class_table.csv", "nse.json", "nse_set.json", "spectrum.json", "prime_graph.json"] {
        assert!(out.join(name).exists(), "{name} missing");
    }
    let nse: Value = serde_json::from_str(&fs::read_to_string(out.join("nse.json")).unwrap()).unwrap();
    assert_eq!(nse["order"], "1056706560");

    for file in ["nse.json", "nse_set.json"] {
        let verdict_path = dir.path().join(format!("verdict-{file}"));
        let code = main_with_args([
            "psp4",
            "characterize",
            "--order",
            "1056706560",
            "--nse-file",
            out.join(file).to_str().unwrap(),
            "--output",
            verdict_path.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_OK);
        let verdict: Value = serde_json::from_str(&fs::read_to_string(&verdict_path).unwrap()).unwrap();
        assert_eq!(verdict["outcome"], "IsomorphicToPSp4");
        assert_eq!(verdict["q"], 8);
    }
}

#[test]
fn compute_stdout_is_decimal_strings() {
    let output = bin().args(["compute", "--q", "4"]).output().unwrap();
    assert!(output.status.success());
    let doc: Value = serde_json::from_slice(&output.stdout).unwrap();
    let counts = doc["nse"]["counts"].as_object().unwrap();
    let sum: u64 = counts.values().map(|v| v.as_str().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(sum, 979_200);
    assert_eq!(doc["order"], "979200");
    assert!(!String::from_utf8_lossy(&output.stdout).contains('.'), "no floating point in output");
}

#[test]
fn output_is_deterministic() {
    let a = bin().args(["compute", "--q", "16"]).output().unwrap().stdout;
    let b = bin().args(["compute", "--q", "16"]).output().unwrap().stdout;
    assert_eq!(a, b);
}

#[test]
fn oracle_compare_exits_zero() {
    let status = bin().args(["oracle", "--q", "4", "--compare"]).output().unwrap().status;
    assert_eq!(status.code(), Some(0));
}

#[test]
fn oracle_respects_enumeration_cap() {
    let output = bin().args(["oracle", "--q", "4"]).env("NSE_MAX_ENUM", "1000").output().unwrap();
    assert_eq!(output.status.code(), Some(EXIT_CONFIG));
    assert!(String::from_utf8_lossy(&output.stderr).contains("cap"));
}

#[test]
fn example_84() {
    let output = bin().args(["oracle", "--example-84"]).output().unwrap();
    assert!(output.status.success());
    let doc: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(doc["g"]["size"], "84");
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn catalan_csv() {
    let output = bin().args(["catalan", "--bound", "300", "--format", "csv"]).output().unwrap();
    let text = String::from_utf8(output.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("p,q,m,n,value,kind"));
    assert!(text.contains("3,2,2,3,9,Exceptional"));
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn selftest_passes() {
    let output = bin().args(["selftest", "--q", "4,8"]).output().unwrap();
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(output.status.success(), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn config_errors_exit_two() {
    for args in [
        vec!["compute", "--q", "2"],
        vec!["compute"],
        vec!["characterize", "--order", "979200", "--nse-file", "/nonexistent/nse.json"],
        vec!["characterize", "--order", "abc", "--nse-file", "x"],
        vec!["oracle", "--example-84", "--format", "csv"],
        vec!["frobnicate"],
    ] {
        let status = bin().args(&args).output().unwrap().status;
        assert_eq!(status.code(), Some(EXIT_CONFIG), "{args:?}");
    }
}

#[test]
fn mismatched_nse_is_a_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nse.json");
    fs::write(&path, r#"["1", "4335"]"#).unwrap();
    let output = bin()
        .args(["characterize", "--order", "979200", "--nse-file", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(EXIT_OK));
    let verdict: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(verdict["outcome"], "HypothesesNotMet");
}
