use std::process::{Command, Output};

use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colombeau")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn verdicts_exit_zero() {
    for args in [
        &["classify", "alpha(1)"][..],
        &["dist", "alpha(1)", "alpha(3)"],
        &["order", "alpha(1)"],
        &["quat", "classify", "quat(1;1;0;0)"],
        &["ideal", "dense", "--gens", "chi{m=2;T=[0];N=0}"],
        &["holo", "check", "--poly", "0;1", "--at", "0"],
        &["polyann", "--vars", "1", "--poly", "x1"],
    ] {
        assert_eq!(cli(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(cli(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(cli(&["--window", "0", "classify", "1"]).status.code(), Some(1));
    assert_eq!(cli(&["--config", "/nonexistent/colombeau.conf", "classify", "1"]).status.code(), Some(1));
    assert_eq!(cli(&["ideal", "member", "--gens", "1"]).status.code(), Some(1));
}

#[test]
fn syntax_error_report() {
    let out = cli(&["--json", "eval", "--expr", "1 + * 2"]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["kind"], "syntax");
    assert_eq!(r["detail"]["offset"], 4);
    assert!(r["detail"]["expected"].as_array().is_some_and(|e| !e.is_empty()));
}

#[test]
fn computation_errors_exit_two() {
    let out = cli(&["--json", "eval", "--expr", "1/chi{m=2;T=[0];N=0}"]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert!(r["error"].is_string());
    assert!(r["detail"]["message"].is_string());
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = std::env::temp_dir().join(format!("colombeau-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("settings.conf");
    std::fs::write(&path, "# test\ndefault_window = 5/2\nverify_n_list = 3, 7\n").unwrap();
    let path = path.to_str().unwrap();

    let r = json(&cli(&["--json", "--config", path, "classify", "alpha(1)"]));
    assert_eq!(r["window"], "5/2");
    let r = json(&cli(&["--json", "--config", path, "--window", "4", "classify", "alpha(1)"]));
    assert_eq!(r["window"], "4");

    let check = ["--json", "--config", path, "holo", "check", "--poly", "0;chi{m=2;T=[0];N=0}", "--at", "0"];
    let r = json(&cli(&check));
    assert_eq!(r["verified_n"], serde_json::json!(["3", "7"]));
    let mut with_flag = check.to_vec();
    with_flag.extend(["--verify-n", "2"]);
    assert_eq!(json(&cli(&with_flag))["verified_n"], serde_json::json!(["2"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn human_output_matches_json() {
    let text = String::from_utf8(cli(&["norm", "alpha(2)"]).stdout).unwrap();
    let r = json(&cli(&["--json", "norm", "alpha(2)"]));
    assert!(text.contains(&format!("valuation: {}", r["valuation"].as_str().unwrap())));
    assert!(text.contains("display: 0.135335"));
}

#[test]
fn ideal_report_fields() {
    let r = json(&cli(&["--json", "ideal", "ann", "--gens", "chi{m=2;T=[0];N=0}; alpha(1)*chi{m=2;T=[0];N=0}"]));
    assert_eq!(r["dense_algebraic"], false);
    assert_eq!(r["whole_ring"], false);
    assert_eq!(r["verdict"], "chi{m=2;T=[1];N=0}");
}
