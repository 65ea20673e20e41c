use std::process::{Command, Output};

use bpu_verify::{exit_code, run, Check, Options, UsageError};
use serde_json::Value;

fn bpu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bpu-verify")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strip_elapsed(mut v: Value) -> Value {
    for r in v["reports"].as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("elapsed_ms");
    }
    v
}

#[test]
fn theta_reports_minus_eta_six() {
    let out = bpu(&["verify-theta", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    let report = &v["reports"][0];
    assert_eq!(report["check"], "theta-delta");
    assert_eq!(report["status"], "pass");
    assert_eq!(report["details"][0]["value"], "-eta^6");
}

#[test]
fn report_schema_keys() {
    let v = json(&bpu(&["verify-prop-s", "--p", "5"]));
    let keys: Vec<&str> = v["reports"][0].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["check", "params", "status", "details", "counterexample", "elapsed_ms"]);
    assert_eq!(v["reports"][0]["params"]["p"], 5);
}

#[test]
fn even_or_composite_p_exits_2() {
    assert_eq!(bpu(&["verify-mui", "--p", "4"]).status.code(), Some(2));
    assert_eq!(bpu(&["verify-theta", "--p", "9"]).status.code(), Some(2));
    assert_eq!(run(Check::Theta, &Options { p: 2, ..Options::default() }), Err(UsageError::NotAnOddPrime(2)));
}

#[test]
fn unknown_subcommand_and_bad_flags_exit_2() {
    assert_eq!(bpu(&["verify-everything"]).status.code(), Some(2));
    assert_eq!(bpu(&["verify-theta", "--p", "three"]).status.code(), Some(2));
    assert_eq!(bpu(&["verify-theta", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn precondition_errors_exit_2() {
    let out = bpu(&["verify-delta", "--p", "3", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["reports"][0]["status"], "precondition-error");
}

#[test]
fn failing_check_exits_1_with_counterexample() {
    let out = bpu(&["verify-main", "--p", "3", "--blocks", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let report = &json(&out)["reports"][0];
    assert_eq!(report["status"], "fail");
    assert!(report["counterexample"].is_string());
}

#[test]
fn main_one_block_passes() {
    let out = bpu(&["verify-main", "--p", "3", "--blocks", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn identical_flags_give_identical_reports() {
    let args = ["verify-e4", "--p", "3", "--n", "9", "--kmax", "6"];
    assert_eq!(strip_elapsed(json(&bpu(&args))), strip_elapsed(json(&bpu(&args))));
}

#[test]
fn text_format() {
    let out = bpu(&["verify-ln", "--p", "3", "--n", "9", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("[pass] ln-lemma (n=9, p=3)"), "{text}");
}

#[test]
fn verify_all_sorted_and_seeded() {
    let opts = Options { seed: 7, cases: 40, ..Options::default() };
    let first = run(Check::All, &opts).unwrap();
    let keys: Vec<_> = first.iter().map(|r| (r.report.check.clone(), r.report.params.clone())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(keys.iter().any(|(c, p)| c == "property:milnor-derivation" && p["seed"] == 7));
    let second = run(Check::All, &opts).unwrap();
    let strip = |v: &[bpu_verify::TimedReport]| v.iter().map(|r| r.report.clone()).collect::<Vec<_>>();
    assert_eq!(strip(&first), strip(&second));
    let failing: Vec<_> = first.iter().filter(|r| !r.report.passed()).map(|r| &r.report).collect();
    assert_eq!(failing.len(), 1, "{failing:?}");
    assert_eq!(failing[0].check, "main-vanishing");
    assert_eq!(failing[0].params["blocks"], 2);
    assert_eq!(exit_code(&first), 1);
}

#[test]
fn subcommand_names_round_trip() {
    for check in Check::ALL {
        assert_eq!(Check::from_subcommand(check.subcommand()), Some(check));
    }
    assert_eq!(Check::from_subcommand("verify"), None);
}
