use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use flagbound::exact_arith::Rational;

fn flagbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagbound"))
        .args(args)
        .env_remove("FLAGBOUND_DIGIT_BUDGET")
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_flagbound"))
        .args(args)
        .env_remove("FLAGBOUND_DIGIT_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

const LEMMA_R5_S7_D50: &str =
    r#"{"r":5,"d":50,"s":7,"pointProfile":{"stable":7,"values":[1,4,7]},"deltas":[0,1],"tail":[]}"#;

#[test]
fn castelnuovo_prints_bound() {
    let o = flagbound(&["castelnuovo", "3", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn flag_json_matches_schema() {
    let o = flagbound(&["flag", "5", "1000", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"lo":"149900/3","hi":"151900/3","hypothesesVerified":false}"#
    );
}

#[test]
fn flag_report_lists_separation_checks() {
    let v = json(&flagbound(&[
        "flag",
        "5",
        "1000",
        "10",
        "--with-report",
        "--format",
        "json",
    ]));
    let checks = v["report"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    assert_eq!(checks[3]["threshold"], "20000/3");
    assert_eq!(checks[3]["verdict"], "fail");
    let single = json(&flagbound(&[
        "flag",
        "5",
        "1000",
        "--with-report",
        "--format",
        "json",
    ]));
    assert_eq!(single["lo"], "124251");
    assert_eq!(single["report"], Value::Null);
    assert_eq!(single["hypothesesVerified"], true);
}

#[test]
fn json_rationals_round_trip() {
    let v = json(&flagbound(&[
        "corollary",
        "5",
        "1000",
        "10",
        "9",
        "--format",
        "json",
    ]));
    for key in ["corollaryBound", "alternativeBound", "bindingBound"] {
        let text = v[key].as_str().unwrap();
        let parsed: Rational = text.parse().unwrap();
        assert_eq!(parsed.to_string(), text);
    }
    assert_eq!(v["corollaryBound"], "151900/3");
    assert_eq!(v["alternativeBelow"], true);
}

#[test]
fn table_and_json_carry_the_same_numbers() {
    for args in [
        vec!["corollary", "5", "1000", "10", "9"],
        vec!["speciality", "1000", "10", "9"],
        vec!["flag", "6", "5000", "40", "7"],
    ] {
        let table = stdout(&flagbound(&args));
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let v = json(&flagbound(&json_args));
        for (key, value) in v.as_object().unwrap() {
            let text = match value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let line = table
                .lines()
                .find(|l| l.split_whitespace().next() == Some(key))
                .unwrap_or_else(|| panic!("{key} missing from table for {args:?}"));
            assert!(line.trim_end().ends_with(&text), "{key}: {line} vs {text}");
        }
    }
}

#[test]
fn csv_has_header_and_row() {
    let out = stdout(&flagbound(&[
        "speciality",
        "1000",
        "10",
        "9",
        "--format",
        "csv",
        "--digits",
        "6",
    ]));
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines, vec!["bound,boundApprox", "503/5,~100.6"]);
}

#[test]
fn lemma_from_file_and_stdin() {
    let path = std::env::temp_dir().join(format!("flagbound-lemma-{}.json", std::process::id()));
    std::fs::write(&path, LEMMA_R5_S7_D50).unwrap();
    let o = flagbound(&[
        "lemma",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["total"], "9/7");
    assert_eq!(v["identityHolds"], true);
    assert_eq!(v["chainHolds"], true);
    assert_eq!(v["pi"], 2);

    let v = json(&with_stdin(
        &["lemma", "--input", "-", "--format", "json"],
        LEMMA_R5_S7_D50,
    ));
    assert_eq!(v["total"], "9/7");
}

#[test]
fn lemma_rejects_small_degree_unless_allowed() {
    let small = LEMMA_R5_S7_D50.replace("\"d\":50", "\"d\":36");
    let o = with_stdin(&["lemma", "--input", "-"], &small);
    assert_eq!(o.status.code(), Some(1));
    let stderr = String::from_utf8(o.stderr).unwrap();
    assert!(stderr.contains("lemma degree"));
    assert!(stderr.contains("input: lemma --input -"));
}

#[test]
fn validation_errors_exit_one() {
    assert_eq!(flagbound(&["castelnuovo", "4", "3"]).status.code(), Some(1));
    assert_eq!(
        flagbound(&["flag", "5", "10", "1000"]).status.code(),
        Some(1)
    );
    assert_eq!(
        flagbound(&["speciality", "10", "0", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(flagbound(&["castelnuovo", "x", "3"]).status.code(), Some(1));
    assert_eq!(
        flagbound(&["hypotheses", "flag", "5", "1000"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn hypotheses_boundary_pair() {
    let pass = json(&flagbound(&[
        "hypotheses",
        "corollary",
        "4",
        "471",
        "3",
        "--format",
        "json",
    ]));
    let fail = json(&flagbound(&[
        "hypotheses",
        "corollary",
        "4",
        "470",
        "3",
        "--format",
        "json",
    ]));
    assert_eq!(pass["overall"], "pass");
    assert_eq!(fail["overall"], "fail");
    assert_eq!(fail["checks"][0]["label"], "product");
    let lemma = json(&flagbound(&[
        "hypotheses",
        "lemma",
        "3",
        "11",
        "3",
        "--format",
        "json",
    ]));
    assert_eq!(lemma["overall"], "fail");
}

#[test]
fn digit_budget_env_overrides_flag() {
    let o = Command::new(env!("CARGO_BIN_EXE_flagbound"))
        .args([
            "hypotheses",
            "corollary",
            "4",
            "471",
            "3",
            "--format",
            "json",
            "--digit-budget",
            "1000",
        ])
        .env("FLAGBOUND_DIGIT_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["overall"], "pass");

    let o = Command::new(env!("CARGO_BIN_EXE_flagbound"))
        .args(["castelnuovo", "3", "6"])
        .env("FLAGBOUND_DIGIT_BUDGET", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_small_grid_passes() {
    let o = flagbound(&[
        "verify", "--grid", "6,100", "--seeds", "200", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert!(v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "pass"));
    assert_eq!(
        flagbound(&["verify", "--grid", "3,100"]).status.code(),
        Some(1)
    );
}

#[test]
fn batch_keeps_order_and_reports_errors() {
    let records = [
        r#"{"op":"castelnuovo","n":3,"deg":6}"#,
        r#"{"op":"flag","r":5,"degrees":[1000,10]}"#,
        r#"{"op":"speciality","d":10,"s":0,"pi":1}"#,
        "not json",
        "",
        &format!(r#"{{"op":"lemma","input":{LEMMA_R5_S7_D50}}}"#),
        r#"{"op":"hypotheses","subject":"lemma","r":5,"d":43,"s":7}"#,
    ]
    .join("\n");
    let o = with_stdin(&["batch"], &records);
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0]["ok"], 4);
    assert_eq!(lines[1]["ok"]["hi"], "151900/3");
    assert_eq!(lines[2]["exitCode"], 1);
    assert_eq!(lines[2]["input"]["op"], "speciality");
    assert_eq!(lines[3]["input"], "not json");
    assert_eq!(lines[4]["ok"]["total"], "9/7");
    assert_eq!(lines[5]["ok"]["overall"], "pass");
}
