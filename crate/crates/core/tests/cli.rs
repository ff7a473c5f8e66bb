use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tautcurve::cli::CHECK_NAMES;

fn tautcurve(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tautcurve"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn series_from_degrees() {
    let (code, out, _) = tautcurve(&["series", "--p1-degrees", "0", "--sign", "minus", "--order", "4", "--format", "plain"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1, 0, 1, 4, 15");
}

#[test]
fn series_from_fixture_file() {
    let path = fixture("p1_line_minus1.json");
    let (code, out, err) = tautcurve(&["series", "--fixture", &path, "--sign", "minus", "--order", "4"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.trim(), "1, 1, 3, 10, 35");
}

#[test]
fn bad_fixtures_are_usage_errors() {
    let (code, _, err) = tautcurve(&["series", "--fixture", &fixture("zero_cotangent.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("points[0].cotangent_weight"), "{err}");
    let (code, _, err) = tautcurve(&["series", "--fixture", &fixture("ragged.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("bundle_weights"), "{err}");
    let (code, _, _) = tautcurve(&["series", "--fixture", "/no/such/file.json"]);
    assert_eq!(code, 2);
}

#[test]
fn secant_csv_row() {
    let (code, out, _) = tautcurve(&["secant", "--degree", "3", "--genus", "0", "--order", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,value");
    assert!(lines.contains(&"2,1"));
}

#[test]
fn invert_and_universal() {
    let (_, out, _) = tautcurve(&["invert", "--r", "1", "--order", "4"]);
    assert_eq!(out.trim(), "0, 1, 1, 2, 5");
    let (_, out, _) = tautcurve(&["universal", "--rank", "1", "--sign", "minus", "--degree", "0", "--genus", "0", "--order", "4"]);
    assert!(out.ends_with("1, 0, 1, 4, 15\n"), "{out}");
}

#[test]
fn verify_thm14_plain() {
    let (code, out, _) = tautcurve(&["verify", "thm14", "--order", "8"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS thm14 (order 8)"));
    assert!(out.contains("symbolic"));
    assert!(out.contains("against localization"));
}

#[test]
fn verify_all_json_is_complete_and_deterministic() {
    let (code, out, _) = tautcurve(&["verify", "all", "--order", "8", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["pass"], Value::Bool(true));
    assert_eq!(doc["command"], "verify all --order 8 --format json");
    let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, CHECK_NAMES);
    // round trip
    let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    assert_eq!(again, out);
    let (_, second, _) = tautcurve(&["verify", "all", "--order", "8", "--format", "json"]);
    assert_eq!(second, out);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["coeffs", "--rank", "0"][..],
        &["coeffs", "--rank", "1", "--order", "0"],
        &["verify", "everything"],
        &["verify", "all", "--order", "13"],
        &["series", "--p1-degrees", "0", "--sign", "sideways"],
        &[],
    ] {
        assert_eq!(tautcurve(args).0, 2, "{args:?}");
    }
}

#[test]
fn json_rationals_are_canonical() {
    let (_, out, _) = tautcurve(&["universal", "--rank", "2", "--sign", "plus", "--degree", "1", "--genus", "1", "--order", "3", "--format", "json"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    for row in doc["values"].as_array().unwrap() {
        let v = row["value"].as_str().unwrap();
        let parsed = tautcurve::algebra::parse_scalar(v).unwrap();
        assert_eq!(tautcurve::algebra::format_scalar(&parsed), v);
    }
}
