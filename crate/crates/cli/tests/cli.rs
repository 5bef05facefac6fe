//! End-to-end tests of the `linkhom` binary: exit-code contract, report
//! schemas, determinism, and round-tripping.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use linkhom_cli::report::{ErrorReport, LineReport, OracleReport, RadiiReport, VerifyReport};

fn linkhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkhom"))
        .args(args)
        .env_remove("LINKHOM_CELL_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn write_curve(dir: &Path, name: &str, points: &[[f64; 2]]) -> std::path::PathBuf {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    let body = serde_json::json!({ "points": points });
    write!(f, "{body}").unwrap();
    path
}

#[test]
fn line_equilateral_at_zero() {
    let out = linkhom(&["line", "--lengths", "1/3,1/3,1/3", "--h", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let report: LineReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.betti, vec![1, 6, 1]);
    assert_eq!(report.h, "0/1");
    assert_eq!(report.a, vec![1, 3, 0, 0]);
    assert_eq!(report.euler, -4);
    assert!(report.regular);
}

#[test]
fn lengths_accept_json_array_literals() {
    let out = linkhom(&["line", "--lengths", r#"["1/3","1/3","1/3"]"#, "--h", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let report: LineReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.betti, vec![1, 6, 1]);
}

#[test]
fn line_accepts_negative_heights() {
    let out = linkhom(&["line", "--lengths", "0.5,0.5", "--h", "-1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: LineReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.betti, vec![1, 1]);
}

#[test]
fn curve_chord_at_half_height() {
    let dir = tempfile::tempdir().unwrap();
    let x = (3.0f64).sqrt() / 2.0;
    let path = write_curve(dir.path(), "chord_half.json", &[[-x, 0.5], [x, 0.5]]);
    let out = linkhom(&["curve", "--lengths", "1/2,1/2", "--curve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: linkhom_cli::report::CurveReport =
        serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.betti, vec![1, 1]);
}

#[test]
fn curve_through_origin_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_curve(dir.path(), "through_origin.json", &[[-1.0, 0.0], [1.0, 0.0]]);
    let out = linkhom(&["curve", "--lengths", "1/2,1/2", "--curve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err: ErrorReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(err.error.code, "curve-through-origin");
    assert_eq!(err.error.class, "hypothesis");
}

#[test]
fn bad_rational_exits_2() {
    let out = linkhom(&["line", "--lengths", "1/x,1", "--h", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let err: ErrorReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(err.error.code, "parse-rational");
}

#[test]
fn missing_required_flag_exits_2() {
    let out = linkhom(&["line", "--lengths", "1/2,1/2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumeration_cap_exits_4() {
    let lengths = vec!["1/30"; 30].join(",");
    let out = linkhom(&["line", "--lengths", &lengths, "--h", "0"]);
    assert_eq!(out.status.code(), Some(4));
    let err: ErrorReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(err.error.code, "enumeration-too-large");
}

#[test]
fn cell_budget_env_exits_4() {
    let out = Command::new(env!("CARGO_BIN_EXE_linkhom"))
        .args(["oracle", "--lengths", "1/2,1/2", "--h", "1/2", "--grid-n", "32"])
        .env("LINKHOM_CELL_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let err: ErrorReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(err.error.code, "cell-budget-exceeded");
}

#[test]
fn invalid_delta_exits_2() {
    let out = linkhom(&["oracle", "--lengths", "1/2,1/2", "--h", "1/2", "--delta", "3/4"]);
    assert_eq!(out.status.code(), Some(2));
    let err: ErrorReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(err.error.code, "invalid-delta");
}

#[test]
fn oracle_reports_stability_and_samples() {
    let out = linkhom(&[
        "oracle",
        "--lengths",
        "1/2,1/2",
        "--h",
        "1/2",
        "--grid-n",
        "16",
        "--dump-samples",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: OracleReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.betti, vec![1, 1, 0]);
    assert_eq!(report.delta, "1/4");
    assert!(report.stable);
    assert!(report.torsion.is_empty());
    let samples = report.samples.expect("samples requested");
    assert!(!samples.is_empty());
    // every sampled center lies in the thickened window, widened by the
    // per-cube range
    for s in &samples {
        assert!((s.s2 - 0.5).abs() <= 0.25 + 2.0 * std::f64::consts::TAU / 16.0);
    }
}

#[test]
fn radii_report_groups_masks() {
    let out = linkhom(&["radii", "--lengths", "1/2,1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: RadiiReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.k, 2);
    assert_eq!(report.configs.len(), 4);
    assert_eq!(report.radii[0].radius, "0/1");
    assert_eq!(report.radii[0].masks, vec![1, 2]);
    assert_eq!(report.radii[1].radius, "1/1");
    assert_eq!(report.radii[1].masks, vec![0, 3]);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["line", "--lengths", "2,1,1", "--h", "1/3"];
    let first = stdout_str(&linkhom(&args));
    let second = stdout_str(&linkhom(&args));
    assert_eq!(first, second);

    let verify_args = ["verify", "--quick", "--sweep-cases", "4"];
    let first = stdout_str(&linkhom(&verify_args));
    let second = stdout_str(&linkhom(&verify_args));
    assert!(!first.is_empty());
    assert_eq!(first, second);
}

#[test]
fn reports_round_trip_through_serde() {
    let out = stdout_str(&linkhom(&["line", "--lengths", "1/3,1/3,1/3", "--h", "1/6"]));
    let parsed: LineReport = serde_json::from_str(&out).unwrap();
    let mut reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    reserialized.push('\n');
    assert_eq!(out, reserialized);

    let out = stdout_str(&linkhom(&["oracle", "--lengths", "1/2,1/2", "--h", "1/2"]));
    let parsed: OracleReport = serde_json::from_str(&out).unwrap();
    let mut reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    reserialized.push('\n');
    assert_eq!(out, reserialized);

    let out = stdout_str(&linkhom(&["radii", "--lengths", "2,1,1"]));
    let parsed: RadiiReport = serde_json::from_str(&out).unwrap();
    let mut reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    reserialized.push('\n');
    assert_eq!(out, reserialized);

    let dir = tempfile::tempdir().unwrap();
    let x = (3.0f64).sqrt() / 2.0;
    let path = write_curve(dir.path(), "chord.json", &[[-x, 0.5], [x, 0.5]]);
    let out = stdout_str(&linkhom(&[
        "curve",
        "--lengths",
        "1/2,1/2",
        "--curve",
        path.to_str().unwrap(),
    ]));
    let parsed: linkhom_cli::report::CurveReport = serde_json::from_str(&out).unwrap();
    let mut reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    reserialized.push('\n');
    assert_eq!(out, reserialized);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = linkhom(&[
        "line",
        "--lengths",
        "1/2,1/2",
        "--h",
        "0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let report: LineReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.betti, vec![1, 3]);
    assert!(!report.regular);
}

#[test]
fn table_format_renders() {
    let out = linkhom(&["line", "--lengths", "1/2,1/2", "--h", "1/2", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("betti"));
    assert!(text.contains("1 1"));
}

#[test]
fn verify_quick_passes() {
    let out = linkhom(&["verify", "--quick", "--sweep-cases", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let report: VerifyReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.summary.failed, 0);
    assert_eq!(report.summary.total, report.cases.len());
    // re-validating the parsed report: agreement flags match the summary
    let disagreements = report
        .cases
        .iter()
        .filter(|c| !c.agreement && !c.notes.starts_with("inconclusive"))
        .count();
    assert_eq!(disagreements, report.summary.failed);
}

#[test]
fn tangent_chord_consistency_is_reported_as_skip() {
    // the through-origin chord of the two-edge arm is rejected on the curve
    // path; the verify suite records that as the expected outcome
    let out = linkhom(&["verify", "--quick", "--sweep-cases", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let report: VerifyReport = serde_json::from_str(&stdout_str(&out)).unwrap();
    let case = report
        .cases
        .iter()
        .find(|c| c.name == "two-equal-edges-at-critical-zero")
        .expect("case present");
    assert!(case.agreement);
    assert!(case.notes.contains("tangent"));
    assert_eq!(case.betti_formula, vec![1, 3]);
}
