//! Black-box tests of the binary: exit codes, report shape, and the
//! round-trip property that emitted JSON is accepted back as input.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn ktors(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktors"))
        .args(args)
        .output()
        .expect("binary should launch")
}

fn parse_stdout(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout should be one JSON document")
}

/// Writes a unique temp file and returns its path.
fn temp_input(tag: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!(
        "ktors_cli_{}_{}_{tag}.json",
        std::process::id(),
        std::thread::current().name().unwrap_or("t").replace("::", "_")
    ));
    std::fs::write(&path, contents).expect("temp dir is writable");
    path
}

#[test]
fn snf_on_identity_reports_unit_factors() {
    let input = temp_input(
        "id",
        r#"{"rows": 3, "cols": 3, "entries": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#,
    );
    let doc = parse_stdout(&ktors(&["snf", "--input", input.to_str().unwrap()]));
    assert_eq!(doc["factors"], serde_json::json!(["1", "1", "1"]));
    assert_eq!(doc["rank"], 3);
    assert_eq!(doc["config"]["command"], "snf");
}

#[test]
fn snf_output_matrix_round_trips() {
    let input = temp_input(
        "rt_in",
        r#"{"rows": 2, "cols": 3, "entries": [["2","4","4"],["-6","6","12"]]}"#,
    );
    let first = parse_stdout(&ktors(&["snf", "--input", input.to_str().unwrap()]));
    let echoed = temp_input("rt_echo", &first["matrix"].to_string());
    let second = parse_stdout(&ktors(&["snf", "--input", echoed.to_str().unwrap()]));
    assert_eq!(first["factors"], second["factors"]);
    assert_eq!(first["matrix"], second["matrix"]);
}

#[test]
fn homology_output_complex_round_trips() {
    let input = temp_input(
        "rp2",
        r#"{"vertices": 6, "top_simplices": [[0,1,2],[0,2,3],[0,1,5],[0,3,4],[0,4,5],[1,2,4],[1,3,4],[1,3,5],[2,3,5],[2,4,5]]}"#,
    );
    let first = parse_stdout(&ktors(&["homology", "--input", input.to_str().unwrap()]));
    // The projective plane: one component, 2-torsion in degree 1, nothing
    // above.
    assert_eq!(
        first["groups"],
        serde_json::json!([
            {"betti": 1, "degree": 0, "torsion": []},
            {"betti": 0, "degree": 1, "torsion": ["2"]},
            {"betti": 0, "degree": 2, "torsion": []},
        ])
    );
    let echoed = temp_input("rp2_echo", &first["complex"].to_string());
    let second = parse_stdout(&ktors(&["homology", "--input", echoed.to_str().unwrap()]));
    assert_eq!(first["groups"], second["groups"]);
}

#[test]
fn single_degree_homology_restricts_output() {
    let input = temp_input(
        "circle",
        r#"{"vertices": 3, "top_simplices": [[0,1],[0,2],[1,2]]}"#,
    );
    let doc = parse_stdout(&ktors(&[
        "homology",
        "--input",
        input.to_str().unwrap(),
        "--n",
        "1",
    ]));
    assert_eq!(
        doc["groups"],
        serde_json::json!([{"betti": 1, "degree": 1, "torsion": []}])
    );
}

#[test]
fn riemann_zeta_two_matches_closed_form() {
    let doc = parse_stdout(&ktors(&["zeta", "--s", "2"]));
    let value: f64 = doc["value"].as_str().unwrap().parse().unwrap();
    let pi = std::f64::consts::PI;
    assert!((value - pi * pi / 6.0).abs() < 1e-10);
    assert_eq!(doc["function"], "riemann");
}

#[test]
fn gabber_verify_reports_zero_violations() {
    let doc = parse_stdout(&ktors(&[
        "gabber-verify",
        "--delta-max",
        "6",
        "--v",
        "30",
        "--dim",
        "3",
        "--trials",
        "40",
        "--seed",
        "11",
    ]));
    assert_eq!(doc["violations"], 0);
    assert!(doc["checked_pairs"].as_u64().unwrap() > 0);
}

#[test]
fn bound_report_carries_threshold_floor() {
    let doc = parse_stdout(&ktors(&["bound", "--m", "-1", "--n", "2"]));
    let report = &doc["report"];
    assert_eq!(report["discriminant"], -4);
    assert_eq!(report["N"], 5);
    assert_eq!(doc["discriminant_exponent"], 12);
    // The threshold equals log gamma here because the volume term is small.
    let threshold: f64 = report["log_p_threshold"]["value"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!((threshold - 109.28164395293689).abs() < 1e-9);
    assert_eq!(report["excluded_primes"], "p <= gamma");
}

#[test]
fn csv_compare_has_comment_header_and_rows() {
    let out = ktors(&[
        "compare", "--n", "2", "--m", "-1,-3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let comments = lines.iter().take_while(|l| l.starts_with("# ")).count();
    assert!(comments >= 5, "missing provenance comments:\n{text}");
    assert_eq!(
        lines[comments],
        "n,m,discriminant,log_p_threshold_value,log_p_threshold_error,soule_base,soule_exponent,winner"
    );
    assert_eq!(lines.len(), comments + 1 + 2, "one row per grid point");
    assert!(lines[comments + 1].ends_with(",new"));
}

#[test]
fn malformed_input_exits_one() {
    for args in [
        vec!["snf", "--input", "/definitely/not/there.json"],
        vec!["zeta", "--m", "-4", "--s", "2"],
        vec!["zeta", "--s", "1"],
        vec!["volume", "--m", "3", "--N", "5"],
        vec!["bound", "--m", "-1", "--n", "1"],
        vec!["bound", "--m", "-1", "--n", "2", "--alpha", "0"],
        vec!["gamma", "--N", "1"],
        vec!["nonsense-command"],
    ] {
        let out = ktors(&args);
        assert_eq!(
            out.status.code(),
            Some(1),
            "args {args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty(), "diagnostic expected for {args:?}");
    }
}

#[test]
fn certification_failure_exits_two() {
    // The zeta product exceeds its rank-2 cap for this field, which the
    // library reports as an invariant violation rather than a bad input.
    let out = ktors(&["volume", "--m", "-15", "--N", "2"]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stderr).unwrap();
    assert!(text.contains("invariant"), "got: {text}");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(ktors(&["--help"]).status.code(), Some(0));
    assert_eq!(ktors(&["--version"]).status.code(), Some(0));
    assert_eq!(ktors(&["snf", "--help"]).status.code(), Some(0));
}
