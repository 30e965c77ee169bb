//! Determinism acceptance check for the command-line interface.

use std::process::Command;

fn run_compare() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_ktors"))
        .args([
            "compare", "--seed", "7", "--n", "2,3", "--m", "-1,-2,-3,-7,-11",
        ])
        .output()
        .expect("binary should launch");
    assert!(
        out.status.success(),
        "compare failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

/// Two identical invocations must produce byte-identical reports.
#[test]
fn criterion_10_compare_runs_are_byte_identical() {
    let first = run_compare();
    let second = run_compare();
    let ok = !first.is_empty() && first == second;
    println!(
        "criterion 10 (byte-identical repeated compare output): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "repeated runs differ or are empty");
}
