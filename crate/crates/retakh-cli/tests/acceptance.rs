//! Command-line acceptance gate, continuing the numbering of the library
//! suite: criterion 9 pins byte-stable JSON output against checked-in
//! golden files and the verification suite's exit behaviour, including
//! the deliberate-corruption smoke test.

use std::path::Path;
use std::process::{Command, Output};

/// Spawn the binary with a scrubbed environment so ambient
/// `RETAKH_BUDGET` / `RETAKH_ORDER` settings cannot change the bytes.
fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_retakh"))
        .args(args)
        .env_remove("RETAKH_BUDGET")
        .env_remove("RETAKH_ORDER")
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("golden {}: {e}", path.display()))
}

fn assert_matches_golden(args: &[&str], name: &str) -> serde_json::Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    assert_eq!(stdout, golden(name), "byte drift against {name} for {args:?}");
    serde_json::from_str(&stdout).expect("golden output parses as JSON")
}

#[test]
fn criterion_9_cli_determinism_and_verification() {
    // Golden bytes, with the payloads re-checked against the library so a
    // stale golden cannot hide a wrong value.
    let count = assert_matches_golden(&["count", "--semilength", "4"], "count_semilength_4.json");
    assert_eq!(
        count["payload"]["count"],
        retakh::paths::count_restricted(4).to_string(),
        "golden count disagrees with the enumeration"
    );

    let series = assert_matches_golden(
        &["series", "--which", "M", "--order", "10"],
        "series_m_order_10.json",
    );
    let motzkin: Vec<String> = retakh::gf::motzkin_numbers(10)
        .iter()
        .map(|m| m.to_string())
        .collect();
    assert_eq!(
        series["payload"]["coefficients"],
        serde_json::json!(motzkin),
        "golden series disagrees with the convolution table"
    );

    let height = assert_matches_golden(&["height", "--semilength", "5"], "height_semilength_5.json");
    assert_eq!(
        height["payload"]["total_even_height"],
        retakh::oracle::total_even_height(5).to_string(),
        "golden height total disagrees with the enumeration"
    );

    // A second run must reproduce the bytes exactly.
    let again = run(&["height", "--semilength", "5"]);
    assert_eq!(
        String::from_utf8(again.stdout).unwrap(),
        golden("height_semilength_5.json"),
        "repeated invocation drifted"
    );

    // The verification suite: clean build exits 0; a single corrupted
    // closed form must flip the exit code and be named on stderr.
    let clean = run(&["verify", "--level", "quick"]);
    assert!(
        clean.status.success(),
        "quick verify failed on a correct build: {clean:?}"
    );

    let mutated = run(&["verify", "--level", "quick", "--mutate", "gk-exponent"]);
    assert_eq!(
        mutated.status.code(),
        Some(1),
        "mutated verify did not exit 1: {mutated:?}"
    );
    let stderr = String::from_utf8(mutated.stderr).unwrap();
    assert!(
        stderr.contains("gk-"),
        "mutated verify did not name the failing checks: {stderr}"
    );

    println!(
        "criterion 9 PASS: golden bytes for count/series/height, quick verify exits 0, mutation exits 1"
    );
}
