//! End-to-end tests of the `holonorm` binary: exit codes, output routing
//! and byte-determinism.

use std::process::{Command, Output};

fn holonorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holonorm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn verify_passes_at_2_4_for_every_engine() {
    for engine in ["closed", "modular", "general"] {
        let out = holonorm(&["verify", "-p", "2", "-n", "4", "--engine", engine]);
        assert_eq!(out.status.code(), Some(0), "engine {engine}");
        let text = stdout_of(&out);
        assert!(text.contains("verdict: PASS"), "engine {engine}: {text}");
        assert!(
            text.contains("edges: engine 28 oracle 28 [match]"),
            "engine {engine}: {text}"
        );
    }
}

#[test]
fn verify_refuses_oversized_holomorphs_with_exit_3() {
    let out = holonorm(&["verify", "-p", "2", "-n", "7"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("4096"), "stderr names the bound: {err}");
}

#[test]
fn usage_errors_exit_2() {
    // Not a prime.
    assert_eq!(
        holonorm(&["catalog", "-p", "4", "-n", "2"]).status.code(),
        Some(2)
    );
    // Unsupported format for the subcommand.
    assert_eq!(
        holonorm(&["graph", "-p", "2", "-n", "4", "--format", "text"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        holonorm(&["catalog", "-p", "2", "-n", "4", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
    // Unknown flag (clap uses exit code 2 for usage).
    assert_eq!(holonorm(&["catalog", "--bogus"]).status.code(), Some(2));
    // Empty lemma range.
    assert_eq!(
        holonorm(&["lemmas", "-p", "2", "-n", "3"]).status.code(),
        Some(2)
    );
    // Zero worker threads.
    assert_eq!(
        holonorm(&["--jobs", "0", "catalog", "-p", "2", "-n", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn catalog_prints_header_plus_one_line_per_subgroup() {
    let out = holonorm(&["catalog", "-p", "2", "-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 17, "header + 16 rows");
    assert_eq!(lines[0], "p n family u k c period isoclass");
    assert_eq!(lines[1], "2 4 G1 - - - 1 cyclic");
}

#[test]
fn graph_outputs_are_deterministic_bytes() {
    for format in ["dot", "json"] {
        let first = holonorm(&["graph", "-p", "2", "-n", "5", "--format", format]);
        let second = holonorm(&["graph", "-p", "2", "-n", "5", "--format", format]);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout, "{format} bytes are stable");
        assert!(!first.stdout.is_empty());
    }
    let dot = stdout_of(&holonorm(&["graph", "-p", "3", "-n", "2"]));
    assert!(
        dot.starts_with("graph \"holonorm 3^2\" {"),
        "DOT header: {dot}"
    );
    assert!(
        dot.contains("\"U(1,0,1)\" -- \"U(1,0,2)\""),
        "DOT edge: {dot}"
    );
    let json = stdout_of(&holonorm(&[
        "graph", "-p", "3", "-n", "2", "--format", "json",
    ]));
    assert!(json.trim_start().starts_with('{'), "JSON object: {json}");
    assert!(json.contains("\"total\": 3"), "JSON counts: {json}");
}

#[test]
fn output_file_receives_exactly_the_stdout_bytes() {
    let dir = std::env::temp_dir().join(format!("holonorm-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graph.dot");
    let to_stdout = holonorm(&["graph", "-p", "2", "-n", "4"]);
    let to_file = holonorm(&["graph", "-p", "2", "-n", "4", "-o", path.to_str().unwrap()]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty(), "-o silences stdout");
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, to_stdout.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn lemmas_and_oracle_counts_succeed_at_desk_scale() {
    let lemmas = holonorm(&["lemmas", "-p", "3", "-n", "4"]);
    assert_eq!(lemmas.status.code(), Some(0));
    assert!(stdout_of(&lemmas).contains("all hold"));

    let counts = holonorm(&["--jobs", "2", "counts", "-p", "3", "-n", "2", "--oracle"]);
    assert_eq!(counts.status.code(), Some(0));
    let text = stdout_of(&counts);
    assert!(
        text.contains("expected at 3^2: 3 regular subgroups"),
        "{text}"
    );
    assert!(
        text.contains("oracle at 3^2: 3 regular subgroups [match]"),
        "{text}"
    );

    let bounded = holonorm(&["counts", "-p", "3", "-n", "4", "--oracle"]);
    assert_eq!(
        bounded.status.code(),
        Some(3),
        "3^4 exceeds the oracle bound"
    );
    let unbounded = holonorm(&["counts", "-p", "3", "-n", "4"]);
    assert_eq!(
        unbounded.status.code(),
        Some(0),
        "prediction alone needs no oracle"
    );
    assert!(stdout_of(&unbounded).contains("expected at 3^4: 27 regular subgroups"));
}
