//! End-to-end tests of the ramsey-lab binary: exit codes, stdout/stderr
//! separation, report envelopes, and the determinism contract.

use std::io::Write;
use std::process::{Command, Stdio};

use ramsey_core::detect::{find_k2n, find_wheel};
use ramsey_core::graph6::{parse_graph6, write_graph6};
use ramsey_core::Graph;
use serde_json::Value;

// ===== harness =====

fn run_lab(args: &[&str], stdin: &[u8], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ramsey-lab"));
    cmd.args(args)
        .env_remove("RAMSEY_LAB_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (key, value) in envs {
        cmd.env(key, value);
    }
    let mut child = cmd.spawn().expect("binary spawns");
    child
        .stdin
        .take()
        .expect("piped stdin")
        .write_all(stdin)
        .expect("stdin accepts input");
    let output = child.wait_with_output().expect("binary finishes");
    (
        output.status.code().expect("binary exits normally"),
        String::from_utf8(output.stdout).expect("stdout is utf8"),
        String::from_utf8(output.stderr).expect("stderr is utf8"),
    )
}

fn envelope(stdout: &str) -> Value {
    serde_json::from_str(stdout.trim()).expect("stdout is one JSON envelope")
}

fn scrub_wall(value: &mut Value) {
    match value {
        Value::Object(map) => {
            if let Some(v) = map.get_mut("wall_ms") {
                *v = Value::from(0u64);
            }
            for v in map.values_mut() {
                scrub_wall(v);
            }
        }
        Value::Array(items) => {
            for v in items {
                scrub_wall(v);
            }
        }
        _ => {}
    }
}

fn temp_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("ramsey-lab-test-{}-{name}", std::process::id()))
}

// ===== construct =====

#[test]
fn construct_emits_a_verified_witness() {
    let (code, stdout, _) = run_lab(
        &["construct", "lower-bound-witness", "--n", "2", "--m", "5"],
        b"",
        &[],
    );
    assert_eq!(code, 0);
    let graph = parse_graph6(stdout.trim()).expect("stdout is graph6");
    assert_eq!(graph.order(), 9);
    assert!(!find_k2n(&graph, 2).found);
    assert!(!find_wheel(&graph.complement(), 5).found);
}

#[test]
fn construct_rejects_an_even_wheel() {
    let (code, stdout, stderr) = run_lab(
        &["construct", "lower-bound-witness", "--n", "1", "--m", "4"],
        b"",
        &[],
    );
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("odd"));
}

#[test]
fn construct_realizes_patterns() {
    let (code, stdout, _) = run_lab(&["construct", "pattern", "wheel:5"], b"", &[]);
    assert_eq!(code, 0);
    let graph = parse_graph6(stdout.trim()).expect("stdout is graph6");
    assert_eq!(graph.order(), 6);
    assert_eq!(graph.degree_sequence(), vec![3, 3, 3, 3, 3, 5]);
}

#[test]
fn construct_rejects_bad_pattern_grammar() {
    let (code, _, _) = run_lab(&["construct", "pattern", "nonsense:3"], b"", &[]);
    assert_eq!(code, 2);
}

#[test]
fn construct_builds_tripartite_graphs() {
    let (code, stdout, _) = run_lab(&["construct", "tripartite", "2", "2", "2"], b"", &[]);
    assert_eq!(code, 0);
    let graph = parse_graph6(stdout.trim()).expect("stdout is graph6");
    assert_eq!(graph.order(), 6);
    assert_eq!(graph.edge_count(), 12);
    let complement = graph.complement();
    assert!(graph.vertices().all(|v| complement.degree(v) == 1));
}

// ===== analyze =====

fn petersen() -> Graph {
    Graph::from_edges(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ],
    )
}

#[test]
fn analyze_reports_the_petersen_facts() {
    let line = write_graph6(&petersen()).expect("encodes");
    let (code, stdout, _) = run_lab(&["analyze"], format!("{line}\n").as_bytes(), &[]);
    assert_eq!(code, 0);
    let report = envelope(&stdout);
    assert_eq!(report["payload_kind"], "analysis");
    let graph = &report["payload"][0];
    assert_eq!(graph["order"], 10);
    assert_eq!(graph["min_degree"], 3);
    assert_eq!(graph["max_degree"], 3);
    assert_eq!(graph["connectivity"], 3);
    assert_eq!(graph["bipartiteness"]["verdict"], "odd_cycle");
    let lengths: Vec<u64> = graph["cycle_spectrum"]["lengths"]
        .as_array()
        .expect("lengths array")
        .iter()
        .map(|v| v.as_u64().expect("length"))
        .collect();
    assert_eq!(lengths, vec![5, 6, 8, 9]);
}

#[test]
fn analyze_flags_empty_input() {
    let (code, _, stderr) = run_lab(&["analyze"], b"# only a comment\n\n", &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no graph6 records"));
}

#[test]
fn analyze_points_at_the_bad_byte() {
    let (code, _, stderr) = run_lab(&["analyze"], b"E\x1fKG\n", &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("offset 1"), "stderr was: {stderr}");
}

// ===== ramsey =====

#[test]
fn ramsey_settles_the_smallest_anchor() {
    let (code, stdout, _) = run_lab(
        &["ramsey", "--g", "k2n:1", "--h", "wheel:3", "--expect", "7"],
        b"",
        &[],
    );
    assert_eq!(code, 0);
    let report = envelope(&stdout);
    assert_eq!(report["payload_kind"], "ramsey_run");
    assert_eq!(report["payload"]["value"], 7);
    assert_eq!(report["payload"]["outcome"], "exact");
    assert!(report["seed"].is_u64());
    assert!(report["command"]
        .as_str()
        .expect("command echo")
        .contains("--expect 7"));
}

#[test]
fn ramsey_fails_a_wrong_expectation() {
    let (code, stdout, stderr) = run_lab(
        &["ramsey", "--g", "k2n:1", "--h", "wheel:3", "--expect", "8"],
        b"",
        &[],
    );
    assert_eq!(code, 1);
    assert_eq!(envelope(&stdout)["payload"]["value"], 7);
    assert!(stderr.contains("expected 8"));
}

#[test]
fn ramsey_reports_a_bound_at_the_guard() {
    let (code, stdout, _) = run_lab(&["ramsey", "--g", "k2n:5", "--h", "wheel:5"], b"", &[]);
    assert_eq!(code, 3);
    let report = envelope(&stdout);
    assert_eq!(report["payload"]["outcome"], "bounded");
    assert_eq!(report["payload"]["value"], Value::Null);
    assert_eq!(report["payload"]["lower_bound"], 19);
}

#[test]
fn ramsey_rejects_bad_specs() {
    let (code, _, stderr) = run_lab(&["ramsey", "--g", "k9n:1", "--h", "wheel:3"], b"", &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--g"));
}

#[test]
fn ramsey_payload_is_worker_count_invariant() {
    let (code_a, stdout_a, _) = run_lab(
        &["ramsey", "--g", "k2n:1", "--h", "cycle:5", "--jobs", "1"],
        b"",
        &[],
    );
    let (code_b, stdout_b, _) = run_lab(
        &["ramsey", "--g", "k2n:1", "--h", "cycle:5", "--jobs", "8"],
        b"",
        &[],
    );
    assert_eq!((code_a, code_b), (0, 0));
    let mut a = envelope(&stdout_a)["payload"].clone();
    let mut b = envelope(&stdout_b)["payload"].clone();
    scrub_wall(&mut a);
    scrub_wall(&mut b);
    assert_eq!(
        serde_json::to_string(&a).expect("serializes"),
        serde_json::to_string(&b).expect("serializes"),
    );
}

#[test]
fn ramsey_honors_the_jobs_env_fallback() {
    let (code, stdout, _) = run_lab(
        &["ramsey", "--g", "k2n:1", "--h", "cycle:5"],
        b"",
        &[("RAMSEY_LAB_JOBS", "4")],
    );
    assert_eq!(code, 0);
    assert_eq!(envelope(&stdout)["payload"]["value"], 5);

    let (code, _, stderr) = run_lab(
        &["ramsey", "--g", "k2n:1", "--h", "cycle:5"],
        b"",
        &[("RAMSEY_LAB_JOBS", "many")],
    );
    assert_eq!(code, 2);
    assert!(stderr.contains("RAMSEY_LAB_JOBS"));
}

// ===== lemma =====

#[test]
fn lemma_lists_valid_ids_for_unknown_input() {
    let (code, _, stderr) = run_lab(&["lemma", "no-such-lemma", "--exhaustive", "4"], b"", &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("valid ids"));
    assert!(stderr.contains("cycle-lemma-1"));
    assert!(stderr.contains("intersection-lemma"));
}

#[test]
fn lemma_requires_exactly_one_source() {
    let (code, _, stderr) = run_lab(&["lemma", "cycle-lemma-1"], b"", &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("source"));

    let (code, _, _) = run_lab(
        &["lemma", "cycle-lemma-1", "--exhaustive", "4", "--random", "3"],
        b"",
        &[],
    );
    assert_eq!(code, 2);
}

#[test]
fn lemma_cycle_scan_covers_every_small_class() {
    let (code, stdout, _) = run_lab(
        &["lemma", "cycle-lemma-1", "--exhaustive", "7", "--r", "3"],
        b"",
        &[],
    );
    assert_eq!(code, 0);
    let payload = &envelope(&stdout)["payload"];
    assert_eq!(payload["instances"], 1252);
    assert_eq!(payload["hypotheses_met"], 148);
    assert_eq!(payload["conclusion_held"], 148);
    assert_eq!(payload["counterexample_count"], 0);
    assert_eq!(payload["skipped"], 0);
}

#[test]
fn lemma_min_degree_skips_wrong_orders() {
    let (code, stdout, _) = run_lab(
        &["lemma", "min-degree-sqrt3", "--exhaustive", "7", "--n", "1"],
        b"",
        &[],
    );
    assert_eq!(code, 0);
    let payload = &envelope(&stdout)["payload"];
    assert_eq!(payload["instances"], 1044);
    assert_eq!(payload["hypotheses_met"], 4);
    assert_eq!(payload["conclusion_held"], 4);
    assert_eq!(payload["skipped"], 208);
}

#[test]
fn lemma_intersection_finds_the_boundary_matchings() {
    let (code, stdout, _) = run_lab(
        &["lemma", "intersection-lemma", "--exhaustive-bipartite", "2", "2"],
        b"",
        &[],
    );
    assert_eq!(code, 1, "the two perfect matchings sit on the boundary");
    let payload = &envelope(&stdout)["payload"];
    assert_eq!(payload["instances"], 10);
    assert_eq!(payload["counterexample_count"], 2);
    let worst = &payload["counterexamples"][0];
    assert_eq!(worst["diagnostics"]["d"], 1);
    assert_eq!(worst["diagnostics"]["best_intersection"], 0);
    assert_eq!(worst["diagnostics"]["bound"], "0");
}

#[test]
fn lemma_bipartite_source_is_intersection_only() {
    let (code, _, stderr) = run_lab(
        &["lemma", "cycle-lemma-1", "--exhaustive-bipartite", "3", "3"],
        b"",
        &[],
    );
    assert_eq!(code, 2);
    assert!(stderr.contains("intersection-lemma"));
}

#[test]
fn lemma_corpus_skips_comments_and_tracks_lines() {
    let path = temp_path("corpus.g6");
    std::fs::write(&path, "# two graphs\n\nE@Q?\n\nC~\n").expect("temp file writes");
    let (code, stdout, _) = run_lab(
        &[
            "lemma",
            "dense-null",
            "--corpus",
            path.to_str().expect("utf8 path"),
        ],
        b"",
        &[],
    );
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    let payload = &envelope(&stdout)["payload"];
    assert_eq!(payload["instances"], 2);
    assert_eq!(payload["counterexample_count"], 0);
    let lines: Vec<u64> = payload["sample_verdicts"]
        .as_array()
        .expect("sample verdicts")
        .iter()
        .map(|v| v["diagnostics"]["corpus_line"].as_u64().expect("line"))
        .collect();
    assert_eq!(lines, vec![3, 5]);
}

#[test]
fn lemma_lower_bound_witness_checks_parameters() {
    let (code, stdout, _) = run_lab(
        &["lemma", "lower-bound-witness", "--n", "2", "--m", "5"],
        b"",
        &[],
    );
    assert_eq!(code, 0);
    let payload = &envelope(&stdout)["payload"];
    assert_eq!(payload["instances"], 1);
    assert_eq!(payload["hypotheses_met"], 1);
    assert_eq!(payload["conclusion_held"], 1);

    let (code, _, stderr) = run_lab(
        &[
            "lemma",
            "lower-bound-witness",
            "--n",
            "2",
            "--m",
            "5",
            "--exhaustive",
            "4",
        ],
        b"",
        &[],
    );
    assert_eq!(code, 2);
    assert!(stderr.contains("takes no"));
}

#[test]
fn lemma_random_runs_are_reproducible() {
    let args = ["lemma", "nbd-nonbipartite", "--random", "5", "--n", "1"];
    let (code_a, stdout_a, _) = run_lab(&args, b"", &[]);
    let (code_b, stdout_b, _) = run_lab(&args, b"", &[]);
    assert_eq!((code_a, code_b), (0, 0));
    let mut a = envelope(&stdout_a);
    let mut b = envelope(&stdout_b);
    scrub_wall(&mut a);
    scrub_wall(&mut b);
    assert_eq!(a, b, "same flags must derive the same seed and report");

    let (code, stdout, _) = run_lab(
        &[
            "lemma",
            "nbd-nonbipartite",
            "--random",
            "5",
            "--n",
            "1",
            "--seed",
            "9",
        ],
        b"",
        &[],
    );
    assert_eq!(code, 0);
    assert_eq!(envelope(&stdout)["seed"], 9);
}

// ===== global surface =====

#[test]
fn help_and_version_exit_clean() {
    let (code, stdout, _) = run_lab(&["--help"], b"", &[]);
    assert_eq!(code, 0);
    assert!(stdout.contains("ramsey-lab") || stdout.contains("Usage"));
    let (code, _, _) = run_lab(&["--version"], b"", &[]);
    assert_eq!(code, 0);
}

#[test]
fn unknown_subcommands_are_usage_errors() {
    let (code, _, _) = run_lab(&["frobnicate"], b"", &[]);
    assert_eq!(code, 2);
}
