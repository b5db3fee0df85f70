//! End-to-end tests driving the built binary.

use std::path::Path;
use std::process::{Command, Output};

fn coalitions(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coalitions"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn solve_emits_schema_stable_json() {
    let out = coalitions(&["solve", "--gen", "path:9", "--style", "strong", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["graph"], "path:9");
    assert_eq!(record["style"], "strong");
    assert_eq!(record["value"], 5);
    assert_eq!(record["certified"], true);
    assert!(record["nodes_explored"].as_u64().unwrap() > 0);
    assert!(record["elapsed_ms"].is_u64());
    let witness = record["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 5);
    let mut seen: Vec<u64> = witness
        .iter()
        .flat_map(|b| b.as_array().unwrap().iter().map(|v| v.as_u64().unwrap()))
        .collect();
    seen.sort_unstable();
    assert_eq!(seen, (1..=9).collect::<Vec<u64>>());
}

#[test]
fn solve_witness_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("witness.txt");
    let out = coalitions(&[
        "solve",
        "--gen",
        "path:9",
        "--witness-out",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let check = coalitions(&[
        "verify",
        "--gen",
        "path:9",
        "--partition",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(
        exit_code(&check),
        0,
        "verify rejected the solver's own witness"
    );
    assert!(stdout(&check).contains("valid: yes"));
}

#[test]
fn solve_reports_zero_without_witness_for_excluded_graphs() {
    let out = coalitions(&["solve", "--gen", "star:4", "--style", "strong"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("value: 0"));
    assert!(text.contains("certified: true"));
    assert!(text.contains("witness: none"));
}

#[test]
fn solve_value_one_on_the_one_vertex_graph() {
    let out = coalitions(&["solve", "--gen", "complete:1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("value: 1"));
}

#[test]
fn capacity_overflow_exits_two_and_names_the_limit() {
    let out = coalitions(&["solve", "--gen", "path:25"]);
    assert_eq!(exit_code(&out), 2);
    let text = stderr(&out);
    assert!(text.contains("25"), "message should name the order: {text}");
    assert!(text.contains("20"), "message should name the limit: {text}");
}

#[test]
fn lowering_the_limit_tightens_the_capacity_gate() {
    let out = coalitions(&["solve", "--gen", "path:6", "--limit", "5"]);
    assert_eq!(exit_code(&out), 2);
    let text = stderr(&out);
    assert!(
        text.contains('6') && text.contains('5'),
        "message should name both: {text}"
    );
}

#[test]
fn verify_rejects_a_single_block_partition() {
    let dir = tempfile::tempdir().unwrap();
    let partition = dir.path().join("partition.txt");
    std::fs::write(&partition, "1 2 3\n").unwrap();
    let out = coalitions(&[
        "verify",
        "--gen",
        "path:3",
        "--partition",
        partition.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("invalid_sds_block"));
    assert!(text.contains("valid: no"));
}

#[test]
fn verify_accepts_a_known_witness_with_partner_lists() {
    let dir = tempfile::tempdir().unwrap();
    let partition = dir.path().join("partition.txt");
    std::fs::write(&partition, "3 5\n1\n2\n4\n").unwrap();
    let out = coalitions(&[
        "verify",
        "--gen",
        "path:5",
        "--partition",
        partition.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("valid: yes"));
    assert!(text.contains("partners:"));
    assert!(text.contains("non_sds_with_partner"));
}

#[test]
fn scg_export_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let partition = dir.path().join("partition.txt");
    std::fs::write(&partition, "1 3\n2 4\n6\n5 7\n").unwrap();

    let run = |out_path: &Path| {
        let out = coalitions(&[
            "scg",
            "--gen",
            "path:7",
            "--partition",
            partition.to_str().unwrap(),
            "--out",
            out_path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
        assert!(stdout(&out).contains("edges: 4"));
        std::fs::read(out_path).unwrap()
    };
    let first = run(&dir.path().join("a.dot"));
    let second = run(&dir.path().join("b.dot"));
    assert_eq!(first, second);

    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("graph coalition {\n"));
    for edge in ["V1 -- V3", "V1 -- V4", "V2 -- V3", "V2 -- V4"] {
        assert!(text.contains(edge), "missing {edge} in:\n{text}");
    }
}

#[test]
fn scg_rejects_invalid_partitions() {
    let dir = tempfile::tempdir().unwrap();
    let partition = dir.path().join("partition.txt");
    std::fs::write(&partition, "1 2 3\n").unwrap();
    let out = coalitions(&[
        "scg",
        "--gen",
        "path:3",
        "--partition",
        partition.to_str().unwrap(),
        "--out",
        dir.path().join("x.dot").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("invalid_sds_block"));
}

#[test]
fn path_table_matches_its_closed_form() {
    let out = coalitions(&["table", "paths", "--max", "13"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("yes").count(), 13);
    assert!(text.contains("all rows match"));
}

#[test]
fn bipartite_table_accepts_both_family_spellings() {
    for name in ["complete_bipartite", "complete-bipartite"] {
        let out = coalitions(&["table", name, "--rmax", "3"]);
        assert_eq!(exit_code(&out), 0);
        assert!(stdout(&out).contains("all rows match"));
    }
}

#[test]
fn check_bounds_applies_the_exclusion_on_stars() {
    let out = coalitions(&["check-bounds", "--gen", "star:5"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("universal-vertex exclusion"));
    assert!(text.contains("value = 0"));
    assert!(text.contains("violations: 0"));
}

#[test]
fn check_bounds_random_sweep_is_clean() {
    let out = coalitions(&["check-bounds", "--random", "5", "--n", "8", "--seed", "7"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("domatic refinement lower bound"));
    assert!(text.contains("violations: 0"));
}

#[test]
fn check_bounds_random_requires_a_seed() {
    let out = coalitions(&["check-bounds", "--random", "5", "--n", "8"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("--seed"));
}

#[test]
fn unknown_generator_specs_exit_one() {
    let out = coalitions(&["solve", "--gen", "moebius:5"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("moebius"));
}

#[test]
fn file_sources_round_trip_through_the_edge_list_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n").unwrap();
    let out = coalitions(&["solve", "--file", path.to_str().unwrap(), "--json"]);
    assert_eq!(exit_code(&out), 0);
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["value"], 5);
}
