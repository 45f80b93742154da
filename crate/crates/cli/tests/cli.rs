use std::process::{Command, Output};

use invline_cli::{EnumerateOutput, LrOutput, PartitionsOutput, VerifyAllOutput};
use invline_core::character::TermList;
use invline_core::detect::{verify_theorem_a1, A1Report, Gl9Report};
use invline_core::lie::enumerate_irreps_of_dim;
use invline_core::lr::tensor_decompose_lr;
use invline_core::plethysm::sym_of_sym_sl2;
use invline_core::{detect, DetectionReport, Functor, GroupSpec, Partition, SizeCap};

fn invline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invline"))
        .args(args)
        .env_remove("INVLINE_SIZE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn partitions_prints_the_count() {
    let out = invline(&["partitions", "4", "3", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5\n");
}

#[test]
fn detect_b4_vector_is_not_detected() {
    let out = invline(&["detect", "--group", "B4:[1,0,0,0]", "--functor", "sym3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not detected, trivial multiplicity 0"));
}

#[test]
fn a1_table_has_twelve_rows_matching_n_mod_4() {
    let out = invline(&["verify", "a1", "--n-max", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(3).collect();
    assert_eq!(rows.len(), 12);
    for row in rows {
        let cells: Vec<&str> = row.split_whitespace().collect();
        let expect = if cells[1] == "1" { "yes" } else { "no" };
        assert_eq!(cells[3], expect, "{row}");
    }
}

#[test]
fn detect_json_round_trips() {
    let out = invline(&[
        "detect",
        "--group",
        "A1:[8]",
        "--functor",
        "sym3",
        "--format",
        "json",
    ]);
    let parsed: DetectionReport = serde_json::from_str(&stdout(&out)).unwrap();
    let spec: GroupSpec = "A1:[8]".parse().unwrap();
    assert_eq!(
        parsed,
        detect(&spec, Functor::Sym(3), SizeCap::default()).unwrap()
    );
    assert!(parsed.detected);
}

#[test]
fn verify_json_round_trips() {
    let out = invline(&["verify", "a1", "--n-max", "9", "--format", "json"]);
    let parsed: A1Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed, verify_theorem_a1(9, SizeCap::default()).unwrap());
}

#[test]
fn plethysm_json_round_trips() {
    let out = invline(&["plethysm", "3", "4", "--format", "json"]);
    let parsed: TermList = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed, sym_of_sym_sl2(3, 4).unwrap().to_term_list());
}

#[test]
fn plethysm_json_schema() {
    let out = invline(&["plethysm", "2", "2", "--format", "json"]);
    let compact: String = stdout(&out).split_whitespace().collect();
    assert_eq!(
        compact,
        r#"{"terms":[{"weight":[4],"mult":"1"},{"weight":[0],"mult":"1"}]}"#
    );
}

#[test]
fn lr_json_round_trips() {
    let out = invline(&["lr", "(2,1)", "2,1", "--rank", "3", "--format", "json"]);
    let parsed: LrOutput = serde_json::from_str(&stdout(&out)).unwrap();
    let lambda: Partition = "2,1".parse().unwrap();
    let d = tensor_decompose_lr(&lambda, &lambda, 3).unwrap();
    assert_eq!(parsed, LrOutput::new(&lambda, &lambda, &d));
    assert_eq!(
        parsed
            .terms
            .iter()
            .map(|t| t.mult.clone())
            .sum::<num_bigint::BigUint>(),
        6u32.into()
    );
}

#[test]
fn partitions_and_enumeration_json_round_trip() {
    let out = invline(&["partitions", "4", "3", "6", "--format", "json"]);
    let parsed: PartitionsOutput = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.count, 5u32.into());

    let out = invline(&["enumerate-dim", "9", "--format", "json"]);
    let parsed: EnumerateOutput = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.entries, enumerate_irreps_of_dim(9).unwrap());
}

#[test]
fn verify_all_is_deterministic_and_ordered() {
    let args = ["verify", "all", "--format", "json"];
    let first = invline(&args);
    let second = invline(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let parsed: VerifyAllOutput = serde_json::from_slice(&first.stdout).unwrap();
    assert!(parsed.passed);
    let order: Vec<&str> = parsed.suites.iter().map(|s| s.suite.as_str()).collect();
    assert_eq!(
        order,
        [
            "corollary",
            "a1",
            "plethysm-oracle",
            "a2",
            "schur",
            "rs",
            "gl9"
        ]
    );
    let gl9: Gl9Report = serde_json::from_value(parsed.suites[6].report.clone()).unwrap();
    assert_eq!(gl9.rows.len(), 10);
}

#[test]
fn props_is_seeded() {
    let a = invline(&["verify", "props", "--seed", "7", "--format", "json"]);
    let b = invline(&["verify", "props", "--seed", "7", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = invline(&["verify", "a1", "--n-maximum", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--n-maximum"));
}

#[test]
fn bad_arguments_name_the_flag() {
    let out = invline(&["detect", "--group", "A2:[1,0]", "--functor", "sym9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--functor"));

    let out = invline(&["lr", "2,1,1", "1", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--rank"));

    let out = invline(&["verify", "a1", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--n-max"));
}

#[test]
fn size_cap_from_flag_and_env() {
    let out = invline(&[
        "detect",
        "--group",
        "A2:[2,0]",
        "--functor",
        "sym3",
        "--size-cap",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("size cap"));

    let out = Command::new(env!("CARGO_BIN_EXE_invline"))
        .args(["detect", "--group", "A2:[2,0]", "--functor", "sym3"])
        .env("INVLINE_SIZE_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("INVLINE_SIZE_CAP"));
}

#[test]
fn out_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = invline(&[
        "verify",
        "rs",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn in_process_run_matches_exit_codes() {
    assert_eq!(
        invline_cli::run([
            "invline",
            "partitions",
            "1",
            "1",
            "1",
            "--out",
            "/nonexistent/dir/x"
        ]),
        2
    );
    assert_eq!(invline_cli::run(["invline", "--help"]), 0);
}
