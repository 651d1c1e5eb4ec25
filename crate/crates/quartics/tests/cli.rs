//! End-to-end runs of the `quartics` binary: exit codes, wire formats and
//! the verify round trip.

use std::process::{Command, Output};

fn quartics(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartics"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn tables_verifies_all_rows() {
    let out = quartics(&["tables"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("18/18 verified"));
}

#[test]
fn solve_emits_catalog_solution_as_json() {
    let out = quartics(&[
        "solve",
        "--variant",
        "five-plus",
        "--k",
        "7",
        "--count",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let first = &v.as_array().unwrap()[0];
    assert_eq!(first["g"], "21");
    assert_eq!(first["terms"][0], "6");
    assert_eq!(first["provenance"]["config"], "five_plus_k7");
    assert_eq!(first["provenance"]["multiple"], 1);
    assert_eq!(first["provenance"]["branch"], 1);
    assert_eq!(first["provenance"]["repaired_from_paper"], false);
    assert_eq!(first["provenance"]["point"]["X"], "4");
    assert_eq!(first["provenance"]["point"]["Y"], "-64");
}

#[test]
fn solve_csv_format() {
    let out = quartics(&[
        "solve",
        "--variant",
        "three-plus",
        "--k",
        "9",
        "--count",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("variant,k,terms,f,g,config,multiple,branch\n"));
    assert!(text.contains("three_plus,9,414|115|264,132,439,three_plus_k9,1,1"));
}

#[test]
fn solve_unknown_configs_exit_2() {
    let out = quartics(&["solve", "--variant", "three-plus", "--k", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no configuration"));

    let out = quartics(&["solve", "--variant", "three-plus", "--k", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rank zero"));

    let out = quartics(&[
        "solve",
        "--variant",
        "five-plus",
        "--k",
        "7",
        "--branch",
        "-",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_three_plus_k2_uses_identity_engine() {
    let out = quartics(&[
        "solve",
        "--variant",
        "three-plus",
        "--k",
        "2",
        "--count",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows[0]["g"], "5");
    assert_eq!(rows[1]["g"], "1201");
}

#[test]
fn verify_round_trip_and_corruption() {
    let dir = std::env::temp_dir();
    let good = dir.join("quartics_cli_good.json");
    let out = quartics(&[
        "solve",
        "--variant",
        "five-plus",
        "--k",
        "3",
        "--count",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(&good, stdout(&out)).unwrap();
    let out = quartics(&["verify", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("2/2 verified"));

    let bad = dir.join("quartics_cli_bad.json");
    let corrupted = stdout(&quartics(&["solve", "--variant", "five-plus", "--k", "3"]))
        .replace("\"241\"", "\"242\"");
    std::fs::write(&bad, corrupted).unwrap();
    let out = quartics(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_suites_exit_zero() {
    for what in ["curves", "identities", "families"] {
        let out = quartics(&["check", what]);
        assert_eq!(out.status.code(), Some(0), "check {what}: {}", stdout(&out));
    }
    let out = quartics(&["check", "curves"]);
    let text = stdout(&out);
    assert!(text.contains("five_plus_k1 curve matches catalog"));
    assert!(text.contains("seed has infinite order"));
}

#[test]
fn search_lists_catalog_tuple() {
    let out = quartics(&[
        "search",
        "--variant",
        "five-plus",
        "--k",
        "1",
        "--bound",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("(19,17,11) content=1 m=478"));
}

#[test]
fn families_eval_range() {
    let out = quartics(&["families", "--eval", "2", "--n-range=-2..2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[2]["g"], "37"); // n = 0 witness
    assert_eq!(rows[2]["provenance"]["repaired_from_paper"], true);
}

#[test]
fn registry_exports_and_reimports() {
    let out = quartics(&["registry"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"five_plus_k1\""));

    let dir = std::env::temp_dir();
    let path = dir.join("quartics_cli_registry.json");
    std::fs::write(&path, &text).unwrap();
    let out = quartics(&[
        "solve",
        "--variant",
        "five-plus",
        "--k",
        "7",
        "--registry",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"21\""));
}

#[test]
fn solve_output_is_byte_identical_across_runs() {
    let args = [
        "solve",
        "--variant",
        "five-plus",
        "--k",
        "8",
        "--count",
        "2",
    ];
    let a = quartics(&args);
    let b = quartics(&args);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(!stdout(&a).is_empty());
}
