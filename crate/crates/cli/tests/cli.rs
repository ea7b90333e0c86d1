//! End-to-end tests against the built binary: output shapes, exit codes,
//! and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

fn sgring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn sgp_prints_invariants() {
    let out = sgring(&["sgp", "3", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("frobenius    7"));
    assert!(text.contains("symmetric    true"));

    let out = sgring(&["sgp", "3", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["frobenius"], 7);
    assert_eq!(v["apery"], serde_json::json!([0, 10, 5]));
}

#[test]
fn sgp_trivial_semigroup() {
    let out = sgring(&["sgp", "1", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["frobenius"], -1);
    assert_eq!(v["genus"], 0);
}

#[test]
fn sgp_rejects_bad_gcd_with_exit_2() {
    let out = sgring(&["sgp", "6", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd"));
}

#[test]
fn ideal_conductor_and_ord() {
    let out = sgring(&["ideal", "-s", "3,5", "conductor", "--ord"]);
    let text = stdout(&out);
    assert!(text.contains("exponents [8,9,10]"));
    assert!(text.contains("ord 2"));

    let out = sgring(&["ideal", "-s", "3,4,5", "canonical"]);
    assert!(stdout(&out).contains("exponents [0,1]"));

    let out = sgring(&["ideal", "-s", "3,5", "trace", "[3,5]"]);
    assert!(stdout(&out).contains("exponents [3,5]"));

    let out = sgring(&["ideal", "-s", "3,5", "colon", "[0]", "[3,5]", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["exponents"], serde_json::json!([0, 7]));
}

#[test]
fn ideal_bad_op_exits_2() {
    let out = sgring(&["ideal", "-s", "3,5", "frobnicate", "[1]"]);
    assert_eq!(out.status.code(), Some(2));
}

fn write_instance(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("instance.sgr");
    std::fs::write(
        &path,
        "S = <3,5>\n\
         m = maxideal\n\
         c = conductor\n\
         M = module ideal m\n\
         K = module quotient m\n\
         W = module syzygy 1 M\n\
         jmax = 5\n\
         check lemma-43 M 1\n\
         check prop-trentry m\n\
         check prop-her c\n\
         check gorenstein-trace\n",
    )
    .unwrap();
    path
}

#[test]
fn resolve_residue_field() {
    let dir = std::env::temp_dir().join("sgring-cli-test-resolve");
    std::fs::create_dir_all(&dir).unwrap();
    let file = write_instance(&dir);
    let csv = dir.join("betti.csv");
    let dump = dir.join("res.json");
    let out = sgring(&[
        "resolve",
        file.to_str().unwrap(),
        "K",
        "--csv",
        csv.to_str().unwrap(),
        "--dump",
        dump.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("betti 1,2,2,2,2,2"));

    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("j,beta_j,max_syzygy_degree\n0,1,0\n1,2,5\n"));

    let dump_v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&dump).unwrap()).unwrap();
    assert_eq!(dump_v["betti"], serde_json::json!([1, 2, 2, 2, 2, 2]));
    assert_eq!(dump_v["steps"][0]["entries"][0]["deg"], 3);
}

#[test]
fn resolve_maximal_ideal_module() {
    let dir = std::env::temp_dir().join("sgring-cli-test-resolve-m");
    std::fs::create_dir_all(&dir).unwrap();
    let file = write_instance(&dir);
    let out = sgring(&["resolve", file.to_str().unwrap(), "M", "--jmax", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("betti 2,2,2,2"));

    // First syzygy module of m, reached through the nested module spec.
    let out = sgring(&["resolve", file.to_str().unwrap(), "W", "--jmax", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("betti 2,2,2"));
}

#[test]
fn resolve_truncated_residue_field() {
    let dir = std::env::temp_dir().join("sgring-cli-test-trunc");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("trunc.sgr");
    std::fs::write(
        &file,
        "S = <1>\nm = maxideal\nK = module quotient m\ntruncate = 3\njmax = 4\n",
    )
    .unwrap();
    let out = sgring(&["resolve", file.to_str().unwrap(), "K"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("betti 1,1,1,1,1"));
}

#[test]
fn resolve_small_bound_exits_3() {
    let dir = std::env::temp_dir().join("sgring-cli-test-bound");
    std::fs::create_dir_all(&dir).unwrap();
    let file = write_instance(&dir);
    let out = sgring(&[
        "resolve",
        file.to_str().unwrap(),
        "M",
        "--degree-bound",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree bound"));
}

#[test]
fn verify_default_family_and_exit_codes() {
    let out = sgring(&["verify", "prop-nuco", "--a-max", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("prop-nuco"));
    assert!(text.contains("0 FAIL"));

    let out = sgring(&["verify", "no-such-id"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_from_instance_file() {
    let dir = std::env::temp_dir().join("sgring-cli-test-verify");
    std::fs::create_dir_all(&dir).unwrap();
    let file = write_instance(&dir);
    let jsonl = dir.join("reports.jsonl");
    let csv = dir.join("reports.csv");
    let out = sgring(&[
        "verify",
        "*",
        "--file",
        file.to_str().unwrap(),
        "--out",
        jsonl.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let lines: Vec<String> = std::fs::read_to_string(&jsonl)
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(lines.len(), 4);
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["verdict"], "PASS");
    }
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("statement_id,instance,verdict,bound\n"));
}

#[test]
fn verify_output_is_byte_identical() {
    let args = ["verify", "prop-*", "--genus-max", "4", "--json"];
    let a = sgring(&args);
    let b = sgring(&args);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(!stdout(&a).is_empty());
}

#[test]
fn explore_tables() {
    let out = sgring(&["explore", "hyp", "--a-max", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("a,b,ord_conductor"));
    assert!(text.lines().count() > 3);

    let out = sgring(&["explore", "qu2", "--mult-max", "5", "--genus-max", "7"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("semigroup,genus"));

    let out = sgring(&["explore", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
