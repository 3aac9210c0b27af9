//! End-to-end tests of the qstab binary: report contracts, exit codes,
//! golden files and byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn qstab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qstab"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .expect("golden file")
}

fn run(args: &[&str]) -> Output {
    qstab().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qstab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_reports_five_qubit_parameters() {
    let out = run(&["check", "--in", fixture("five_qubit.chk").to_str().unwrap()]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["commutative"], true);
    assert_eq!(doc["rank"], 4);
    assert_eq!(doc["n"], 5);
    assert_eq!(doc["k"], 1);
}

#[test]
fn check_output_matches_golden_file() {
    let out = run(&["check", "--in", fixture("five_qubit.chk").to_str().unwrap()]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        golden("five_qubit_check.json")
    );
}

#[test]
fn mindist_is_exact_and_deterministic_modulo_seconds() {
    let args = ["mindist", "--in"];
    let path = fixture("five_qubit.chk");
    let first = run(&[args[0], args[1], path.to_str().unwrap()]);
    let second = run(&[args[0], args[1], path.to_str().unwrap()]);
    assert!(first.status.success());
    let mut a = stdout_json(&first);
    let mut b = stdout_json(&second);
    assert_eq!(a["d"], 3);
    assert_eq!(a["truncated"], false);
    assert_eq!(a["enumerated"], 63);
    a.as_object_mut().unwrap().remove("seconds");
    b.as_object_mut().unwrap().remove("seconds");
    assert_eq!(a, b);
}

#[test]
fn mindist_cap_truncates_with_lower_bound_key() {
    let out = run(&[
        "mindist",
        "--in",
        fixture("five_qubit.chk").to_str().unwrap(),
        "--cap",
        "10",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["truncated"], true);
    assert_eq!(doc["enumerated"], 10);
    assert!(doc.get("d").is_none());
    assert!(doc["d_lower"].as_u64().unwrap() >= 3);
}

#[test]
fn construct_css_builds_steane_and_is_byte_deterministic() {
    let h = fixture("hamming_check.txt");
    let args = [
        "construct",
        "css",
        "--in",
        h.to_str().unwrap(),
        "--in",
        h.to_str().unwrap(),
        "--mindist",
    ];
    let first = run(&args);
    assert!(first.status.success(), "{:?}", first);
    let doc = stdout_json(&first);
    assert_eq!(doc["code"]["n"], 7);
    assert_eq!(doc["code"]["k"], 1);
    assert_eq!(doc["code"]["d_exact"], 3);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn rm_report_matches_golden_file() {
    let out = run(&["rm", "--r", "1", "--m", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), golden("rm_1_3.json"));
}

#[test]
fn rm_capability_section() {
    let out = run(&["rm", "--r", "2", "--m", "5", "--capability"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["code"]["n"], 32);
    assert_eq!(doc["code"]["k"], 10);
    assert_eq!(doc["code"]["d_classical"], 8);
    assert_eq!(doc["capability"]["t_star"], 1);
    assert_eq!(doc["capability"]["additional_count"], "1984");
    assert_eq!(doc["capability"]["additional_surplus"], true);
}

#[test]
fn bounds_output_matches_golden_file() {
    let out = run(&[
        "bounds",
        "--names",
        "gv-thm2,gv-css,singleton-thm2,quantum-singleton",
        "--grid",
        "5",
    ]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), golden("bounds_5.csv"));
}

#[test]
fn check_round_trips_through_check_out() {
    let tmp = tmp_path("rm_1_3.chk");
    let out = run(&[
        "rm",
        "--r",
        "1",
        "--m",
        "3",
        "--check-out",
        tmp.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let check = run(&["check", "--in", tmp.to_str().unwrap()]);
    assert!(check.status.success());
    let doc = stdout_json(&check);
    assert_eq!(doc["n"], 8);
    assert_eq!(doc["k"], 3);
    assert_eq!(doc["commutative"], true);
}

#[test]
fn parse_error_names_the_line() {
    let tmp = tmp_path("ragged.chk");
    std::fs::write(&tmp, "101|010\n10|01\n").unwrap();
    let out = run(&["check", "--in", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&out);
    assert_eq!(doc["error"]["kind"], "parse");
    assert!(doc["error"]["message"]
        .as_str()
        .unwrap()
        .contains("line 2"));
}

#[test]
fn empty_matrix_file_is_an_error() {
    let tmp = tmp_path("empty.chk");
    std::fs::write(&tmp, "# nothing here\n").unwrap();
    let out = run(&["check", "--in", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["kind"], "empty-matrix");
}

#[test]
fn missing_separator_is_an_error() {
    let tmp = tmp_path("nosep.chk");
    std::fs::write(&tmp, "1010\n0101\n").unwrap();
    let out = run(&["check", "--in", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["kind"], "missing-separator");
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decode_round_trip_and_uncorrectable() {
    let path = fixture("five_qubit.chk");
    let out = run(&[
        "decode",
        "--in",
        path.to_str().unwrap(),
        "--weight",
        "1",
        "--syndrome",
        "0001",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["error"], "XIIII");

    let out = run(&[
        "decode",
        "--in",
        path.to_str().unwrap(),
        "--t-star",
        "0",
        "--syndrome",
        "0001",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["detected_uncorrectable"], true);
}

#[test]
fn search_perm_returns_identity_for_commutative_input() {
    let out = run(&[
        "search-perm",
        "--in",
        fixture("five_qubit.chk").to_str().unwrap(),
        "--mode",
        "exhaustive",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["outcome"], "found");
    let image: Vec<u64> = doc["permutation"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(image, (0..10).collect::<Vec<u64>>());
}

#[test]
fn qr_wrong_residue_class_is_a_contract_error() {
    let out = run(&["qr", "--p", "11", "--variant", "circulant"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["kind"], "wrong-residue-class");
}

#[test]
fn tables_5_desk_scale_matches() {
    let out = run(&["tables", "5", "--pmax", "17"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let cells = doc["cells"].as_array().unwrap();
    for cell in cells {
        let p = cell["p"].as_u64().unwrap();
        if p <= 17 {
            assert_eq!(cell["status"], "matched", "p = {p}");
        } else {
            assert_eq!(cell["status"], "skipped-budget", "p = {p}");
        }
    }
}

#[test]
fn circulant_search_finds_the_five_qubit_cell() {
    let out = run(&["circulant-search", "--n", "5", "--k", "1", "--seed", "3"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["found"]["d"], 3);
    assert_eq!(doc["seed"], 3);
}

#[test]
fn budget_env_variable_is_honored() {
    let out = qstab()
        .args(["mindist", "--in", fixture("five_qubit.chk").to_str().unwrap()])
        .env("QSTAB_BUDGET", "10")
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["budget"], 10);
    assert_eq!(doc["truncated"], true);
}
