use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_mhgr");

fn mhgr(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("MHGR_VERTEX_CAP").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classified_nonexistence_exits_3() {
    let o = mhgr(&["synthesize", "--group", "D6", "-m", "3"]);
    assert_eq!(code(&o), 3);
    let cert = stdout_json(&o);
    assert_eq!(cert["kind"], "nonexistence-classified");
    assert_eq!(cert["evidence"]["clause"], "(a)");
    assert_eq!(cert["schema"], 1);
}

#[test]
fn witnesses_exit_0() {
    let o = mhgr(&["synthesize", "--group", "C2^3", "-m", "3", "--verify"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["evidence"]["aut_order"], 8);

    let o = mhgr(&["synthesize", "--group", "C5", "-m", "4", "--verify"]);
    assert_eq!(code(&o), 0);
    let cert = stdout_json(&o);
    assert_eq!(cert["evidence"]["valency"], 5);
    assert_eq!(cert["route"], "catalog");
}

#[test]
fn m2_points_to_search() {
    let o = mhgr(&["synthesize", "--group", "C3", "-m", "2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("mhgr search"));
}

#[test]
fn errors_exit_1() {
    assert_eq!(code(&mhgr(&["synthesize", "--group", "D7", "-m", "3"])), 1);
    assert_eq!(code(&mhgr(&["synthesize", "--group", "C3", "-m", "1"])), 1);
    assert_eq!(code(&mhgr(&["verify", "/nonexistent/file.json"])), 1);
    assert_eq!(code(&mhgr(&["bogus"])), 1);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let o = mhgr(&["verify", s(&bad)]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed JSON"));
}

#[test]
fn parse_errors_name_position() {
    let o = mhgr(&["synthesize", "--group", "C2xZ3", "-m", "3"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("position 3"), "{err}");
}

#[test]
fn capacity_exits_4() {
    let o = Command::new(BIN)
        .args(["synthesize", "--group", "C2^5", "-m", "4"])
        .env("MHGR_VERTEX_CAP", "64")
        .output()
        .unwrap();
    assert_eq!(code(&o), 4);
    let o = mhgr(&["search", "--group", "C12", "-m", "4"]);
    assert_eq!(code(&o), 4, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn help_explains_dihedral_order() {
    let o = mhgr(&["synthesize", "--help"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("ORDER"));
}

#[test]
fn verify_matrix_and_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = dir.path().join("c6_m3.json");
    std::fs::write(
        &matrix,
        r#"{"group": "C6", "m": 3, "entries": [
            {"i": 1, "j": 2, "elems": [0, 3]},
            {"i": 1, "j": 3, "elems": [0, 5]},
            {"i": 2, "j": 3, "elems": [1, 5]}]}"#,
    )
    .unwrap();
    let o = mhgr(&["verify", s(&matrix)]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("3-HGR of group of order 6"));

    let cert = dir.path().join("cert.json");
    assert_eq!(code(&mhgr(&["synthesize", "--group", "C6", "-m", "3", "--out", s(&cert)])), 0);
    assert_eq!(code(&mhgr(&["verify", s(&cert)])), 0);

    let text = std::fs::read_to_string(&cert).unwrap().replace("\"aut_order\": 6", "\"aut_order\": 12");
    std::fs::write(&cert, text).unwrap();
    let o = mhgr(&["verify", s(&cert)]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("aut_order"));
}

#[test]
fn verify_neither_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = dir.path().join("k.json");
    std::fs::write(&matrix, r#"{"group": "C3", "m": 2, "entries": [{"i": 1, "j": 2, "elems": [0, 1, 2]}]}"#).unwrap();
    let o = mhgr(&["verify", s(&matrix), "--json"]);
    assert_eq!(code(&o), 3);
    assert_eq!(stdout_json(&o)["kind"], "neither");
}

#[test]
fn search_reports_counts() {
    let o = mhgr(&["search", "--group", "C2", "-m", "4"]);
    assert_eq!(code(&o), 3);
    let doc = stdout_json(&o);
    assert_eq!(doc["verdict"], "no witness");
    assert_eq!(doc["regular_candidates"], 216);
    assert_eq!(doc["candidates_examined"], 216);

    let o = mhgr(&["search", "--group", "C2^2", "-m", "3"]);
    assert_eq!(stdout_json(&o)["regular_candidates"], 346);

    let o = mhgr(&["search", "--group", "C6", "-m", "3", "--first-witness", "--workers", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn search_certificate_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("none.json");
    let o = mhgr(&["search", "--group", "C3", "-m", "3", "--mode", "normalized", "--certificate", s(&cert)]);
    assert_eq!(code(&o), 3);
    let c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["kind"], "nonexistence-search");
    assert_eq!(code(&mhgr(&["verify", s(&cert)])), 0);
}

#[test]
fn oracle_aut_path() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("path3.edges");
    std::fs::write(&f, "p 3 2\n0 1\n1 2\n").unwrap();
    let o = mhgr(&["oracle-aut", s(&f)]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "2");

    let g6 = dir.path().join("k4.g6");
    std::fs::write(&g6, "C~\n").unwrap();
    assert_eq!(String::from_utf8_lossy(&mhgr(&["oracle-aut", s(&g6)]).stdout).trim(), "24");

    std::fs::write(&f, "p 10 0\n").unwrap();
    assert_eq!(code(&mhgr(&["oracle-aut", s(&f)])), 4);
}

#[test]
fn graph_output_formats() {
    let o = mhgr(&["synthesize", "--group", "C6", "-m", "3", "--format", "edgelist"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("p 18 36\n"));
    let o = mhgr(&["synthesize", "--group", "C6", "-m", "3", "--format", "graph6"]);
    let line = String::from_utf8_lossy(&o.stdout).trim().to_string();
    assert_eq!(mhgr::formats::parse_graph6(&line).unwrap().edge_count(), 36);
}

#[test]
fn seed_changes_large_m_witness_only() {
    let a = mhgr(&["synthesize", "--group", "C1", "-m", "12", "--format", "graph6"]);
    let b = mhgr(&["synthesize", "--group", "C1", "-m", "12", "--format", "graph6"]);
    let c = mhgr(&["synthesize", "--group", "C1", "-m", "12", "--format", "graph6", "--seed", "99"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(code(&c), 0);
}

#[test]
fn catalog_list_and_export() {
    let o = mhgr(&["catalog", "list", "--json"]);
    let list = stdout_json(&o);
    let entries = list.as_array().unwrap();
    assert!(entries.iter().any(|e| e["origin"] == "search-derived"));
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("e.json");
    assert_eq!(code(&mhgr(&["catalog", "export", "0", "--out", s(&f)])), 0);
    assert_eq!(code(&mhgr(&["verify", s(&f)])), 0);
    assert_eq!(code(&mhgr(&["catalog", "export", "9999"])), 1);
}

#[test]
fn table_groups_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("c3.json");
    std::fs::write(&f, r#"{"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}"#).unwrap();
    let spec = format!("@{} x C2", s(&f));
    let o = mhgr(&["synthesize", "--group", &spec, "-m", "3"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout_json(&o)["group"]["table"].is_array());

    std::fs::write(&f, r#"{"order": 2, "table": [[0,1],[1,1]]}"#).unwrap();
    let o = mhgr(&["synthesize", "--group", &format!("@{}", s(&f)), "-m", "3"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("axiom"));
}
