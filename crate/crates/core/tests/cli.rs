use std::io::Write;
use std::process::{Command, Output, Stdio};

fn treebound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treebound"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_k4_json() {
    let o = treebound(&["verify", "C~", "--json"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        r#"{"n":4,"m":6,"graph_id":"C~","chromatic":4,"tau":"16","bound":"16","tight":true,"extremal":true}"#
    );
}

#[test]
fn count_with_oracle() {
    let o = treebound(&["count", "IheA@GUAo", "--oracle"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        "IheA@GUAo  tau = 2000  bruteforce = 2000"
    );
}

#[test]
fn chromatic_from_edge_list_on_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treebound"))
        .args(["chromatic", "--format", "edgelist", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"0 1\n1 2\n2 3\n3 4\n4 0\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["chromatic"], 3);
}

#[test]
fn witness_counts() {
    let o = treebound(&["witness", "C~", "--json", "--trees"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["count"], 16);
    assert_eq!(v["bound"], "16");
    assert_eq!(v["trees"].as_array().unwrap().len(), 16);
    assert_eq!(v["trees"][0]["provenance"], "CLIQUE");
}

#[test]
fn sweep_summary_is_clean() {
    let o = treebound(&["sweep", "-n", "5", "--jobs", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["graphs"], 728);
    assert_eq!(last["summary"]["counterexamples"], 0);
    assert_eq!(last["summary"]["mismatches"], 0);
    assert_eq!(text.lines().count(), 729);
}

#[test]
fn sweep_corpus_file_in_witness_mode() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli_corpus.g6");
    std::fs::write(&path, "C~\nIheA@GUAo\nDQo\n").unwrap();
    let o = treebound(&[
        "sweep",
        "--input",
        path.to_str().unwrap(),
        "--mode",
        "verify+witness",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains(r#""witnesses":16"#));
}

#[test]
fn extremal_round_trip() {
    let o = treebound(&["gen-extremal", "--k", "4", "--attach", "2,4"]);
    assert!(o.status.success());
    let g6 = stdout(&o).trim().to_owned();
    let o = treebound(&["extremal", &g6, "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["certificate"]["core"], serde_json::json!([0, 1, 2, 3]));
    let o = treebound(&["extremal", "Dhc"]);
    assert!(stdout(&o).contains("not extremal"));
}

#[test]
fn errors_exit_with_status_2() {
    let o = treebound(&["verify", "C~~"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at byte 2"));
    let o = treebound(&["sweep", "-n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = treebound(&["witness", "Cl", "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
}
