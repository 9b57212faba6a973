//! End-to-end tests running the compiled binary.

use std::path::Path;
use std::process::{Command, Output};

fn lefschetz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(args)
        .env_remove("LEFSCHETZ_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn det_headline_value_json() {
    let out = lefschetz(&[
        "det", "--alpha", "2", "--beta", "9", "--gamma", "13", "--t", "12", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["payload"]["determinant"], "-410893744849276115319750");
    assert_eq!(doc["payload"]["size"], 7);
}

#[test]
fn hilbert_csv_rows() {
    let out = lefschetz(&[
        "hilbert", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "degree,value\r\n0,1\r\n1,3\r\n2,6\r\n3,6\r\n4,3\r\n"
    );
}

#[test]
fn tilings_count() {
    let out = lefschetz(&["tilings", "--a", "1", "--b", "1", "--c", "1", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["payload"]["count"], "2");
    assert_eq!(doc["payload"]["oracle_count"], "2");
    assert_eq!(doc["payload"]["agreement"], true);
}

#[test]
fn wlp_reports_both_methods_and_agreement() {
    let out = lefschetz(&[
        "wlp", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "3", "--char", "2",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row = &doc["payload"]["characteristics"][0];
    assert_eq!(row["characteristic"], 2);
    assert_eq!(row["determinant_holds"], false);
    assert_eq!(row["direct_holds"], false);
    assert_eq!(row["agreement"], true);
    assert_eq!(doc["payload"]["determinant"], "2");
}

#[test]
fn wlp_inapplicable_criterion_still_reports_direct() {
    let out = lefschetz(&[
        "wlp", "--alpha", "0", "--beta", "1", "--gamma", "2", "--t", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["payload"]["criterion_applicable"], false);
    let row = &doc["payload"]["characteristics"][0];
    assert_eq!(row["determinant_holds"], serde_json::Value::Null);
    assert_eq!(row["direct_holds"], true);
}

#[test]
fn primes_headline_factorization() {
    let out = lefschetz(&[
        "primes", "--alpha", "2", "--beta", "9", "--gamma", "13", "--t", "12", "--bound",
        "10000", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let payload = &doc["payload"];
    assert_eq!(payload["fails_every_characteristic"], false);
    assert_eq!(payload["sign"], -1);
    assert_eq!(payload["cofactor"], "1");
    let primes: Vec<u64> = payload["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["prime"].as_u64().unwrap())
        .collect();
    assert_eq!(primes, vec![2, 3, 5, 11, 13, 19, 23, 29, 5011]);
}

#[test]
fn primes_zero_determinant_fails_everywhere() {
    let out = lefschetz(&[
        "primes", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["payload"]["fails_every_characteristic"], true);
    assert_eq!(doc["payload"]["determinant"], "0");
}

#[test]
fn exit_codes() {
    // α > β violates the parameter invariants.
    let out = lefschetz(&["det", "--alpha", "3", "--beta", "1", "--gamma", "2", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("α ≤ β ≤ γ"), "{err}");

    // A part-(i) tuple is outside the criterion: inapplicable.
    let out = lefschetz(&["det", "--alpha", "0", "--beta", "1", "--gamma", "2", "--t", "2"]);
    assert_eq!(out.status.code(), Some(3));

    // Composite characteristic rejected at argument parsing.
    let out = lefschetz(&[
        "wlp", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "3", "--char", "4",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Bad environment cap.
    let out = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(["det", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "1"])
        .env("LEFSCHETZ_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_csv_deterministic_and_thread_independent() {
    let args = [
        "scan", "--box", "0..2,0..2,1..2,1..2", "--char", "0", "--char", "2", "--format", "csv",
    ];
    let first = stdout(&lefschetz(&args));
    let second = stdout(&lefschetz(&args));
    assert_eq!(first, second, "identical runs must be byte-identical");

    let capped = Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(args)
        .env("LEFSCHETZ_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first, stdout(&capped), "parallelism must not change output");

    let mut lines = first.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("alpha,beta,gamma,t,sigma,case,"));
    // Lexicographic row order, two characteristics per tuple.
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() % 2 == 0 && !rows.is_empty());
}

#[test]
fn scan_single_tuple_box() {
    let out = lefschetz(&[
        "scan", "--box", "1,1,1,2", "--char", "0", "--char", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["determinant"], "0");
    for v in rows[0]["verdicts"].as_array().unwrap() {
        assert_eq!(v["determinant_holds"], false);
        assert_eq!(v["direct_holds"], false);
        assert_eq!(v["agreement"], true);
    }
}

#[test]
fn json_runs_identical_up_to_timing_and_round_trip() {
    let args = [
        "matrix", "--alpha", "2", "--beta", "2", "--gamma", "2", "--t", "3", "--format", "json",
    ];
    let mut first: serde_json::Value = serde_json::from_str(&stdout(&lefschetz(&args))).unwrap();
    let mut second: serde_json::Value = serde_json::from_str(&stdout(&lefschetz(&args))).unwrap();
    first.as_object_mut().unwrap().remove("timing_ms");
    second.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(first, second);

    // Round-trip: parse and re-serialize reproduces the payload exactly.
    let payload = first["payload"].clone();
    let reparsed: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&payload).unwrap()).unwrap();
    assert_eq!(payload, reparsed);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("lefschetz-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hilbert.csv");
    let out = lefschetz(&[
        "hilbert", "--alpha", "1", "--beta", "2", "--gamma", "3", "--t", "1", "--format", "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(Path::new(&path)).unwrap();
    assert!(written.starts_with("degree,value\r\n0,1\r\n"));
    std::fs::remove_file(path).ok();
}

#[test]
fn predict_exceptional_tuple() {
    let out = lefschetz(&[
        "predict", "--alpha", "2", "--beta", "9", "--gamma", "13", "--t", "9", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["payload"]["case"], "EXCEPTIONAL");
    assert_eq!(doc["payload"]["wlp_holds"], false);
    assert_eq!(doc["payload"]["status"], "COMPUTED");
}

#[test]
fn matrix_csv_triples() {
    let out = lefschetz(&[
        "matrix", "--alpha", "1", "--beta", "1", "--gamma", "1", "--t", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "row,col,entry\r\n0,0,1\r\n0,1,1\r\n1,0,3\r\n1,1,3\r\n"
    );
}
