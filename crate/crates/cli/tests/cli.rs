use std::fs;
use std::process::{Command, Output};

use orbiclass::{InvariantTuple, MonodromyDatum};
use serde_json::Value;

fn orbiclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbiclass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn invariants_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("datum.json");
    fs::write(&path, r#"{"two_q": 8, "genus": 2, "d": [1,1], "x": [4]}"#).unwrap();
    let out = orbiclass(&["invariants", "--in", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let tuple: InvariantTuple = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(tuple.h1, None);
    let h2 = tuple.h2.unwrap();
    assert_eq!((h2.modulus, h2.values), (4, vec![1, 3]));

    let text = stdout(&orbiclass(&["invariants", "--in", path.to_str().unwrap()]));
    assert!(text.contains("undefined"));
    assert!(text.contains("{1,3} mod 4"));
}

#[test]
fn invariants_batch_returns_array() {
    let out = orbiclass(&[
        "invariants",
        "--json",
        "--in",
        r#"[{"two_q":8,"genus":2,"d":[1,7],"x":[]},{"two_q":8,"genus":1,"d":[3],"x":[2]}]"#,
    ]);
    assert!(out.status.success());
    let tuples: Vec<InvariantTuple> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(tuples.len(), 2);
    assert_eq!(tuples[1].l, 1);
}

#[test]
fn equivalent_torus_pair() {
    let out = orbiclass(&[
        "equivalent",
        "--a",
        r#"{"two_q":8,"genus":2,"d":[1,7],"x":[]}"#,
        "--b",
        r#"{"two_q":8,"genus":2,"d":[3,5],"x":[]}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "inequivalent");
}

#[test]
fn equivalent_rejects_mixed_orders() {
    let out = orbiclass(&[
        "equivalent",
        "--a",
        r#"{"two_q":8,"genus":2,"d":[1,7],"x":[]}"#,
        "--b",
        r#"{"two_q":12,"genus":2,"d":[1,5],"x":[]}"#,
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn census_json_has_three_classes() {
    let out = orbiclass(&[
        "census", "--two-q", "8", "--genus", "2", "--r", "0", "--json",
    ]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["total_vectors"], 8);
    assert_eq!(report["classes"].as_array().unwrap().len(), 3);
    // representatives parse back as data
    for class in report["classes"].as_array().unwrap() {
        let rep: MonodromyDatum = serde_json::from_value(class["representative"].clone()).unwrap();
        assert_eq!(rep.genus(), 2);
    }
}

#[test]
fn census_cone_orders_flag() {
    let out = orbiclass(&[
        "census",
        "--two-q",
        "8",
        "--genus",
        "2",
        "--cone-orders",
        "4,4",
        "--json",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["total_vectors"], 24);
}

#[test]
fn output_is_deterministic_across_threads() {
    let args = [
        "census", "--two-q", "12", "--genus", "3", "--r", "2", "--json",
    ];
    let one = orbiclass(&[&args[..], &["--threads", "1"]].concat());
    let four = orbiclass(&[&args[..], &["--threads", "4"]].concat());
    let again = orbiclass(&args);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, again.stdout);
}

#[test]
fn verify_clean_range_exits_zero() {
    let out = orbiclass(&[
        "verify", "--two-q", "8", "--genus", "2", "--r", "1", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert!(report["soundness_violations"]
        .as_array()
        .unwrap()
        .is_empty());
    assert!(report["completeness_violations"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn bfs_cap_exit_code() {
    let out = orbiclass(&[
        "orbit",
        "--in",
        r#"{"two_q":8,"genus":2,"d":[1,3],"x":[]}"#,
        "--bfs-cap",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = orbiclass(&[
        "verify",
        "--two-q",
        "8",
        "--genus",
        "2",
        "--r",
        "0",
        "--bfs-cap",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_reports_every_violation() {
    let out = orbiclass(&[
        "validate",
        "--json",
        "--in",
        r#"{"two_q":8,"genus":2,"d":[2,6],"x":[]}"#,
    ]);
    assert_eq!(out.status.code(), Some(1));
    let res = json(&out);
    let kinds: Vec<&str> = res["errors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["ParityD", "ParityD"]);

    let ok = orbiclass(&[
        "validate",
        "--in",
        r#"{"two_q":8,"genus":1,"d":[1],"x":[6,4,2,2]}"#,
        "--json",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["datum"]["x"], serde_json::json!([4, 2, 2, 6]));
}

#[test]
fn orbit_and_witness() {
    let out = orbiclass(&[
        "orbit",
        "--json",
        "--in",
        r#"{"two_q":8,"genus":2,"d":[1,3],"x":[]}"#,
    ]);
    assert_eq!(json(&out)["size"], 4);

    let out = orbiclass(&[
        "witness",
        "--json",
        "--a",
        r#"{"two_q":8,"genus":2,"d":[1,1],"x":[4]}"#,
        "--b",
        r#"{"two_q":8,"genus":2,"d":[1,5],"x":[4]}"#,
    ]);
    assert_eq!(
        json(&out)["moves"],
        serde_json::json!([{"kind": "H2", "i": 2, "j": 1}])
    );

    let out = orbiclass(&[
        "witness",
        "--a",
        r#"{"two_q":8,"genus":2,"d":[1,7],"x":[]}"#,
        "--b",
        r#"{"two_q":8,"genus":2,"d":[1,3],"x":[]}"#,
    ]);
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn embeddable_and_cover_genus() {
    let out = orbiclass(&[
        "embeddable",
        "--json",
        "--in",
        r#"{"two_q":12,"genus":2,"d":[3,7],"x":[2,2]}"#,
    ]);
    let v = json(&out);
    assert_eq!(
        (v["embeddable"].clone(), v["condition"].clone()),
        (true.into(), 3.into())
    );

    let out = orbiclass(&[
        "cover-genus",
        "--json",
        "--in",
        r#"{"two_q":8,"genus":1,"d":[3],"x":[2]}"#,
    ]);
    assert_eq!(json(&out), serde_json::json!({"chi": 2, "genus_cover": 0}));
}

#[test]
fn orientable_pair_command() {
    let out = orbiclass(&[
        "orientable-pair",
        "--json",
        "--in",
        r#"{"two_q": 8, "genus_orientable": 1, "x": [2], "c": [3]}"#,
    ]);
    assert!(out.status.success());
    assert_eq!(
        json(&out),
        serde_json::json!({"first": [2, 3], "second": [5, 6]})
    );
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(orbiclass(&["census", "--nope"]).status.code(), Some(1));
    assert_eq!(orbiclass(&[]).status.code(), Some(1));
    assert_eq!(
        orbiclass(&["orbit", "--in", "/does/not/exist.json"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(orbiclass(&["--help"]).status.code(), Some(0));
}
