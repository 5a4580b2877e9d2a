//! End-to-end tests of the binary: exit-code contract, output determinism,
//! and JSON schema integrity.

use std::process::{Command, Output};

fn aqec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aqec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn construct_json_schema() {
    let out = aqec(&[
        "construct",
        "aqec-bch",
        "--n",
        "15",
        "--q",
        "2",
        "--d1",
        "3",
        "--d2",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["schema"], "derived-code/1");
    assert_eq!(v["parameters"], "[[15,3,5/3]]_2");
    assert_eq!(v["n"], 15);
    assert_eq!(v["k"], 3);
    assert_eq!(v["d_x"], 3);
    assert_eq!(v["d_z"], 5);
    assert_eq!(v["certified"], "exact");
    assert_eq!(v["bounds"]["singleton"], "pass");
    assert_eq!(v["bounds"]["slack"], 6);
}

#[test]
fn construct_rs_is_mds() {
    let out = aqec(&[
        "construct",
        "aqec-rs",
        "--q",
        "7",
        "--d1",
        "2",
        "--d2",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["parameters"], "[[6,3,3/2]]_7");
    assert_eq!(v["bounds"]["mds"], true);
    assert_eq!(v["bounds"]["singleton"], "tight");
}

#[test]
fn construct_ssc_euclid() {
    let out = aqec(&[
        "construct",
        "ssc-euclid",
        "--n",
        "15",
        "--q",
        "2",
        "--delta",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["parameters"], "[[15,4,3,3]]_2");
    assert_eq!(v["r"], 3);
    assert_eq!(v["d"], 3);
}

#[test]
fn construct_ssc_cyclic_with_gauge_cosets() {
    let out = aqec(&[
        "construct",
        "ssc-cyclic",
        "--n",
        "15",
        "--q",
        "2",
        "--delta",
        "3",
        "--gauge",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["n"], 15);
    assert_eq!(v["k"], 5);
    assert_eq!(v["r"], 2);
}

#[test]
fn exit_code_contract() {
    // 0: success.
    let out = aqec(&[
        "verify",
        "[[15,3,5/3]]_2",
        "--c1",
        "bch(15,2,3)",
        "--c2",
        "bch(15,2,5)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // 1: verification mismatch, with the computed witness on stdout.
    let out = aqec(&[
        "verify",
        "[[31,10,8/3]]_2",
        "--c1",
        "[31,26]_2",
        "--c2",
        "[31,16]_2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("k: claimed 10, computed 11"), "{text}");
    // 2: bad input.
    let out = aqec(&[
        "verify",
        "not-a-claim",
        "--c1",
        "bch(15,2,3)",
        "--c2",
        "bch(15,2,5)",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = aqec(&["construct", "aqec-rs", "--q", "5", "--d1", "2", "--d2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = aqec(&[
        "construct",
        "aqec-bch",
        "--n",
        "15",
        "--q",
        "6",
        "--d1",
        "3",
        "--d2",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // 3: enumeration cap exhausted; the record is still emitted with bounds.
    let out = aqec(&[
        "construct",
        "aqec-bch",
        "--n",
        "127",
        "--q",
        "2",
        "--d1",
        "5",
        "--d2",
        "15",
        "--cap",
        "1000",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["parameters"], "[[127,64,>=15/>=5]]_2");
    assert_eq!(v["certified"], "lower-bound");
}

#[test]
fn json_error_object_on_bad_input() {
    let out = aqec(&[
        "construct",
        "aqec-rs",
        "--q",
        "6",
        "--d1",
        "2",
        "--d2",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stderr.clone()).unwrap()).unwrap();
    assert_eq!(v["schema"], "derived-code/1");
    assert_eq!(v["exit_code"], 2);
    assert!(v["error"].as_str().unwrap().contains("not prime"));
}

#[test]
fn reproduce_output_is_deterministic() {
    let a = aqec(&["reproduce", "table1", "--format", "json"]);
    let b = aqec(&["reproduce", "table1", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let a = aqec(&["reproduce", "example", "--format", "json"]);
    let b = aqec(&["reproduce", "example", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&a)).unwrap();
    assert_eq!(v["d_x"], 3);
    assert_eq!(v["d_z"], 5);
    assert_eq!(v["aqec"]["parameters"], "[[15,3,5/3]]_2");
    assert_eq!(v["ssc"]["parameters"], "[[15,4,3,3]]_2");
    assert_eq!(v["assc"]["parameters"], "[[15,4,3,5/3]]_2");
}

#[test]
fn verify_other_constructions() {
    // A single-distance claim with two parents goes through the QEC route.
    let out = aqec(&["verify", "[[15,3,3]]_2", "--c1", "bch(15,2,3)", "--c2", "bch(15,2,5)"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    // RS parents.
    let out = aqec(&["verify", "[[6,3,3/2]]_7", "--c1", "rs(7,2)", "--c2", "rs(7,3)"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    // The zero-dimensional row with a dual parent.
    let out = aqec(&["verify", "[[15,0,5/4]]_2", "--c1", "dual-bch(15,2,5)", "--c2", "bch(15,2,5)"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    // Asymmetric subsystem claim with parents in either order.
    let out = aqec(&["verify", "[[15,4,3,5/3]]_2", "--c1", "bch(15,2,3)", "--c2", "bch(15,2,5)"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
}

#[test]
fn example_text_shows_generators() {
    let out = aqec(&["reproduce", "example"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("g(x) = x^4 + x + 1"), "{text}");
    assert!(text.contains("d_x = 3, d_z = 5"), "{text}");
}

#[test]
fn sweep_rows_are_reported() {
    let out = aqec(&["sweep", "aqec-rs", "--q", "8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert_eq!(row["bounds"]["mds"], true);
    }
}

#[test]
fn hermitian_and_designed_formulas() {
    let out = aqec(&[
        "construct",
        "ssc-hermitian",
        "--n",
        "15",
        "--q",
        "2",
        "--delta",
        "3",
        "--r",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["parameters"], "[[15,6,1,>=3]]_2");
    let out = aqec(&[
        "construct",
        "ssc-bch",
        "--n",
        "15",
        "--q",
        "2",
        "--delta",
        "3",
        "--r",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["parameters"], "[[15,4,3,>=3]]_2");
}
