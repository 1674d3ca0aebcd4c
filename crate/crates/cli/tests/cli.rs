use std::process::{Command, Output};

use serde_json::{json, Value};

fn bl4kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bl4kit")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn presentation(x11: &str, x: [[&str; 2]; 2]) -> String {
    json!({"kind": "presentation", "x11": x11, "xi3": "1", "X": x}).to_string()
}

const GAMMA: &str = r#"[["1","0","0","0"],["-5","1","0","0"],["2","0","1","0"],["7","2","5","1"]]"#;

#[test]
fn classify_reduces_to_the_pair_representative() {
    let out = bl4kit(&["classify", &presentation("1", [["2", "0"], ["5", "3"]])]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["label"], json!({"variant": "D", "lambda": "3/2", "mu": "1/2"}));
    assert_eq!(v["properties"], json!({"lie": true, "malcev": true, "binary_lie": true}));
    assert!(v.get("witness").is_none());
}

#[test]
fn label_serializes_variant_first() {
    let out = bl4kit(&["classify", &presentation("1", [["2", "0"], ["5", "3"]])]);
    let text = String::from_utf8(out.stdout).unwrap();
    let compact: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(compact["label"].to_string(), r#"{"variant":"D","lambda":"3/2","mu":"1/2"}"#);
}

#[test]
fn classify_constants_after_a_basis_change() {
    // a0 with e1 rescaled by -2
    let doc = json!({"kind": "constants", "dim": 4, "entries": [
        {"i": 1, "j": 2, "k": 3, "v": "-2"},
        {"i": 0, "j": 3, "k": 3, "v": "1"},
    ]});
    let out = bl4kit(&["classify", "--witness", &doc.to_string()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["label"], json!({"variant": "A0"}));
    assert_eq!(v["aut_group"]["abstract_id"], "Gamma");
    assert_eq!(v["steps"][0], "basis");
}

#[test]
fn not_bl4_exits_with_two_and_a_reason() {
    let doc = json!({"kind": "constants", "dim": 4, "entries": [
        {"i": 0, "j": 1, "k": 1, "v": "1"},
        {"i": 0, "j": 2, "k": 2, "v": "1"},
    ]});
    let out = bl4kit(&["classify", &doc.to_string()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["reason"], "wrong-derived-dimension");

    let out = bl4kit(&["classify", &presentation("0", [["0", "0"], ["1", "0"]])]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["reason"], "decomposable");
}

#[test]
fn malformed_input_exits_with_one() {
    for bad in [
        r#"{"kind":"presentation","x11":"1.5","xi3":"1","X":[["1","0"],["0","1"]]}"#,
        r#"{"kind":"presentation","x11":"1","xi3":"0","X":[["1","0"],["0","1"]]}"#,
        r#"{"kind":"constants","dim":4,"entries":[{"i":1,"j":1,"k":0,"v":"1"}]}"#,
        "not json",
        "/nonexistent/file.json",
    ] {
        let out = bl4kit(&["classify", bad]);
        assert_eq!(out.status.code(), Some(1), "{bad}");
    }
    assert_eq!(bl4kit(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn iso_pair_and_non_pair() {
    let d32 = presentation("1", [["2", "0"], ["0", "3"]]);
    let half = presentation("1", [["1/2", "0"], ["0", "3/2"]]);
    let d23 = presentation("1", [["3", "0"], ["0", "2"]]);
    let v = json_of(&bl4kit(&["iso", &d32, &half]));
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    let v = json_of(&bl4kit(&["iso", &d32, &d23]));
    assert_eq!(v["isomorphic"], false);

    let b1 = presentation("1", [["1", "1"], ["0", "0"]]);
    let b2 = presentation("1", [["2", "1"], ["0", "0"]]);
    assert_eq!(json_of(&bl4kit(&["iso", &b1, &b2]))["isomorphic"], false);

    let v = json_of(&bl4kit(&["iso", &b1, &b1]));
    let identity = json!([["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]);
    assert_eq!(v["witness"], identity);
}

#[test]
fn aut_check_examples() {
    let a0 = presentation("0", [["0", "0"], ["0", "1"]]);
    let v = json_of(&bl4kit(&["aut", &a0, "--check", GAMMA]));
    assert_eq!(v["check"]["accepted"], true);
    assert_eq!(v["check"]["params"]["p3"], "2");
    assert_eq!(v["check"]["params"]["q3"], "5");
    assert_eq!(v["check"]["params"]["u3"], "7");

    let a1 = presentation("1", [["-1", "0"], ["0", "0"]]);
    let sigma = r#"[["-1","0","0","0"],["0","0","1","0"],["0","1","0","0"],["0","0","0","-1"]]"#;
    let v = json_of(&bl4kit(&["aut", &a1, "--check", sigma]));
    assert_eq!(v["check"]["accepted"], true);
    assert_eq!(v["check"]["params"]["coset"], true);

    let c2 = presentation("1", [["1", "0"], ["0", "2"]]);
    let diag = r#"[["2","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]"#;
    let v = json_of(&bl4kit(&["aut", &c2, "--check", diag]));
    assert_eq!(v["check"]["accepted"], false);

    let singular = r#"[["0","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]"#;
    assert_eq!(bl4kit(&["aut", &c2, "--check", singular]).status.code(), Some(1));
}

#[test]
fn aut_samples_are_deterministic_and_transported_to_the_input_basis() {
    // d(3,2), not in canonical form
    let d32 = presentation("1", [["2", "0"], ["0", "3"]]);
    let run = || bl4kit(&["aut", &d32, "--sample", "4", "--seed", "9"]).stdout;
    assert_eq!(run(), run());
    let v: Value = serde_json::from_slice(&run()).unwrap();
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 4);
    for s in samples {
        let m = serde_json::to_string(&s["matrix"]).unwrap();
        let check = json_of(&bl4kit(&["aut", &d32, "--check", &m]));
        assert_eq!(check["check"]["accepted"], true, "{m}");
    }
}

#[test]
fn selftest_quick_passes() {
    let out = bl4kit(&["selftest", "quick", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count(), 10);
}
