use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn formring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_formring"))
        .args(args)
        .env_remove("FORMRING_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = formring(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn cubic_ring_table() {
    let v = json(&["ring", "--n", "3", "--form", "1,0,0,1"]);
    assert_eq!(v["n"], 3);
    // ζ1ζ2 = -1
    assert_eq!(v["c"][0][1], serde_json::json!([-1, 0, 0]));
    let text = stdout(&formring(&["ring", "--n", "3", "--form", "1,0,0,1"]));
    assert!(text.contains("ζ1·ζ2 = -1"));
}

#[test]
fn zero_form_has_zero_products() {
    let text = stdout(&formring(&["ring", "--n", "3", "--form", "0,0,0,0"]));
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.ends_with("= 0")));
}

#[test]
fn universal_cubic_table() {
    let text = stdout(&formring(&["ring", "--universal", "--n", "3"]));
    assert!(text.contains("ζ1·ζ1 = -f1*ζ1 + f0*ζ2"), "{text}");
}

#[test]
fn discriminants_and_properties() {
    let v = json(&["disc", "--n", "2", "--form", "1,1,1"]);
    assert_eq!(v["disc_form"], "-3");
    assert_eq!(v["ring_disc"], "-3");
    assert_eq!(v["equal"], true);
    let p = json(&["props", "--n", "3", "--form", "2,0,0,2"]);
    assert_eq!(p["primitive"], false);
    assert_eq!(p["gorenstein"], false);
    let p = json(&["props", "--n", "3", "--form", "1,2,3,4"]);
    assert_eq!(p["invertible"], true);
    assert_eq!(p["gorenstein"], true);
}

#[test]
fn ideal_json_round_trips() {
    let v = json(&["ideal", "--n", "3", "--k", "-1", "--form", "1,2,3,4"]);
    assert_eq!(v["k"], -1);
    let again: Value = serde_json::from_str(&v.to_string()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn round_trips() {
    for form in ["1,2,3,4,5", "0,0,0,0,0"] {
        let o = formring(&["roundtrip", "--n", "4", "--form", form]);
        assert!(o.status.success(), "{form}");
    }
    let o = formring(&["roundtrip", "--n", "3", "--form", "0,0,0,0"]);
    assert!(stdout(&o).starts_with("pass"));
    let a = formring(&["roundtrip", "--random", "--n", "5", "--trials", "40", "--seed", "7"]);
    let b = Command::new(env!("CARGO_BIN_EXE_formring"))
        .args(["roundtrip", "--random", "--n", "5", "--trials", "40"])
        .env("FORMRING_SEED", "7")
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "--suite", "universal", "--n", "4"]);
    assert_eq!(v["passed"], true);
    let v = json(&["verify", "--suite", "oracle", "--n", "5", "--trials", "20"]);
    assert_eq!(v["passed"], true);
    let v = json(&["verify", "--suite", "random", "--n", "4", "--trials", "10"]);
    assert_eq!(v["passed"], true);
    let o = formring(&["verify", "--suite", "random", "--n", "3", "--trials", "0"]);
    assert!(o.status.success());
}

#[test]
fn exit_codes() {
    let o = formring(&["ring", "--n", "3", "--form", "1,x,0,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 2"));
    assert_eq!(formring(&["ring", "--n", "4", "--form", "1,0,0,1"]).status.code(), Some(2));
    assert_eq!(formring(&["verify", "--suite", "nope", "--n", "3"]).status.code(), Some(2));
    assert_eq!(formring(&["ideal", "--n", "3", "--k", "5", "--form", "1,0,0,1"]).status.code(), Some(2));
}

#[test]
fn modular_context() {
    let v = json(&["ring", "--n", "3", "--form", "2,4,6,8", "--context", "Z/2"]);
    assert_eq!(v["context"], "Z/2");
    let flat: Vec<&Value> = v["c"].as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap()).collect();
    assert!(flat.iter().flat_map(|e| e.as_array().unwrap()).all(|x| x == 0));
}

#[test]
fn tabulate_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.jsonl");
    let o = formring(&["tabulate", "--n", "3", "--height", "1", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let records: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 81);
    assert!(records.iter().any(|r| r["form"] == serde_json::json!([0, 0, 0, 0])));
    for r in &records {
        assert_eq!(r["v"], 1);
        assert_eq!(r["roundtrip"], true);
        if r["primitive"] == true {
            assert_eq!(r["gorenstein"], true);
        }
    }
    let cursor = dir.path().join("t.jsonl.cursor");
    assert_eq!(fs::read_to_string(&cursor).unwrap().trim(), "81");

    // cut the file mid-record and resume
    fs::write(&out, &text[..text.len() - 40]).unwrap();
    let o = formring(&["tabulate", "--n", "3", "--height", "1", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let resumed = fs::read_to_string(&out).unwrap();
    let strip = |s: &str| -> Vec<Value> {
        s.lines()
            .map(|l| {
                let mut v: Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("micros");
                v
            })
            .collect()
    };
    assert_eq!(strip(&resumed), strip(&text));
}
