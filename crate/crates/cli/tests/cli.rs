use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn isored(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isored")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = isored(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn reduce_example() {
    let v = json(&["reduce", &fixture("ex3.g"), "--keep", "0,1"]);
    assert_eq!(v["labels"], serde_json::json!(["0", "1"]));
    assert_eq!(v["entries"][0][0], serde_json::json!({"num": ["1"], "den": ["0", "1"]}));
    assert_eq!(v["entries"][1][0], serde_json::json!({"num": ["1"], "den": ["-1", "1"]}));
    assert_eq!(v["entries"][1][1], serde_json::json!({"num": ["1"], "den": ["1"]}));
    let both = json(&["reduce", &fixture("ex3.g"), "--keep", "0,1", "--method", "both"]);
    assert_eq!(both["agree"], true);
    assert_eq!(both["schur"], v);
}

#[test]
fn reduce_k2_and_full_set() {
    assert!(stdout(&["reduce", &fixture("k2.g"), "--keep", "0"]).contains("1/λ"));
    let full = json(&["reduce", &fixture("ex3.g"), "--keep", "0,1,2,3,4"]);
    let one = serde_json::json!({"num": ["1"], "den": ["1"]});
    assert_eq!(full["entries"][4][4], one);
    assert_eq!(full["entries"][1][0], serde_json::json!({"num": [], "den": ["1"]}));
}

#[test]
fn cospectral_examples() {
    assert_eq!(json(&["cospectral", &fixture("fig1.g"), "2", "4"])["cospectral"], true);
    assert_eq!(json(&["cospectral", &fixture("p3.g"), "0", "1"])["cospectral"], false);
    let v = json(&["cospectral", &fixture("fig7.g"), "3", "6", "--strong", "--numeric-check"]);
    assert_eq!(v["strongly"], true);
    assert_eq!(v["numeric"]["strongly"], true);
    assert!(stdout(&["cospectral", &fixture("fig7.g"), "3", "6", "--strong"]).contains("strongly: true"));
}

#[test]
fn latency_examples() {
    let v = json(&["latency", &fixture("fig7.g"), "3", "6"]);
    assert_eq!(v["measure"], "2/3");
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    assert_eq!(json(&["latency", &fixture("fig1.g"), "2", "4"])["measure"], "1");
    assert_eq!(json(&["latency", &fixture("c4.g"), "0", "2"])["measure"], "0");
}

#[test]
fn unpack_then_reduce_round_trips() {
    let dir = std::env::temp_dir().join(format!("isored-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("fig5.g");
    let msg = stdout(&["unpack", &fixture("fig5.json"), "--out", out.to_str().unwrap()]);
    assert!(msg.contains("10-vertex"));
    let reduced = json(&["reduce", out.to_str().unwrap(), "--keep", "0,1"]);
    let input: Value = serde_json::from_str(&std::fs::read_to_string(fixture("fig5.json")).unwrap()).unwrap();
    assert_eq!(reduced, input);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn walks_and_charpoly() {
    assert!(stdout(&["walks", &fixture("p3.g"), "1", "--K", "4"]).contains("[1, 0, 2, 0, 4]"));
    let v = json(&["walks", &fixture("p3.g"), "1", "--K", "4"]);
    assert_eq!(v["closed"], serde_json::json!(["1", "0", "2", "0", "4"]));
    let text = stdout(&["charpoly", &fixture("k2.g")]);
    assert!(text.starts_with("# p(λ) = det(M - λI)\n"));
    assert!(text.ends_with("λ^2 - 1\n"));
    assert_eq!(json(&["charpoly", &fixture("p3.g"), "--delete", "1"])["text"], "λ^2");
}

#[test]
fn json_is_deterministic() {
    for args in [
        vec!["latency", "FIG7", "3", "6", "--json"],
        vec!["cospectral", "FIG7", "3", "6", "--strong", "--json"],
        vec!["reduce", "FIG7", "--keep", "0,3,6", "--json"],
    ] {
        let f = fixture("fig7.g");
        let args: Vec<&str> = args.iter().map(|&a| if a == "FIG7" { f.as_str() } else { a }).collect();
        assert_eq!(stdout(&args), stdout(&args));
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| isored(args).status.code().unwrap();
    assert_eq!(code(&["reduce", "/nonexistent.g", "--keep", "0"]), 1);
    assert_eq!(code(&["reduce", &fixture("k2.g"), "--keep", "5"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["reduce", &fixture("ex3.g"), "--keep", "1,3,4", "--method", "branch"]), 2);
    assert_eq!(code(&["latency", &fixture("p3.g"), "0", "1"]), 2);
    assert_eq!(code(&["latency", &fixture("fig7.g"), "3", "6", "--max-n", "5"]), 2);
    assert_eq!(code(&["cospectral", &fixture("k2.g"), "1", "1"]), 2);
    assert_eq!(code(&["--help"]), 0);
}
