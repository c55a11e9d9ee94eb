use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use sha2::{Digest, Sha256};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric-degen")).args(args).output().expect("binary runs")
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "-", "--quiet"]);
    let out = bin(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

fn scratch(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toric-degen-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, content).unwrap();
    p
}

fn check_status<'a>(report: &'a Value, name: &str) -> &'a str {
    report["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))["status"]
        .as_str()
        .unwrap()
}

#[test]
fn fan_check_on_p2() {
    let (code, r) = json_report(&["fan-check", "--builtin", "p2"]);
    assert_eq!(code, 0);
    assert_eq!(r["command"], "fan-check");
    assert_eq!(r["results"]["values"]["nabla_lattice_points"], 10);
    assert_eq!(r["results"]["values"]["anticanonical_sections"], 10);
    assert_eq!(check_status(&r, "reflexive"), "pass");
    assert_eq!(r["inputs"][0]["source"], "builtin:p2");
}

#[test]
fn non_smooth_fan_fails() {
    let (code, r) = json_report(&["fan-check", "--builtin", "index2-cone"]);
    assert_eq!(code, 1);
    assert_eq!(check_status(&r, "smooth"), "fail");
    assert_eq!(check_status(&r, "complete"), "fail");
}

#[test]
fn fan_file_input_is_hashed() {
    let text = r#"{"rank": 2, "rays": [[-1, -1], [1, 0], [0, 1]], "max_cones": [[1, 2], [0, 2], [0, 1]]}"#;
    let path = scratch("p2.json", text);
    let (code, r) = json_report(&["fan-check", "--fan", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["inputs"][0]["role"], "fan");
    assert_eq!(r["inputs"][0]["sha256"], hex::encode(Sha256::digest(text.as_bytes())));
    assert_eq!(r["results"]["values"]["nabla_lattice_points"], 10);
}

#[test]
fn malformed_input_exits_2_with_location() {
    let path = scratch("broken.json", "{\n  \"rank\": 2,\n  \"rays\": [[1, 0],\n}");
    let out = bin(&["fan-check", "--fan", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");

    let invalid = scratch("degenerate.json", r#"{"rank": 2, "rays": [[1, 0], [2, 0]], "max_cones": [[0, 1]]}"#);
    assert_eq!(bin(&["fan-check", "--fan", invalid.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bin(&["fan-check", "--builtin", "nope"]).status.code(), Some(2));
    assert_eq!(bin(&["fan-check"]).status.code(), Some(2));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}

#[test]
fn degenerate_quintic() {
    let (code, r) = json_report(&["degenerate", "--builtin", "quintic"]);
    assert_eq!(code, 0);
    let v = &r["results"]["values"];
    assert_eq!(v["components"].as_array().unwrap().len(), 5);
    assert_eq!(v["betti"], serde_json::json!([1, 0, 0, 1]));
    assert_eq!(v["max_jordan_block_count"], 1);
    assert_eq!(v["jordan_block_size"], 4);
    assert_eq!(check_status(&r, "sphere"), "pass");
    assert_eq!(r["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn degenerate_with_partition_file() {
    let path = scratch("blocks.json", r#"{"blocks": [[0, 1, 2], [3, 4, 5]]}"#);
    let (code, r) = json_report(&["degenerate", "--builtin", "p5", "--partition", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["values"]["components"].as_array().unwrap().len(), 9);
    assert_eq!(r["inputs"][1]["role"], "partition");

    let bad = scratch("bad-blocks.json", r#"{"blocks": [[0, 1, 2], [2, 3, 4, 5]]}"#);
    let out = bin(&["degenerate", "--builtin", "p5", "--partition", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_degeneration_is_reported() {
    let out = bin(&["degenerate", "--builtin", "empty"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("X₀ empty"));
    let (code, r) = json_report(&["monodromy", "--builtin", "empty"]);
    assert_eq!(code, 1);
    assert_eq!(check_status(&r, "1-components"), "fail");
    assert_eq!(check_status(&r, "4-fixed-point"), "fail");
    assert_eq!(check_status(&r, "2-hodge"), "assumed");
}

#[test]
fn monodromy_two_cubics() {
    let (code, r) = json_report(&["monodromy", "--builtin", "two-cubics"]);
    assert_eq!(code, 0);
    let v = &r["results"]["values"];
    assert_eq!(v["verdict"], "criterion satisfied (combinatorial+symbolic parts)");
    assert_eq!(v["residue"]["holds"], true);
    assert_eq!(v["fixed_point_chain"]["chain"].as_array().unwrap().len(), 3);
}

#[test]
fn period_series_and_sections_file() {
    let (code, r) = json_report(&["period", "--builtin", "quintic", "--order", "10"]);
    assert_eq!(code, 0);
    let coeffs = &r["results"]["values"]["coeffs"];
    assert_eq!(coeffs[5], "120");
    assert_eq!(coeffs[10], "113400");

    let zero = scratch("zero.json", r#"{"coeffs": []}"#);
    let (code, r) = json_report(&["period", "--builtin", "p4", "--sections", zero.to_str().unwrap(), "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["values"]["coeffs"], serde_json::json!(["1", "0", "0", "0"]));

    let out = bin(&["period", "--builtin", "two-cubics"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_is_deterministic() {
    let run = |name: &str| {
        let path = std::env::temp_dir().join(format!("toric-degen-det-{}-{name}.json", std::process::id()));
        let out = bin(&["degenerate", "--builtin", "two-cubics", "--quiet", "--json", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let text = fs::read_to_string(&path).unwrap();
        text.lines().filter(|l| !l.trim_start().starts_with("\"duration_ms\"")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(run("a"), run("b"));
}
