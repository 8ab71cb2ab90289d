use std::io::Write;
use std::process::Command;

use serde_json::Value;

fn formata(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_formata")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn headchars_json_lists_four_characters() {
    let (code, out, _) = formata(&["headchars", "S4", "--formation", "nilpotent", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 4);
    let degrees: Vec<i64> = v["characters"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["degree"].as_i64().unwrap())
        .collect();
    assert_eq!(degrees, vec![1, 1, 3, 3]);
}

#[test]
fn thm_b_reports_trivial_m_for_s4() {
    let (code, out, _) = formata(&["verify", "thm-b", "S4", "--formation", "nilpotent", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["theorem"], "thm-b");
    assert_eq!(v["instances"][0]["inputs"]["M_order"], 1);
    assert_eq!(v["summary"]["pass"], true);
}

#[test]
fn counterexample_passes() {
    let (code, out, _) = formata(&["verify", "counterexample-2S4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS counterexample-2S4"));
}

#[test]
fn table_json_schema() {
    let (code, out, _) = formata(&["table", "C7:C3", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 21);
    assert_eq!(v["exponent"], 21);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    let chi = &v["irreducibles"][4];
    assert!(chi["values"][0]["coeffs"].is_array());
}

#[test]
fn group_files_are_accepted() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "degree 4\n(0 1)\n(0 1 2 3)").unwrap();
    let path = file.path().to_str().unwrap();
    let (code, out, _) = formata(&["projector", path, "--formation", "nilpotent"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("order 8"));
}

#[test]
fn unknown_inputs_exit_two() {
    let (code, _, err) = formata(&["series", "NoSuchGroup"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown group"));
    let (code, _, err) = formata(&["residual", "S4", "--formation", "hypersolvable"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown formation"));
    assert_eq!(formata(&["frobnicate", "S4"]).0, 2);
    assert_eq!(formata(&["verify", "thm-c", "S4", "--prime", "5"]).0, 2);
}

#[test]
fn normal_subgroups_from_the_command_line() {
    let (code, out, _) = formata(&["verify", "thm-a", "S4", "--normal", "(0 1)(2 3);(0 2)(1 3)"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS thm-a S4 nilpotent (4/4"));
    let (code, _, err) = formata(&["verify", "thm-a", "S4", "--normal", "(0 1)"]);
    assert_eq!(code, 2);
    assert!(err.contains("normal"));
}

#[test]
fn verify_all_is_deterministic() {
    let a = formata(&["verify", "all"]);
    let b = formata(&["verify", "all"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn capacity_override_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_formata"))
        .args(["table", "S4"])
        .env("FORMATA_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
