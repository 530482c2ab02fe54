use std::process::{Command, Output};

use serde_json::Value;

fn qhodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhodge")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = qhodge(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn bad_arguments_exit_with_usage_error() {
    for args in [
        &["verify", "--calculus", "8"][..],
        &["verify", "--q", "1"],
        &["verify", "--q", "0"],
        &["verify", "--q", "-1"],
        &["verify", "--q", "2"],
        &["verify", "--check", "nonsense"],
        &["verify", "--sign", "x"],
        &["sphere", "laplacian", "--calc", "3"],
        &["sphere", "laplacian", "--calc", "6"],
    ] {
        assert_eq!(qhodge(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn braiding_export_rows_are_images() {
    let v = json(&["matrix", "--calculus", "7", "--object", "sigma"]);
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 9);
    assert_eq!(m[3][1], "q^4");
    assert_eq!(m[0][0], "1");
}

#[test]
fn antisymmetrizer_exports_have_the_right_shape() {
    let a2 = json(&["matrix", "--calculus", "1", "--object", "a2"]);
    assert_eq!(a2["matrix"].as_array().unwrap().len(), 9);
    let a3 = json(&["matrix", "--calculus", "1", "--object", "a3", "--sign", "-"]);
    assert_eq!(a3["matrix"].as_array().unwrap().len(), 27);
    assert_eq!(a3["sign"], "-");
}

#[test]
fn probe_table() {
    let v = json(&["sphere", "probe", "--all"]);
    let expect = serde_json::json!({"1": true, "2": true, "3": false, "4": true, "5": true, "7": false});
    assert_eq!(v, expect);
}

#[test]
fn sixth_calculus_skips_the_sphere() {
    let v = json(&["verify", "--calculus", "6", "--check", "sphere", "--format", "json"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["status"] == "skip" && c["witness"] == "not projectable"));
    assert!(checks.iter().any(|c| c["name"] == "projectability" && c["status"] == "pass"));
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_exit_code_follows_failures() {
    assert_eq!(qhodge(&["verify", "--calculus", "2", "--check", "braid,2,antisymmetrizers"]).status.code(), Some(0));
    assert_eq!(qhodge(&["verify", "--calculus", "7", "--check", "bridges"]).status.code(), Some(1));
}

#[test]
fn verify_at_a_point() {
    let v = json(&["verify", "--calculus", "3", "--q", "4/9", "--check", "1,ideal", "--sign", "-", "--format", "json"]);
    assert_eq!(v["q"], "4/9");
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass" && c["sign"] != 1));
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("qhodge-{}.txt", std::process::id()));
    let args = ["verify", "--calculus", "4", "--check", "braid"];
    let direct = qhodge(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(qhodge(&with_out).status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn hodge_table_first_calculus() {
    let v = json(&["table", "hodge", "--calculus", "1", "--op", "S"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["input"], "1");
    assert_eq!(rows[0]["output"][0]["form"], "w-^w+^wz");
    let t = json(&["table", "hodge", "--calculus", "1", "--op", "T", "--sign", "-"]);
    assert_eq!(t["rows"].as_array().unwrap().len(), 8);
}

#[test]
fn laplacian_on_linear_functions() {
    let v = json(&["sphere", "laplacian", "--calc", "1", "--degree", "1"]);
    assert_eq!(v["basis"], serde_json::json!(["1", "B0", "B+", "B-"]));
    let m = v["matrix"].as_array().unwrap();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.as_array().unwrap().iter().enumerate() {
            let want = if i == j && i > 0 { "2*q^2 + 2" } else { "0" };
            assert_eq!(x, want, "({i}, {j})");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let a = qhodge(&["verify", "--calculus", "5", "--check", "tables,classification", "--format", "text"]);
    let b = qhodge(&["verify", "--calculus", "5", "--check", "tables,classification", "--format", "text"]);
    assert_eq!(a.stdout, b.stdout);
}
