//! End-to-end tests of the binary: flag surface, output schemas, and
//! the exit-code contract (0 = match, 2 = mismatch, 3 = partial,
//! 64 = usage).

use std::path::PathBuf;
use std::process::{Command, Output};

fn duadic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duadic"))
        .args(args)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn code_info_json_schema() {
    let out = duadic(&["code-info", "--m", "7", "--S", "0,4,5", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["n"], 127);
    assert_eq!(v["k"], 64);
    assert_eq!(v["defining_set_size"], 63);
    assert_eq!(v["duadic"], true);
    assert_eq!(v["bounds"]["table"], 9);
    assert_eq!(v["bounds"]["square_root_mu_minus_one"], 12);
    assert!(v["bounds"]["amplified"]["bound"].as_u64().unwrap() >= 9);
    assert_eq!(v["properties"]["self_dual_extended"], true);
    assert_eq!(v["properties"]["doubly_even_extended"], true);
    assert_eq!(v["dual"]["k"], 63);
    assert_eq!(v["s_bar"], serde_json::json!([1, 2, 3]));
}

#[test]
fn code_info_m5_bound() {
    let out = duadic(&["code-info", "--m", "5", "--S", "0,1,2", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["n"], 31);
    assert_eq!(v["k"], 16);
    assert!(v["bounds"]["amplified"]["bound"].as_u64().unwrap() >= 5);
}

#[test]
fn code_info_non_duadic_class() {
    let out = duadic(&["code-info", "--m", "7", "--S", "0,1,2", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["duadic"], false);
}

#[test]
fn code_info_rejects_degenerate_classes() {
    let out = duadic(&["code-info", "--m", "7", "--S", "0,1,2,3,4,5"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn usage_error_exit_code() {
    let out = duadic(&["code-info", "--m"]);
    assert_eq!(out.status.code(), Some(64));
    let out = duadic(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn help_exits_zero() {
    let out = duadic(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("code-info"));
}

#[test]
fn verify_small_m_passes() {
    let out = duadic(&["verify", "--m", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[pass]"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_scan_only_json() {
    let out = duadic(&["verify", "--m", "9", "--scan", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["failures"], 0);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert!(checks[0]["name"].as_str().unwrap().contains("m = 9"));
    assert!(checks[0]["detail"].as_str().unwrap().contains("{0,1,4}"));
}

#[test]
fn verify_lemmas_csv() {
    let out = duadic(&["verify", "--m", "13", "--lemmas", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "section,m,name,pass,detail"
    );
    assert!(text.contains("L2"));
    assert!(text.contains("true"));
}

#[test]
fn table1_partial_budget_exit_and_checkpoint_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let checkpoint: PathBuf = dir.path().join("t1.json");
    let report: PathBuf = dir.path().join("report.json");
    let out = duadic(&[
        "table1",
        "--budget",
        "100000",
        "--checkpoint",
        checkpoint.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3), "partial budget must exit 3");

    // The report round-trips: certificates can be re-read and re-judged
    // without recomputation.
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 12);
    for e in entries {
        assert_eq!(e["verdict"], "partial");
        let cert: duadic::distance::DistanceCertificate =
            serde_json::from_value(e["certificate"].clone()).unwrap();
        assert!(cert.lower <= cert.upper);
        assert!(cert.lower <= e["expected_d"].as_u64().unwrap());
        assert!(e["expected_d"].as_u64().unwrap() <= cert.upper);
    }

    // The checkpoint parses as a map of certificates.
    let cp: std::collections::BTreeMap<String, duadic::distance::DistanceCertificate> =
        serde_json::from_str(&std::fs::read_to_string(&checkpoint).unwrap()).unwrap();
    assert_eq!(cp.len(), 12);

    // Resuming with the same budget reruns partial entries but still
    // exits 3 deterministically.
    let again = duadic(&[
        "table1",
        "--budget",
        "100000",
        "--checkpoint",
        checkpoint.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(again.status.code(), Some(3));
}

#[test]
fn table2_partial_budget_lists_comparison_codes() {
    let out = duadic(&["table2", "--budget", "100000", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    let v = stdout_json(&out);
    let labels: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["label"].as_str().unwrap())
        .collect();
    assert!(labels.contains(&"C[2,7,{0}]"));
    assert!(labels.contains(&"C[4,7,{2,3}]"));
    assert!(labels.contains(&"PRM(3,7)"));
    assert!(labels.contains(&"dual PRM(3,7)"));
    assert_eq!(labels.len(), 10);
}

#[test]
fn seed_determinism_same_output() {
    let run = || {
        let out = duadic(&[
            "table2", "--budget", "100000", "--seed", "42", "--format", "json",
        ]);
        assert_eq!(out.status.code(), Some(3));
        stdout_json(&out)["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| {
                (
                    e["certificate"]["upper"].as_u64().unwrap(),
                    e["certificate"]["witness_hex"].as_str().unwrap().to_string(),
                )
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(run(), run());
}

#[test]
fn prim_poly_override() {
    // x^7 + x^3 + 1 (hex 89) is also primitive; the code parameters
    // are unchanged, the generator differs.
    let default = duadic(&["code-info", "--m", "7", "--S", "0,4,5", "--format", "json"]);
    let overridden = duadic(&[
        "code-info", "--m", "7", "--S", "0,4,5", "--prim-poly", "89", "--format", "json",
    ]);
    assert!(overridden.status.success());
    let d = stdout_json(&default);
    let o = stdout_json(&overridden);
    assert_eq!(d["k"], o["k"]);
    assert_ne!(d["generator_hex"], o["generator_hex"]);
    // A non-primitive override is rejected as a usage error.
    let bad = duadic(&["code-info", "--m", "7", "--S", "0,4,5", "--prim-poly", "ff"]);
    assert_eq!(bad.status.code(), Some(64));
}

#[test]
fn env_variables_mirror_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_duadic"))
        .args(["code-info", "--format", "json"])
        .env("DUADIC_M", "5")
        .env("DUADIC_S", "0,1,3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 31);
    assert_eq!(v["m"], 5);
    assert_eq!(v["s"], serde_json::json!([0, 1, 3]));
}
