use std::path::PathBuf;
use std::process::Command;

fn frobact() -> Command {
    Command::new(env!("CARGO_BIN_EXE_frobact"))
}

fn configs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = frobact()
        .args([
            "verify",
            "coprime_facts",
            "--instance",
            "c5_by_c2_inversion",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] i_generation"), "{text}");
}

#[test]
fn json_report_has_sorted_keys_and_five_checks() {
    let out = frobact()
        .args([
            "verify",
            "coprime_facts",
            "--instance",
            "c5_by_c2_inversion",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["scenarios"][0]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 5);
    let keys: Vec<&String> = checks[0].as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn abstain_only_exits_two() {
    let out = frobact()
        .args([
            "verify",
            "grading_criterion",
            "--instance",
            "gf11_non_nilpotent",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_frobenius_check_exits_one() {
    let c6 = r#"{"type":"semidirect_product","normal":{"type":"cyclic","n":3},"acting":{"type":"cyclic","n":2},"generators":[{"element":1,"map":{"kind":"power","exponent":1}}]}"#;
    let out = frobact()
        .args(["check-frobenius", c6, "--complement-order", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_config_errors_exit_three() {
    assert_eq!(
        frobact().arg("bogus").output().unwrap().status.code(),
        Some(3)
    );
    assert_eq!(
        frobact()
            .args(["verify", "no_such_kind"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(3)
    );
    let trivial = frobact()
        .args(["run", "/nonexistent/config.json"])
        .output()
        .unwrap();
    assert_eq!(trivial.status.code(), Some(3));
}

#[test]
fn run_config_resolves_relative_paths_and_writes_out() {
    let dir = std::env::temp_dir().join(format!("frobact-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let status = frobact()
        .args([
            "run",
            configs().join("custom.json").to_str().unwrap(),
            "--format",
            "json",
            "--out",
        ])
        .arg(&out_path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let first = std::fs::read(&out_path).unwrap();
    frobact()
        .args([
            "run",
            configs().join("custom.json").to_str().unwrap(),
            "--format",
            "json",
            "--out",
        ])
        .arg(&out_path)
        .status()
        .unwrap();
    assert_eq!(first, std::fs::read(&out_path).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn assoc_lie_emits_round_trippable_constants() {
    let dir = std::env::temp_dir().join(format!("frobact-lie-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let lie = dir.join("ut3_5.lie");
    let out = frobact()
        .args([
            "assoc-lie",
            r#"{"type":"extraspecial_exponent_q","q":5}"#,
            "--emit",
        ])
        .arg(&lie)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = frobact().args(["validate"]).arg(&lie).output().unwrap();
    assert_eq!(v.status.code(), Some(0));
    assert!(String::from_utf8(v.stdout).unwrap().contains("dim=3"));
    std::fs::remove_dir_all(&dir).unwrap();
}
