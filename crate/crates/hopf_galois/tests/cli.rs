//! Golden tests of the command-line interface: deterministic reports,
//! fixture emission, exit codes.

use std::io::Write;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopf-galois"))
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("hopf_galois_cli_tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

const EX1_P2: &str = r#"
p = 2
dim = 2
bracket = [{ i = 0, j = 1, coeffs = [0, 1] }]
pmap = [[1, 0], [0, 0]]
xi = [0, 1]
"#;

#[test]
fn fixture_emission_round_trips() {
    let out = bin().args(["fixture", "example1", "--p", "3"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p = 3"));
    let path = write_temp("fixture_rt.toml", &text);
    let out = bin().arg("check").arg(&path).output().unwrap();
    assert!(out.status.success());
}

#[test]
fn fixture_constraint_rejected() {
    let out = bin()
        .args(["fixture", "example2", "--p", "3", "--a", "1", "--b", "2"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn build_report_is_deterministic_and_exits_zero() {
    let path = write_temp("ex1p2.toml", EX1_P2);
    let run = || {
        let out = bin()
            .arg("build")
            .arg(&path)
            .args(["--format", "json"])
            .output()
            .unwrap();
        (out.status.code(), String::from_utf8(out.stdout).unwrap())
    };
    let (code1, rep1) = run();
    let (code2, rep2) = run();
    assert_eq!(code1, Some(0));
    assert_eq!(code2, Some(0));
    assert_eq!(rep1, rep2, "reports must be byte-for-byte deterministic");
    let v: serde_json::Value = serde_json::from_str(&rep1).unwrap();
    assert_eq!(v["galois"], true);
    assert_eq!(v["transform"]["antipode_order"], 4);
    assert_eq!(v["transform"]["rtilde_rank"], 4);
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn not_galois_exits_one_with_diagnosis() {
    let path = write_temp("ex1p2_zero.toml", &EX1_P2.replace("xi = [0, 1]", "xi = [0, 0]"));
    let out = bin()
        .arg("build")
        .arg(&path)
        .args(["--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["galois"], false);
    assert_eq!(v["beta_nondegenerate"], false);
    assert!(v["transform"].is_null());
}

#[test]
fn xi_override_on_command_line() {
    let path = write_temp("ex1p2_noxi.toml", &EX1_P2.replace("xi = [0, 1]\n", ""));
    // without a form the build is rejected as an input error
    let out = bin().arg("build").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin()
        .arg("build")
        .arg(&path)
        .args(["--xi", "0,1", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_file_is_input_error() {
    let path = write_temp("broken.toml", "p = 4\ndim = 1\npmap = [[0]]\n");
    let out = bin().arg("check").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let path = write_temp("garbage.toml", "this is not content");
    let out = bin().arg("check").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn scan_json_matches_expected_counts() {
    let out = bin()
        .args(["fixture", "example1", "--p", "3"])
        .output()
        .unwrap();
    let path = write_temp("scan_ex1p3.toml", &String::from_utf8(out.stdout).unwrap());
    let out = bin()
        .arg("scan")
        .arg(&path)
        .args(["--exhaustive", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout1 = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout1).unwrap();
    assert_eq!(v["total_forms"], 9);
    assert_eq!(v["central_simple_count"], 6);
    assert_eq!(v["galois_iff_central_simple"], true);
    assert_eq!(v["beta_agreement_percent"], 100.0);
    // multi-worker scan gives the identical report
    let out2 = bin()
        .arg("scan")
        .arg(&path)
        .args(["--exhaustive", "--jobs", "3", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(stdout1.as_bytes(), &out2.stdout[..]);
}

#[test]
fn json_input_accepted() {
    let json = r#"{ "p": 2, "dim": 2,
        "bracket": [{ "i": 0, "j": 1, "coeffs": [0, 1] }],
        "pmap": [[1, 0], [0, 0]], "xi": [0, 1] }"#;
    let path = write_temp("ex1p2.json", json);
    let out = bin().arg("build").arg(&path).args(["--verify", "fast"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
