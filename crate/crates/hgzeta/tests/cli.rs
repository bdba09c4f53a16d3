mod common;

use hgzeta::config::{LambdaChoice, Oracle, RunConfig};
use hgzeta::report::{has_unit_reciprocal_root, run, Subcommand};
use rug::Integer;
use std::path::PathBuf;
use std::process::Command;

const DWORK7: &str = r#"{
    "p": 7, "q": 7, "n": 2,
    "A": [3,0,0, 0,3,0, 0,0,3],
    "c": [1,1,1],
    "lambda": 2,
    "r_max": 2
}"#;

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hgzeta-test-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.json");
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn config_parses_with_defaults() {
    let cfg = RunConfig::from_json(DWORK7).unwrap();
    assert_eq!(cfg.lambda, LambdaChoice::Int(2));
    assert_eq!(cfg.precision_bits, 256);
    assert_eq!(cfg.padic_precision, 6);
    assert_eq!(
        cfg.oracles,
        vec![Oracle::Brute, Oracle::Delsarte, Oracle::Hgf]
    );
    assert_eq!(cfg.residue_degree().unwrap(), 1);
    let spec = cfg.family().unwrap();
    assert_eq!(spec.alpha.alpha_total, 3);
    assert_eq!(cfg.lambdas(&spec), vec![spec.lambda_from_int(2)]);
}

#[test]
fn config_rejections() {
    // Missing field.
    assert!(RunConfig::from_json(r#"{"p": 7}"#).is_err());
    // Unknown field.
    let with_extra = DWORK7.replacen("\"p\": 7,", "\"p\": 7, \"bogus\": 1,", 1);
    assert!(RunConfig::from_json(&with_extra).is_err());
    // q not a power of p.
    let bad_q = DWORK7.replacen("\"q\": 7", "\"q\": 10", 1);
    assert!(RunConfig::from_json(&bad_q).is_err());
    // Wrong matrix size.
    let bad_a = DWORK7.replacen("[3,0,0, 0,3,0, 0,0,3]", "[3,0,0,3]", 1);
    assert!(RunConfig::from_json(&bad_a).is_err());
    // λ sweeps must use the literal "all".
    let bad_lam = DWORK7.replacen("\"lambda\": 2", "\"lambda\": \"some\"", 1);
    assert!(RunConfig::from_json(&bad_lam).is_err());
    // c divisible by p.
    let bad_c = DWORK7.replacen("\"c\": [1,1,1]", "\"c\": [7,1,1]", 1);
    assert!(RunConfig::from_json(&bad_c).is_err());
}

#[test]
fn sweep_covers_all_units() {
    let swept = DWORK7.replacen("\"lambda\": 2", "\"lambda\": \"all\"", 1);
    let cfg = RunConfig::from_json(&swept).unwrap();
    let spec = cfg.family().unwrap();
    assert_eq!(cfg.lambdas(&spec).len(), 6);
}

#[test]
fn subcommand_parsing() {
    assert_eq!("analyze".parse::<Subcommand>().unwrap(), Subcommand::Analyze);
    assert_eq!("verify".parse::<Subcommand>().unwrap(), Subcommand::Verify);
    assert!("bogus".parse::<Subcommand>().is_err());
}

#[test]
fn unit_reciprocal_root_detection() {
    let p = 7u64;
    let c = |v: &[i64]| v.iter().map(|&x| Integer::from(x)).collect::<Vec<_>>();
    assert!(has_unit_reciprocal_root(&c(&[1, 1, 7]), p)); // ordinary
    assert!(!has_unit_reciprocal_root(&c(&[1, 0, 7]), p)); // supersingular
    assert!(!has_unit_reciprocal_root(&c(&[1, -7, 7]), p));
    assert!(!has_unit_reciprocal_root(&c(&[1]), p));
}

#[test]
fn run_verify_end_to_end() {
    let swept = DWORK7.replacen("\"lambda\": 2", "\"lambda\": \"all\"", 1);
    let cfg = RunConfig::from_json(&swept).unwrap();
    let report = run(&cfg, Subcommand::Verify, 2).unwrap();
    assert_eq!(report.lambdas.len(), 6);
    let mut ordinary = 0;
    for lr in &report.lambdas {
        if !lr.admissible {
            assert!(lr.counts.is_empty());
            continue;
        }
        assert_eq!(lr.counts.len(), 2);
        for row in &lr.counts {
            assert_eq!(row.brute, row.delsarte);
            assert_eq!(row.brute, row.predicted);
            assert!(row.star_residual.unwrap() < 1e-30);
        }
        let coeffs = lr.p_coefficients.as_ref().unwrap();
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[0], "1");
        assert_eq!(lr.weights.as_ref().unwrap(), &vec![(1, 2)]);
        if lr.unit_root.as_ref().unwrap().status == "ordinary" {
            ordinary += 1;
        }
    }
    assert_eq!(ordinary, 3);
    // Structure block is always included.
    let st = report.structure.as_ref().unwrap();
    assert_eq!(st.alpha, vec![1, 1, 1]);
    assert!(st.asm1_pass && st.asm2_pass);
    // Text and JSON renderings carry the same count data.
    let text = report.to_text();
    let json = report.to_json();
    for lr in report.lambdas.iter().filter(|l| l.admissible) {
        for row in &lr.counts {
            let v = row.brute.as_ref().unwrap();
            assert!(text.contains(v.as_str()));
            assert!(json.contains(v.as_str()));
        }
    }
}

#[test]
fn run_analyze_rejects_bad_structure() {
    // The mixed quartic at q=13 violates the kernel divisibility condition.
    let cfg = RunConfig::from_json(
        r#"{
            "p": 13, "q": 13, "n": 3,
            "A": [4,1,0,0, 0,3,0,0, 0,0,4,0, 0,0,0,4],
            "c": [1,1,1,1],
            "lambda": 2,
            "r_max": 1
        }"#,
    )
    .unwrap();
    let err = run(&cfg, Subcommand::Analyze, 1).unwrap_err();
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn binary_exit_codes_and_reports() {
    let exe = env!("CARGO_BIN_EXE_hgzeta");

    // Success: analyze writes report.json and report.txt.
    let cfg = write_temp("ok", DWORK7);
    let out_dir = cfg.parent().unwrap();
    let out = Command::new(exe)
        .args(["analyze", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(out_dir)
        .args(["--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("report.json")).unwrap())
            .unwrap();
    assert_eq!(json["structure"]["alpha"], serde_json::json!([1, 1, 1]));
    assert!(out_dir.join("report.txt").exists());
    // stdout carries the same JSON document.
    let stdout_json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(stdout_json["structure"], json["structure"]);

    // Config error → 2.
    let bad = write_temp("bad", r#"{"p": 7}"#);
    let out = Command::new(exe)
        .args(["count", "--config"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Unknown subcommand → 2.
    let out = Command::new(exe)
        .args(["frobnicate", "--config"])
        .arg(&cfg)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Structural assumption violation → 3.
    let asm = write_temp(
        "asm",
        r#"{
            "p": 13, "q": 13, "n": 3,
            "A": [4,1,0,0, 0,3,0,0, 0,0,4,0, 0,0,0,4],
            "c": [1,1,1,1],
            "lambda": 2,
            "r_max": 1
        }"#,
    );
    let out = Command::new(exe)
        .args(["verify", "--config"])
        .arg(&asm)
        .arg("--out")
        .arg(asm.parent().unwrap())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{out:?}");

    // Budget exhaustion → 5.
    let tiny = write_temp(
        "budget",
        &DWORK7.replacen("\"r_max\": 2", "\"r_max\": 2, \"budget\": 10", 1),
    );
    let out = Command::new(exe)
        .args(["count", "--config"])
        .arg(&tiny)
        .arg("--out")
        .arg(tiny.parent().unwrap())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5), "{out:?}");

    // --r overrides r_max.
    let out = Command::new(exe)
        .args(["count", "--config"])
        .arg(&cfg)
        .args(["--r", "1", "--format", "json"])
        .arg("--out")
        .arg(out_dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["lambdas"][0]["counts"].as_array().unwrap().len(), 1);
}
