use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use seqspec_core::json::spectrum_to_string;
use seqspec_core::spectra::sphere_spectrum;

fn seqspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqspec"))
        .args(args)
        .env_remove("SEQSPEC_MAX_DIM")
        .env_remove("SEQSPEC_MAX_LEVEL")
        .env_remove("SEQSPEC_BUDGET")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn corpus(dir: &Path, seed: u64, size: usize) -> Vec<PathBuf> {
    let out = seqspec(&["generate-corpus", "--seed", &seed.to_string(), "--size", &size.to_string(), "--out", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let mut files: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

#[test]
fn homology_of_the_sphere_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sphere.json");
    fs::write(&path, spectrum_to_string(&sphere_spectrum())).unwrap();
    let out = seqspec(&["homology", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["homology"], serde_json::json!([{ "degree": 0, "rank": 1, "torsion": [] }]));
}

#[test]
fn moore_homology_and_kunneth() {
    let dir = tempfile::tempdir().unwrap();
    let files = corpus(dir.path(), 1, 1);
    let moore = files[0].to_str().unwrap();
    let r = report(&seqspec(&["homology", "--input", moore]));
    assert_eq!(r["homology"][0]["torsion"], serde_json::json!([2]));
    let out = seqspec(&["kunneth", "--input", moore, moore]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["equal"], Value::Bool(true));
    let degrees: Vec<_> = r["homology_left"].as_array().unwrap().iter().map(|g| g["degree"].as_i64().unwrap()).collect();
    assert_eq!(degrees, vec![0, 1]);
}

#[test]
fn verify_coeq_over_a_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let files = corpus(dir.path(), 5, 10);
    let mut args = vec!["verify-coeq", "--input"];
    args.extend(files.iter().map(|p| p.to_str().unwrap()));
    let out = seqspec(&args);
    assert_eq!(out.status.code(), Some(0));
    let inputs = report(&out)["inputs"].as_array().unwrap().clone();
    assert_eq!(inputs.len(), 10);
    assert!(inputs.iter().all(|e| e["iso"] == Value::Bool(true)));
}

#[test]
fn malformed_partition_reports_index() {
    let dir = tempfile::tempdir().unwrap();
    let files = corpus(dir.path(), 1, 2);
    let (a, b) = (files[0].to_str().unwrap(), files[1].to_str().unwrap());
    let out = seqspec(&["smash", "--input", a, b, "--q", "0,0,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["index"], 2);
    let out = seqspec(&["smash", "--input", a, b, "--q", "interleave(0,0)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_documents_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"truncation": 0, "levels": [], "structure_maps": []}"#).unwrap();
    let out = seqspec(&["validate", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(seqspec(&["homology", "--input", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let files = corpus(dir.path(), 1, 1);
    let out = seqspec(&["verify-adjunction", "--input", files[0].to_str().unwrap(), "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = seqspec(&["verify-adjunction", "--input", files[0].to_str().unwrap(), "--budget", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn level_cap_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let files = corpus(dir.path(), 1, 1);
    let out = Command::new(env!("CARGO_BIN_EXE_seqspec"))
        .args(["homology", "--input", files[0].to_str().unwrap()])
        .env("SEQSPEC_MAX_LEVEL", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_seqspec"))
        .args(["homology", "--input", files[0].to_str().unwrap()])
        .env("SEQSPEC_MAX_LEVEL", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generated_corpus_is_reproducible_and_valid() {
    let (d1, d2) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let a = corpus(d1.path(), 11, 25);
    let b = corpus(d2.path(), 11, 25);
    assert_eq!(a.len(), 25);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.file_name(), y.file_name());
        assert_eq!(fs::read(x).unwrap(), fs::read(y).unwrap());
    }
    let mut args = vec!["validate", "--input"];
    args.extend(a.iter().map(|p| p.to_str().unwrap()));
    assert_eq!(seqspec(&args).status.code(), Some(0));
}

#[test]
fn corpus_run_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    corpus(dir.path(), 3, 4);
    let d = dir.path().to_str().unwrap();
    let first = seqspec(&["corpus-run", "--input", d]);
    let second = seqspec(&["corpus-run", "--input", d]);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    assert_eq!(first.stdout, second.stdout);
    let r = report(&first);
    assert_eq!(r["spectra"].as_object().unwrap().len(), 4);
    assert_eq!(r["pairs"].as_object().unwrap().len(), 16);
}

#[test]
fn report_file_and_frame() {
    let dir = tempfile::tempdir().unwrap();
    let files = corpus(dir.path().join("c").as_path(), 1, 2);
    let out_path = dir.path().join("frame.json");
    let out = seqspec(&["verify-frame", "--degree", "2", "--input", files[0].to_str().unwrap(), "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(r["holds"], Value::Bool(true));
    assert_eq!(r["inputs"][0]["iso"], Value::Bool(true));
}
