//! The `hfcalc` binary: output, exit codes and the corpus runner.

mod common;

use std::process::{Command, Output};

use common::corpus_dir;

fn hfcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfcalc")).args(args).output().unwrap()
}

fn corpus_file(name: &str) -> String {
    corpus_dir().join(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hf_of_s3() {
    let o = hfcalc(&["hf", &corpus_file("s3.hd")]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("rank 1\n"));
}

#[test]
fn hf_tsv() {
    let o = hfcalc(&["hf", "--tsv", &corpus_file("s1xs2.hd")]);
    assert_eq!(stdout(&o), "class\tgrading\trank\n0\t0\t1\n0\t1\t1\n");
}

#[test]
fn map_of_toy() {
    let o = hfcalc(&["map", &corpus_file("toy.hd")]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("classes 2\n"));
    assert_eq!(out.matches(": rank 1 (raw 1)").count(), 2);
    let raw = stdout(&hfcalc(&["map", "--raw", "--class", "1", &corpus_file("toy.hd")]));
    assert!(raw.contains("up to automorphisms"));
    assert!(raw.contains("# class 1 (1 x 1)"));
}

#[test]
fn triangles_of_toy() {
    let out = stdout(&hfcalc(&["triangles", "--tsv", &corpus_file("toy.hd")]));
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.contains("\t1/4\t0\t")));
}

#[test]
fn rank_needs_hypotheses() {
    let o = hfcalc(&["rank", &corpus_file("toy.hd"), "--l", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("reduction requires surjectivity of j₁ and j₂"));

    let o = hfcalc(&["rank", &corpus_file("toy-2pt.hd"), "--l", "2", "--one-handles", "1", "--assert-j1", "--assert-j2", "--tsv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("class\tgrading\trank\thypotheses\n"));
    assert_eq!(out.lines().skip(1).filter(|l| l.split('\t').nth(2) == Some("1")).count(), 2);
}

#[test]
fn rank_checks_basepoint_count() {
    let o = hfcalc(&["rank", &corpus_file("toy.hd"), "--l", "2", "--assert-j1", "--assert-j2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_exit_codes() {
    assert!(hfcalc(&["validate", &corpus_file("s3.hd")]).status.success());
    assert_eq!(hfcalc(&["validate", &corpus_file("broken.hd")]).status.code(), Some(2));
    assert_eq!(hfcalc(&["validate", "no/such/file.hd"]).status.code(), Some(2));
}

#[test]
fn unknown_flag_is_rejected() {
    let o = hfcalc(&["hf", "--frobnicate", &corpus_file("s3.hd")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
}

#[test]
fn apply_then_hf() {
    let dir = std::env::temp_dir().join(format!("hfcalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("moved.hd");
    let o = hfcalc(&["apply", &corpus_file("l3.hd"), "stabilize(1, 1); finger(0, [0, 1])", "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let hf = stdout(&hfcalc(&["hf", out.to_str().unwrap()]));
    assert!(hf.starts_with("rank 3\n"));
    let info = stdout(&hfcalc(&["info", out.to_str().unwrap()]));
    assert!(info.contains("genus 2\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn corpus_runner() {
    let o = hfcalc(&["corpus", &corpus_file("manifest.toml")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("passed, 0 failed\n"));
}

#[test]
fn corpus_wrong_rank_and_empty() {
    let dir = std::env::temp_dir().join(format!("hfcalc-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::copy(corpus_dir().join("l3.hd"), dir.join("l3.hd")).unwrap();
    let wrong = dir.join("wrong.toml");
    std::fs::write(&wrong, "[[entry]]\nname = \"l3-wrong\"\nfile = \"l3.hd\"\nranks = [3]\n").unwrap();
    let o = hfcalc(&["corpus", wrong.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("== l3-wrong\n"));
    assert!(stdout(&o).contains("result FAIL: ranks"));

    let empty = dir.join("empty.toml");
    std::fs::write(&empty, "").unwrap();
    let o = hfcalc(&["corpus", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("warning: empty manifest\n"));

    let missing = dir.join("missing.toml");
    std::fs::write(&missing, "[[entry]]\nname = \"gone\"\nfile = \"gone.hd\"\n").unwrap();
    assert_eq!(hfcalc(&["corpus", missing.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
