//! CLI behavior: exit codes, the form-law check path, output determinism,
//! and freshness of the bundled corpus files against the in-memory corpus.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use algdouble::corpus::{aib_corpus, associative_corpus, ddb_corpus, dendriform_corpus};
use algdouble::fileio::{algebra_to_json, bialgebra_to_json};

fn corpus_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus"].iter().collect()
}

fn corpus_path(name: &str) -> String {
    corpus_dir().join(format!("{name}.json")).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_algdouble")).args(args).output().expect("run cli")
}

fn temp_file(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(name);
    fs::write(&path, body).expect("write temp file");
    path.to_string_lossy().into_owned()
}

#[test]
fn passing_check_exits_zero() {
    let out = run(&["check", &corpus_path("l2")]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"status\": \"pass\""));
    assert!(text.contains("tensor-slot-v1"));
}

#[test]
fn failing_check_exits_one() {
    // e₀e₀ = e₁, e₁e₀ = e₀ is not associative
    let path = temp_file(
        "algdouble-bad.json",
        r#"{"kind":"associative","dim":2,"products":[[0,0,1,"1"],[1,0,0,"1"]]}"#,
    );
    let out = run(&["check", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"status\": \"fail\""));
}

#[test]
fn malformed_file_exits_two() {
    let path = temp_file(
        "algdouble-malformed.json",
        r#"{"kind":"associative","dim":2,"products":[[0,0,1,"1/0"]]}"#,
    );
    assert_eq!(run(&["check", &path]).status.code(), Some(2));
    let path = temp_file("algdouble-notjson.json", "not json");
    assert_eq!(run(&["check", &path]).status.code(), Some(2));
}

#[test]
fn nonzero_residual_exits_one() {
    let path = temp_file("algdouble-unit-tensor.json", r#"{"dim":1,"entries":[[0,0,"1"]]}"#);
    let out = run(&["residual", "--eq", "aybe", &corpus_path("unit-1"), &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("residual_entries"));
}

#[test]
fn form_law_check_passes_on_the_cyclic_cocycle() {
    let out = run(&[
        "check",
        &corpus_path("l2"),
        "--law",
        "cyclic",
        "--form",
        &corpus_path("tensor-l2-solution"),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn law_without_form_exits_two() {
    assert_eq!(run(&["check", &corpus_path("l2"), "--law", "cyclic"]).status.code(), Some(2));
}

#[test]
fn double_and_canonical_are_deterministic() {
    for args in [
        vec!["double", "--type", "dd", &corpus_path("ddb-l2-coboundary")],
        vec!["canonical", "--eq", "aybe", &corpus_path("l2")],
        vec!["derive", "--functor", "lie", &corpus_path("truncated-poly-3")],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn bundled_corpus_files_match_the_in_memory_corpus() {
    for (name, a) in associative_corpus().iter().chain(dendriform_corpus().iter()) {
        let expected = algebra_to_json(a).unwrap() + "\n";
        let on_disk = fs::read_to_string(corpus_dir().join(format!("{name}.json")))
            .unwrap_or_else(|_| panic!("missing corpus file {name}"));
        assert_eq!(on_disk, expected, "{name}");
    }
    for (name, b) in aib_corpus().iter().chain(ddb_corpus().iter()) {
        let expected = bialgebra_to_json(b).unwrap() + "\n";
        let on_disk = fs::read_to_string(corpus_dir().join(format!("{name}.json")))
            .unwrap_or_else(|_| panic!("missing corpus file {name}"));
        assert_eq!(on_disk, expected, "{name}");
    }
}
