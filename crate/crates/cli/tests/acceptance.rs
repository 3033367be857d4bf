//! The acceptance gate: twelve exact criteria, one test (and one pass/fail
//! line) each.  Criteria 1–11 are the library suite; criterion 12 is the CLI
//! contract — bit-exact corpus round-trips and deterministic certify output.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use algdouble::fileio::{
    algebra_to_json, any_from_json, bialgebra_to_json, tensor_to_json, AnyFile,
};
use algdouble::suite::run_criterion;

const SEED: u64 = 7;

fn check(k: usize) {
    let cert = run_criterion(k, SEED).expect("criterion runs");
    assert!(
        cert.passed(),
        "criterion {k} failed with {} failure(s); first: {:?}",
        cert.failure_count,
        cert.first_witness
    );
}

#[test]
fn criterion_01_canonical_associative() {
    check(1);
}

#[test]
fn criterion_02_canonical_dendriform() {
    check(2);
}

#[test]
fn criterion_03_matched_pair_equivalence() {
    check(3);
}

#[test]
fn criterion_04_o_operator_lift_equivalence() {
    check(4);
}

#[test]
fn criterion_05_solution_form_duality() {
    check(5);
}

#[test]
fn criterion_06_compatibility_chains() {
    check(6);
}

#[test]
fn criterion_07_double_builders() {
    check(7);
}

#[test]
fn criterion_08_functors() {
    check(8);
}

#[test]
fn criterion_09_canonical_prelie() {
    check(9);
}

#[test]
fn criterion_10_iso_witnesses() {
    check(10);
}

#[test]
fn criterion_11_bridge() {
    check(11);
}

#[test]
fn criterion_12_cli_round_trip_and_determinism() {
    // bit-exact round trips over every bundled corpus file
    let corpus: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus"].iter().collect();
    let mut files: Vec<_> = fs::read_dir(&corpus)
        .expect("bundled corpus directory")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    assert!(files.len() >= 25, "bundled corpus too small: {}", files.len());
    for path in &files {
        let original = fs::read_to_string(path).expect("read corpus file");
        let reserialized = match any_from_json(&original).expect("parse corpus file") {
            AnyFile::Algebra(a) => algebra_to_json(&a).expect("serialize"),
            AnyFile::Tensor(t) => tensor_to_json(&t).expect("serialize"),
            AnyFile::Bialgebra(b) => bialgebra_to_json(&b).expect("serialize"),
        } + "\n";
        assert_eq!(original, reserialized, "round trip differs for {}", path.display());
    }
    // deterministic certify output, exit code 0
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_algdouble"))
            .args(["certify", "--suite", "paper-core", "--seed", "7"])
            .output()
            .expect("run certify")
    };
    let first = run();
    let second = run();
    assert!(first.status.success(), "certify failed: {}", String::from_utf8_lossy(&first.stderr));
    assert_eq!(first.stdout, second.stdout, "certify output is not deterministic");
    assert!(!first.stdout.is_empty());
}
