//! End-to-end checks of the `shirshov` binary: command surface, file
//! formats, exit codes and output determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shirshov"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("shirshov-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn fixture_path() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/affine_a3_basis.txt"))
}

#[test]
fn complete_preset_writes_closed_basis_and_log() {
    let dir = tmp_dir("complete");
    let out_path = dir.join("a3.basis");
    let out = run(&[
        "complete",
        "--preset",
        "a:3",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("status: closed"));
    let basis = std::fs::read_to_string(&out_path).unwrap();
    assert!(basis.starts_with("basis-format 1"));
    assert_eq!(basis.matches("rule:").count(), 7);
    let log = std::fs::read_to_string(dir.join("a3.basis.log")).unwrap();
    assert!(log.contains("[initial]"));
    assert!(log.contains("witness:"));
}

#[test]
fn complete_is_byte_deterministic() {
    let dir = tmp_dir("determinism");
    let first = dir.join("one.basis");
    let second = dir.join("two.basis");
    for path in [&first, &second] {
        let out = run(&[
            "complete",
            "--preset",
            "affine-a:3",
            "--max-len",
            "12",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap()
    );
}

#[test]
fn complete_affine_a3_matches_the_fixture() {
    let dir = tmp_dir("fixture");
    let out_path = dir.join("affine.basis");
    let out = run(&[
        "complete",
        "--preset",
        "affine-a:3",
        "--max-len",
        "12",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    // same rule lines, ignoring the fixture's comment header
    let produced = std::fs::read_to_string(&out_path).unwrap();
    let reference = std::fs::read_to_string(fixture_path()).unwrap();
    let rules = |text: &str| -> Vec<String> {
        text.lines()
            .filter(|l| l.starts_with("rule:"))
            .map(|l| l.trim_end().to_string())
            .collect()
    };
    assert_eq!(rules(&produced), rules(&reference));
}

#[test]
fn reduce_reports_normal_forms() {
    let out = run(&[
        "reduce",
        "--file",
        fixture_path().to_str().unwrap(),
        "s3",
        "s0",
        "s1",
        "s0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "s1 s3 s0 s1");
    let empty = run(&["reduce", "--file", fixture_path().to_str().unwrap(), "1"]);
    assert_eq!(stdout(&empty).trim(), "1");
    let unknown = run(&["reduce", "--file", fixture_path().to_str().unwrap(), "x9"]);
    assert_eq!(unknown.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("unknown generator"));
}

#[test]
fn verify_distinguishes_closed_from_open() {
    let closed = run(&["verify", "--file", fixture_path().to_str().unwrap()]);
    assert_eq!(closed.status.code(), Some(0));
    assert_eq!(stdout(&closed).trim(), "closed: 0 nontrivial compositions");
    // the bare preset presentation is not closed
    let open = run(&["verify", "--preset", "affine-a:3"]);
    assert_eq!(open.status.code(), Some(4));
    assert!(stdout(&open).contains("not closed"));
    assert!(stdout(&open).contains("s3 s0 s1 s0"));
}

#[test]
fn round_trip_complete_save_load_verify() {
    let dir = tmp_dir("roundtrip");
    let path = dir.join("b3.basis");
    let out = run(&["complete", "--preset", "b:3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let verify = run(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn enumerate_counts_and_streams() {
    let counts = run(&["enumerate", "--preset", "a:2", "--max-len", "3", "--counts"]);
    assert_eq!(counts.status.code(), Some(0));
    assert_eq!(stdout(&counts), "0\t1\n1\t2\n2\t2\n3\t1\ntotal\t6\n");
    let stream = run(&[
        "enumerate",
        "--file",
        fixture_path().to_str().unwrap(),
        "--max-len",
        "2",
        "--prefix",
        "s0",
    ]);
    assert_eq!(stream.status.code(), Some(0));
    let text = stdout(&stream);
    let words: Vec<&str> = text.lines().collect();
    assert!(words.contains(&"s0"));
    assert!(words.iter().all(|w| w.starts_with("s0")));
}

#[test]
fn hypothesis_audit_lists_the_published_obstructions() {
    let out = run(&["hypothesis", "--preset", "affine-a:3", "--mode", "strict"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("s3 s0 s2 s1 s3 s0 s1 -> s2 s3 s0 s2 s1 s3 s0: no-match"));
    assert!(text.contains("s3 s0 s2 s1 s0 s3 s0 s1 -> s2 s3 s0 s2 s1 s0 s3 s0: no-match"));
    assert!(text.contains("rules fail (strict mode)"));
    let relaxed = run(&["hypothesis", "--preset", "affine-a:3", "--mode", "relaxed"]);
    assert!(stdout(&relaxed).contains("rules fail (relaxed mode)"));
}

#[test]
fn hypothesis_accepts_a_basis_file_with_matrix() {
    let dir = tmp_dir("hyp-matrix");
    let grid = dir.join("matrix.txt");
    std::fs::write(&grid, "1 3 2 2\n3 1 3 2\n2 3 1 3\n2 2 3 1\n").unwrap();
    let out = run(&[
        "hypothesis",
        "--file",
        fixture_path().to_str().unwrap(),
        "--matrix",
        grid.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("summary: 27 rules"));
    // mismatched alphabet is an operational diagnostic
    let small = dir.join("small.txt");
    std::fs::write(&small, "1 3\n3 1\n").unwrap();
    let bad = run(&[
        "hypothesis",
        "--file",
        fixture_path().to_str().unwrap(),
        "--matrix",
        small.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn oracle_compare_reports_census_equality() {
    let out = run(&["oracle-compare", "--preset", "a:3", "--max-len", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("6\t1\tok"));
    assert!(text.contains("total\t24\tok"));
    assert!(text.contains("word-problem agreement"));
}

#[test]
fn audit_closed_form_exit_codes() {
    let ok = run(&["audit-closed-form", "--preset", "a:3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("families match completion output exactly"));
    let mismatch = run(&["audit-closed-form", "--preset", "d:4"]);
    assert_eq!(mismatch.status.code(), Some(5));
    assert!(stdout(&mismatch).contains("completion-only"));
}

#[test]
fn completion_from_presentation_file() {
    let dir = tmp_dir("presfile");
    let pres = dir.join("one.pres");
    std::fs::write(&pres, "generators: s0\nranking: s0\ns0 s0 = 1\n").unwrap();
    let out = run(&["complete", "--file", pres.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rule: 0 0 ->"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("status: closed (1 rules"));
    // parse diagnostics carry line numbers
    let broken = dir.join("broken.pres");
    std::fs::write(&broken, "generators: s0\nranking: s0\ns0 s0\n").unwrap();
    let err = run(&["complete", "--file", broken.to_str().unwrap()]);
    assert_eq!(err.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&err.stderr).contains("line 3"));
}

#[test]
fn capped_completion_uses_a_distinct_exit_code() {
    // a cap of 2 forbids every braid residue, so the run is length-capped
    let out = run(&["complete", "--preset", "a:3", "--max-len", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("length-capped"));
}
