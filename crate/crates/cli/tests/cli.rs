use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(format!("{name}.hopf"))
}

fn qthopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qthopf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_bundled_file_passes() {
    let o = qthopf(&["verify", fixture("sweedler_t1").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("[PASS] QT4"));
}

#[test]
fn flipped_coproduct_sign_fails_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("sweedler_t0")).unwrap();
    // ∆x = x⊗1 + g⊗x becomes x⊗1 − g⊗x.
    let flipped = text.replace("comul 2 1 2 1\n", "comul 2 1 2 -1\n");
    assert_ne!(flipped, text);
    let path = dir.path().join("bad.hopf");
    std::fs::write(&path, flipped).unwrap();
    let o = qthopf(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let first = out.lines().find(|l| l.starts_with("[FAIL]")).unwrap();
    assert!(first.contains("coassociativity") || first.contains("bialgebra"), "{first}");
    assert!(first.contains("witness: input"));
}

#[test]
fn parse_errors_exit_2_with_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.hopf");
    std::fs::write(&path, "field rational\ndim 2\nmul 0 0 0 x\n").unwrap();
    let o = qthopf(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn transmute_writes_a_reloadable_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.hopf");
    let o = qthopf(&["transmute", fixture("sweedler_t0").to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let written = std::fs::read_to_string(&out).unwrap();
    assert!(written.contains("braided_comul"));
    let again = qthopf(&["transmute", out.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert!(stdout(&again).contains("[PASS] stored braided coproduct matches"));
}

#[test]
fn machine_format_is_versioned_json() {
    let o = qthopf(&["check-galois", fixture("c2_bicharacter").to_str().unwrap(), "rh", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "check-galois");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn k_over_a_four_dimensional_braided_group_is_not_galois() {
    let o = qthopf(&["check-galois", fixture("sweedler_t1").to_str().unwrap(), "ground_trivial"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] can+ bijective"));
}

#[test]
fn unknown_object_is_an_error() {
    let o = qthopf(&["check-galois", fixture("trivial").to_str().unwrap(), "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn brauer_always_includes_the_regular_z() {
    let o = qthopf(&["brauer", fixture("sweedler_t1").to_str().unwrap(), "twisted_m2", "k", "lambda1:v"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    for z in ["z = k", "z = lambda1:v", "z = rh"] {
        assert!(out.contains(&format!("[PASS] {z} ")), "{z}");
    }
    let kk = qthopf(&["brauer", fixture("sweedler_t1").to_str().unwrap(), "k_times_k"]);
    assert_eq!(kk.status.code(), Some(1));
    assert!(stdout(&kk).contains("[SKIP] pi(A)"));
}

#[test]
fn rational_file_reads_over_gf7() {
    let o = qthopf(&["verify", fixture("sweedler_t0").to_str().unwrap(), "--field", "gf 7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verify over gf 7"));
    let o = qthopf(&["verify", fixture("sweedler_t0").to_str().unwrap(), "--field", "gf 2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn suite_reports_missing_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(fixture("trivial"), dir.path().join("trivial.hopf")).unwrap();
    let o = qthopf(&["suite", "--fixtures", dir.path().to_str().unwrap(), "--field", "gf 7"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] 1. Hopf and R-matrix soundness"));
    assert!(out.contains("fixture c2_trivial_r.hopf present"));
}
