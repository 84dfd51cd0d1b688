use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

const EX31: &str = "\
# the running example
kind: ffa
states: a b c
alphabet: x y
trans: a x b 0.3
trans: b x c 0.4
trans: b y b 0.5
trans: b y c 0.1
trans: c x b 0.2
trans: c x c 0.6
";

const EX38: &str = "\
kind: ffa
states: a b c
alphabet: x y z
trans: a x a 1
trans: b x a 1
trans: b y b 1
trans: c y b 1
trans: a z c 1
trans: c z c 1
";

fn fuzzdir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuzzdir"))
        .args(args)
        .env_remove("FUZZDIR_STATE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn arg(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn decide_powerset() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex31.ffa", EX31);
    let out = fuzzdir(&["decide", "--kind", "d3", "--method", "powerset", arg(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "directable: true; shortest: xx");
}

#[test]
fn decide_merge_rejects_incomplete() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex38.ffa", EX38);
    let out = fuzzdir(&["decide", "--kind", "d3", "--method", "merge", arg(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not complete"), "{}", stderr(&out));

    let out = fuzzdir(&["decide", "--kind", "d3", arg(&f)]);
    assert_eq!(stdout(&out).trim(), "directable: false");
    assert_eq!(out.status.code(), Some(0));
    let out = fuzzdir(&["decide", "--kind", "d3", "--fail-if-not", arg(&f)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn merge_method_is_d3_only() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex31.ffa", EX31);
    let out = fuzzdir(&["decide", "--kind", "dd1", "--method", "merge", arg(&f)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_json_matches_golden() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let out = fuzzdir(&["classify", arg(&golden.join("p61cf.ffa")), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let got: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let want: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(golden.join("p61cf_classify.json")).unwrap()).unwrap();
    assert_eq!(got, want);
    assert_eq!(got["classes"]["ndd3"], true);
    assert_eq!(got["classes"]["ndd2"], false);
}

#[test]
fn classify_several_files_reports_each() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.ffa", EX31);
    let b = write(&dir, "b.ffa", EX38);
    let out = fuzzdir(&["classify", arg(&a), arg(&b), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let got: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = got.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["report"]["shortest"]["D3"], "xx");
    assert_eq!(reports[1]["report"]["flags"]["complete"], false);

    let missing = dir.path().join("missing.ffa");
    let out = fuzzdir(&["classify", arg(&a), arg(&missing)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("DD(1)"));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "bad.ffa",
        "kind: ffa\nstates: a b\nalphabet: x\ntrans: a x b 1.5\n",
    );
    let out = fuzzdir(&["decide", "--kind", "d1", arg(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));

    let f = write(
        &dir,
        "dup.ffa",
        "kind: ffa\nstates: a b\nalphabet: x\ntrans: a x b 1\ntrans: a x b 1/2\n",
    );
    let out = fuzzdir(&["shortest", "--kind", "d1", arg(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("duplicate transition"), "{}", stderr(&out));

    let out = fuzzdir(&["decide", "--kind", "d9", arg(&f)]);
    assert_eq!(out.status.code(), Some(2));
    let out = fuzzdir(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn state_cap_from_environment() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex31.ffa", EX31);
    let out = Command::new(env!("CARGO_BIN_EXE_fuzzdir"))
        .args(["decide", "--kind", "dd2", arg(&f)])
        .env("FUZZDIR_STATE_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("state cap of 1"));
    let out = Command::new(env!("CARGO_BIN_EXE_fuzzdir"))
        .args(["decide", "--kind", "dd2", arg(&f)])
        .env("FUZZDIR_STATE_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn words_and_shortest() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex31.ffa", EX31);
    let out = fuzzdir(&["words", "--kind", "d3", "--max-len", "3", arg(&f)]);
    assert_eq!(stdout(&out), "xx\nxxx\n");
    let out = fuzzdir(&["shortest", "--kind", "dd1", arg(&f)]);
    assert_eq!(stdout(&out).trim(), "none");
    assert_eq!(out.status.code(), Some(0));
    let out = fuzzdir(&["shortest", "--kind", "dd1", "--fail-if-not", arg(&f)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn recognizer_output() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex31.ffa", EX31);
    let out = fuzzdir(&["recognizer", "--kind", "d3", "--emit-dot", arg(&f)]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph recognizer {"));
    assert!(dot.contains("doublecircle"));

    let out = fuzzdir(&["recognizer", "--kind", "d3", "--minimize", arg(&f)]);
    let table = stdout(&out);
    assert!(table.starts_with("states: "), "{table}");
    assert!(table.lines().any(|l| l.starts_with("final: ")));
}

#[test]
fn check_laws_flags_violations() {
    let out = fuzzdir(&["fixtures", "N44"]);
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "n44.ffa", &stdout(&out));
    let out = fuzzdir(&["check-laws", arg(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("X* DD1 = DD1: fails"), "{}", stdout(&out));
    // N44 is not normal, so the failing left law does not count.
    let out = fuzzdir(&["check-laws", "--fail-if-not", arg(&f)]);
    assert_eq!(out.status.code(), Some(0));

    let out = fuzzdir(&["check-laws", "--format", "json", arg(&f)]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["normal"], false);
    assert_eq!(doc["laws"].as_array().unwrap().len(), 5);
}

#[test]
fn algebra_commands() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex31.ffa", EX31);
    let out = fuzzdir(&["restrict", arg(&f), "--states", "b,c"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("states: b c"));
    assert_eq!(text.lines().filter(|l| l.starts_with("trans:")).count(), 5);

    let out = fuzzdir(&["restrict", arg(&f), "--states", "a"]);
    assert_eq!(out.status.code(), Some(2));

    let out = fuzzdir(&["image", arg(&f), "--map", "a=p,b=q,c=q"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("does not induce"));
    let out = fuzzdir(&["image", arg(&f), "--map", "a=a,b=b,c=c"]);
    assert_eq!(out.status.code(), Some(0));

    let out = fuzzdir(&["product", arg(&f), arg(&f)]);
    assert!(stdout(&out).contains("states: (a,a) (a,b)"));
    let g = write(&dir, "ex38.ffa", EX38);
    let out = fuzzdir(&["product", arg(&f), arg(&g)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic_and_parseable() {
    let args = [
        "gen",
        "--states",
        "3",
        "--letters",
        "2",
        "--seed",
        "7",
        "--complete",
        "--normal",
    ];
    let first = stdout(&fuzzdir(&args));
    assert_eq!(first, stdout(&fuzzdir(&args)));

    let mut child = Command::new(env!("CARGO_BIN_EXE_fuzzdir"))
        .args(["classify", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(first.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["flags"]["complete"], true);
    assert_eq!(report["flags"]["normal"], true);

    let out = fuzzdir(&[
        "gen",
        "--states",
        "2",
        "--letters",
        "1",
        "--palette",
        "0,1/2",
        "--crisp",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fixtures_roundtrip() {
    let listing = stdout(&fuzzdir(&["fixtures"]));
    for name in [
        "EX31", "EX38", "P41a", "P41b", "N44", "P55n", "P56", "P61b", "P61cF", "P61cG", "P61gF", "P61hF", "P61hG",
        "EX65F", "EX65G",
    ] {
        assert!(listing.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
    let out = fuzzdir(&["fixtures", "EX31"]);
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ex31.ffa", &stdout(&out));
    assert_eq!(
        stdout(&fuzzdir(&["decide", "--kind", "d3", arg(&f)])).trim(),
        "directable: true; shortest: xx"
    );
    assert_eq!(fuzzdir(&["fixtures", "nope"]).status.code(), Some(2));
}
