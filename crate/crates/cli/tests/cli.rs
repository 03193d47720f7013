use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/example.db")
}

fn ratinf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratinf")).args(args).output().unwrap()
}

fn on_base(args: &[&str]) -> Output {
    let base = fixture();
    let mut all = vec![args[0], "--base", base.to_str().unwrap()];
    all.extend(&args[1..]);
    ratinf(&all)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn strict_query() {
    let out = on_base(&["query", "--mode", "strict", "a |~ b"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "yes\n");
    let out = on_base(&["query", "--mode", "strict", "a |~ c"]);
    assert_eq!(stdout(&out), "no\n");
}

#[test]
fn liberal_query() {
    let out = on_base(&["query", "--mode", "liberal", "a |~ c"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "yes\n");
    let out = on_base(&["query", "--mode", "liberal", "a |~ !b"]);
    assert_eq!(stdout(&out), "no\n");
}

#[test]
fn literal_subset_order_loses_b() {
    let out = on_base(&["query", "--mode", "liberal", "--subset-order", "literal", "a |~ b"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "no\n");
}

#[test]
fn extensions() {
    assert_eq!(stdout(&on_base(&["extension", "--mode", "strict", "a"])), "a & b\n");
    assert_eq!(
        stdout(&on_base(&["extension", "--mode", "liberal", "a"])),
        "a & b & c\n"
    );
    assert_eq!(
        stdout(&on_base(&["extension", "--mode", "strict", "false"])),
        "INCONSISTENT\n"
    );
}

#[test]
fn ordering_dump_starts_with_top() {
    let out = on_base(&["ordering", "--mode", "strict"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("level 3: true"));
    assert!(text.lines().last().unwrap().starts_with("level 0: false"));
}

#[test]
fn rank() {
    assert_eq!(
        stdout(&on_base(&["rank", "--mode", "strict", "a |~ b"])),
        "rank=1 range=[1,1]\n"
    );
}

#[test]
fn check_reports_all_trials() {
    let out = ratinf(&["check", "--atoms", "2", "--trials", "500", "--seed", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "OK 500/500\n");
}

#[test]
fn roundtrip_at_three_atoms() {
    let out = ratinf(&["roundtrip", "--atoms", "3", "--trials", "20"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "OK 20/20\n");
}

#[test]
fn parse_error_exits_2() {
    let out = on_base(&["query", "--mode", "strict", "a |~ (b"]);
    assert_eq!(out.status.code(), Some(2));
    let out = on_base(&["query", "--mode", "strict", "a|~b"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn too_many_atoms_exits_3() {
    let out = ratinf(&["check", "--atoms", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit is 3"));
}

#[test]
fn missing_base_exits_3() {
    let out = ratinf(&["query", "--base", "/nonexistent/base.db", "--mode", "strict", "a |~ b"]);
    assert_eq!(out.status.code(), Some(3));
}
