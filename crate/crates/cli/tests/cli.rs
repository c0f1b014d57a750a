//! End-to-end checks of the binary: output values, landmark JSON, report
//! shape, determinism, and the exit-code contract (0 ok, 1 mismatch,
//! 2 parse, 3 guard, 4 params).

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn subtrees(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subtrees"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

fn write_path_file(dir: &Path, n: usize) -> std::path::PathBuf {
    let mut text = format!("{n}\n");
    for i in 1..n {
        text.push_str(&format!("{} {}\n", i - 1, i));
    }
    let path = dir.join(format!("p{n}.txt"));
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn count_total_and_anchored() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write_path_file(dir.path(), 4);
    let out = subtrees(&["count", p4.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "10");

    let star = dir.path().join("k13.txt");
    fs::write(&star, "4\n0 1\n0 2\n0 3\n").unwrap();
    let out = subtrees(&["count", star.to_str().unwrap(), "--vertex", "0"]);
    assert_eq!(stdout(&out), "8");
    let out = subtrees(&["count", star.to_str().unwrap(), "--vertex", "0", "--oracle"]);
    assert_eq!(stdout(&out), "8");
    let out = subtrees(&["count", star.to_str().unwrap(), "--wiener"]);
    assert_eq!(stdout(&out), "9");

    let p5 = write_path_file(dir.path(), 5);
    let out = subtrees(&["count", p5.to_str().unwrap(), "--both", "0", "4"]);
    assert_eq!(stdout(&out), "1");
    let out = subtrees(&["count", p5.to_str().unwrap(), "--excluding", "0", "4"]);
    assert_eq!(stdout(&out), "4");
    let out = subtrees(&["count", p5.to_str().unwrap(), "--excluding", "0", "4", "--oracle"]);
    assert_eq!(stdout(&out), "4");
}

#[test]
fn count_error_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3\n0 1\n").unwrap();
    let out = subtrees(&["count", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.path().join("nope.txt");
    let out = subtrees(&["count", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let p4 = write_path_file(dir.path(), 4);
    let out = subtrees(&["count", p4.to_str().unwrap(), "--vertex", "9"]);
    assert_eq!(out.status.code(), Some(2));

    let p25 = write_path_file(dir.path(), 25);
    let out = subtrees(&["count", p25.to_str().unwrap(), "--oracle"]);
    assert_eq!(out.status.code(), Some(3));
    // the DP has no such guard
    let out = subtrees(&["count", p25.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "325");
}

#[test]
fn construct_writes_tree_and_landmarks() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("spider.txt");
    let out = subtrees(&["construct", "spider", "7", "3", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    let landmarks: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(landmarks["center"], 0);
    let count = subtrees(&["count", file.to_str().unwrap()]);
    assert_eq!(stdout(&count), "36");

    let file = dir.path().join("dstar.txt");
    let out = subtrees(&["construct", "dstar", "2", "3", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&subtrees(&["count", file.to_str().unwrap()])), "17");

    let file = dir.path().join("qcat.txt");
    let out = subtrees(&["construct", "qcat", "1", "5", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&subtrees(&["count", file.to_str().unwrap()])), "37");
}

#[test]
fn construct_rejects_bad_params() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("x.txt");
    let out = subtrees(&["construct", "spider", "4", "7", "--out", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let out = subtrees(&["construct", "gadget", "4", "--out", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let out = subtrees(&["construct", "spider", "4", "--out", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn formula_values_and_variants() {
    assert_eq!(stdout(&subtrees(&["formula", "diameter-max", "4", "2"])), "11");
    assert_eq!(
        stdout(&subtrees(&["formula", "diameter-max", "4", "2", "--paper-display"])),
        "10"
    );
    assert_eq!(stdout(&subtrees(&["formula", "bipartition-min", "6", "2"])), "24");
    assert_eq!(
        stdout(&subtrees(&["formula", "bipartition-min", "6", "2", "--paper-display"])),
        "32"
    );
    assert_eq!(stdout(&subtrees(&["formula", "qary-min", "2", "3"])), "28");
    assert_eq!(stdout(&subtrees(&["formula", "spider-max", "7", "3"])), "36");
    assert_eq!(stdout(&subtrees(&["formula", "double-star-gap", "3", "4"])), "-6");
    assert_eq!(stdout(&subtrees(&["formula", "double-broom", "6", "3", "1", "2"])), "24");

    assert_eq!(subtrees(&["formula", "nonsense", "3"]).status.code(), Some(4));
    assert_eq!(
        subtrees(&["formula", "star", "5", "--paper-display"]).status.code(),
        Some(4)
    );
    assert_eq!(subtrees(&["formula", "qary-min", "4", "2"]).status.code(), Some(4));
}

#[test]
fn certify_spider_maximum() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let out = subtrees(&[
        "certify",
        "--n",
        "7",
        "--class",
        "leaves:3",
        "--objective",
        "max",
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["value"], "36");
    assert_eq!(report["unique"], true);
    assert_eq!(report["matches_construction"], true);
    assert_eq!(report["matches_formula"], true);
    let on_disk: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(on_disk, report);
}

#[test]
fn certify_runner_up_and_minimum() {
    let out = subtrees(&[
        "certify", "--n", "6", "--class", "bip:3,3", "--objective", "max", "--drop-double-star",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["value"], "25");

    let out = subtrees(&[
        "certify", "--n", "5", "--class", "leaves:2", "--objective", "min", "--jobs", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["class_size"], 1);
}

#[test]
fn certify_error_codes() {
    // no theorem binds this combination
    let out = subtrees(&["certify", "--n", "7", "--class", "diam:3", "--objective", "min"]);
    assert_eq!(out.status.code(), Some(4));
    // enumeration guard
    let out = subtrees(&["certify", "--n", "20", "--class", "leaves:3", "--objective", "max"]);
    assert_eq!(out.status.code(), Some(3));
    // bad class grammar
    let out = subtrees(&["certify", "--n", "7", "--class", "leaves=3", "--objective", "max"]);
    assert_eq!(out.status.code(), Some(4));
    let out = subtrees(&["certify", "--n", "7", "--class", "bip:5,2", "--objective", "max"]);
    assert_eq!(out.status.code(), Some(4));
    // empty class
    let out = subtrees(&["certify", "--n", "4", "--class", "bip:2,2", "--objective", "max", "--drop-double-star"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn compare_wiener_reports_inversion() {
    let out = subtrees(&["compare-wiener", "--n", "7", "--class", "leaves:3"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["subtree_max_is_wiener_min"], true);
    assert_eq!(report["subtree_min_is_wiener_max"], true);
    // recorded, not asserted, for bipartition families
    let out = subtrees(&["compare-wiener", "--n", "8", "--class", "bip:3,5"]);
    assert!(out.status.success());
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["certify", "--n", "8", "--class", "leaves:4", "--objective", "max"];
    let a = subtrees(&args);
    let b = subtrees(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["compare-wiener", "--n", "8", "--class", "leaves:4"];
    let a = subtrees(&args);
    let b = subtrees(&args);
    assert_eq!(a.stdout, b.stdout);
}
