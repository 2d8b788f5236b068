use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use setcover::text::parse_instance;

const BIN: &str = env!("CARGO_BIN_EXE_setcover");

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

const GREEDY_BAD: &str = "3 6\n111100\n110010\n001101\n";
const IDENTITY3: &str = "3 3\n100\n010\n001\n";

#[test]
fn gen_quarter_density() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "gen",
        "--m",
        "4",
        "--n",
        "8",
        "--gamma",
        "0.25",
        "--model",
        "column-regular",
        "--seed",
        "7",
        "--out",
        "a.txt",
    ];
    let out = run(dir.path(), &args);
    assert!(out.status.success());
    assert!(stdout(&out).contains("c_effective=1"));
    let first = fs::read(dir.path().join("a.txt")).unwrap();
    let inst = parse_instance(std::str::from_utf8(&first).unwrap()).unwrap();
    assert!(inst.column_counts().iter().all(|&c| c == 1));

    assert!(run(dir.path(), &args).status.success());
    assert_eq!(fs::read(dir.path().join("a.txt")).unwrap(), first);
}

#[test]
fn gen_bernoulli() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &[
            "gen",
            "--m",
            "6",
            "--n",
            "10",
            "--gamma",
            "0.3333333333333333",
            "--model",
            "bernoulli-repair",
            "--p",
            "0.2",
            "--seed",
            "3",
            "--out",
            "b.txt",
        ],
    );
    assert!(out.status.success());
    let inst = parse_instance(&fs::read_to_string(dir.path().join("b.txt")).unwrap()).unwrap();
    assert!(inst.density().c_effective >= 2);
}

#[test]
fn gen_rejects_bad_gamma() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &[
            "gen",
            "--m",
            "2",
            "--n",
            "2",
            "--gamma",
            "1.5",
            "--model",
            "column-regular",
            "--seed",
            "1",
            "--out",
            "x.txt",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--gamma"));
    assert!(!dir.path().join("x.txt").exists());
}

#[test]
fn solve_variants() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "id.txt", IDENTITY3);
    write(dir.path(), "bad.txt", GREEDY_BAD);
    write(dir.path(), "full.txt", "2 3\n111\n111\n");

    let doc: Value =
        serde_json::from_str(&stdout(&run(dir.path(), &["solve", "--in", "id.txt"]))).unwrap();
    assert_eq!(doc["greedy_rows"], serde_json::json!([0, 1, 2]));
    assert_eq!(doc["total_size"], 3);

    let out = run(
        dir.path(),
        &[
            "solve", "--in", "bad.txt", "--k-max", "1", "--patch", "--out", "t.json",
        ],
    );
    assert!(out.status.success());
    let doc: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("t.json")).unwrap()).unwrap();
    assert_eq!(doc["patch_rows"], serde_json::json!([1, 2]));
    assert_eq!(doc["total_size"], 3);
    assert_eq!(doc["uncovered_counts"], serde_json::json!([6, 2]));

    let doc: Value = serde_json::from_str(&stdout(&run(
        dir.path(),
        &["solve", "--in", "full.txt", "--k-star", "improved"],
    )))
    .unwrap();
    assert_eq!(doc["gamma_effective"], 1.0);
    assert_eq!(doc["greedy_rows"], serde_json::json!([0]));
    assert_eq!(doc["total_size"], 1);

    let out = run(
        dir.path(),
        &[
            "solve", "--in", "bad.txt", "--k-max", "1", "--k-star", "improved",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_reports_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "zero.txt", "2 2\n10\n00\n");
    let out = run(dir.path(), &["solve", "--in", "zero.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 2"));
    let out = run(dir.path(), &["solve", "--in", "missing.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bounds_tables() {
    let dir = tempfile::tempdir().unwrap();
    let csv = stdout(&run(dir.path(), &["bounds", "--gamma", "0.25", "--m", "4"]));
    let improved: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(improved, ["1", "0.75", "0.5", "0.25", "0"]);
    assert_eq!(csv.lines().nth(1), Some("0,1,1,1"));

    let csv = stdout(&run(dir.path(), &["bounds", "--gamma", "0.5", "--m", "2"]));
    assert_eq!(csv.lines().last().unwrap().split(',').nth(2), Some("0"));

    let csv = stdout(&run(
        dir.path(),
        &[
            "bounds", "--gamma", "0.25", "--m", "4", "--n", "100", "--k-max", "2",
        ],
    ));
    assert_eq!(csv.lines().count(), 5);
    assert_eq!(
        csv.lines().last(),
        Some("# cover_size_bound improved=(4,4) classical=(4,36)")
    );

    assert_eq!(
        run(dir.path(), &["bounds", "--gamma", "0", "--m", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(
            dir.path(),
            &["bounds", "--gamma", "0.5", "--m", "4", "--k-max", "5"]
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn compare_single_and_sweep() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "id.txt", IDENTITY3);
    write(dir.path(), "ones.txt", "2 2\n11\n11\n");

    let out = run(dir.path(), &["compare", "--in", "id.txt"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert_eq!(csv.lines().next(), Some(setcover::table::RECORD_HEADER));
    let deltas: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(9).unwrap())
        .collect();
    assert_eq!(
        deltas,
        ["1", "0.6666666666666666", "0.3333333333333333", "0"]
    );

    let csv = stdout(&run(dir.path(), &["compare", "--in", "ones.txt"]));
    let rows: Vec<Vec<&str>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[1][9], rows[1][11]), ("0", "0"));

    let out = run(
        dir.path(),
        &[
            "compare",
            "--m",
            "16",
            "--n",
            "64",
            "--gamma",
            "0.2",
            "--model",
            "column-regular",
            "--count",
            "100",
            "--seed",
            "5",
            "--out",
            "s.csv",
        ],
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("100 instances"));
    let csv = fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let ids: std::collections::BTreeSet<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(ids.len(), 100);

    assert_eq!(
        run(dir.path(), &["compare", "--m", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn exact_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "greedy_bad.txt", GREEDY_BAD);
    let out = run(dir.path(), &["exact", "--in", "greedy_bad.txt"]);
    assert_eq!(stdout(&out), "size 2\nrows 1 2\n");

    let big = format!("26 1\n{}", "1\n".repeat(26));
    write(dir.path(), "big.txt", &big);
    assert_eq!(
        run(dir.path(), &["exact", "--in", "big.txt"]).status.code(),
        Some(2)
    );

    let out = run(
        dir.path(),
        &["verify", "--suite", "product-inequality", "--max-y", "200"],
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("20100 pairs checked, 0 violations"));

    let out = run(
        dir.path(),
        &[
            "verify",
            "--suite",
            "exhaustive",
            "--m",
            "3",
            "--n",
            "3",
            "--json",
            "r.json",
        ],
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("343 instances checked"));
    let doc: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["checked"], 343);

    let out = run(
        dir.path(),
        &[
            "verify", "--suite", "random", "--count", "50", "--seed", "1",
        ],
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("50 instances checked"));

    assert_eq!(
        run(
            dir.path(),
            &["verify", "--suite", "exhaustive", "--m", "5", "--n", "4"]
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(dir.path(), &["verify", "--suite", "exhaustive"])
            .status
            .code(),
        Some(2)
    );
}
