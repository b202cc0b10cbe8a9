use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run_in(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilgrade"))
        .args(args)
        .env("NILGRADE_CACHE_DIR", cache)
        .output()
        .expect("run nilgrade")
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn kconst_single_types() {
    for (f, r, k) in [("A", "2", 2), ("E", "8", 29), ("G", "2", 3)] {
        let v = json(&["kconst", "--family", f, "--rank", r]);
        assert_eq!(v["entries"][0]["k"], k, "{f}{r}");
        assert_eq!(v["entries"][0]["reflection_length"], 2 * k - 1);
    }
}

#[test]
fn graded_a2_adjoint() {
    let v = json(&[
        "graded",
        "--family",
        "A",
        "--rank",
        "2",
        "--variety",
        "nilcone",
        "--lambda",
        "1,1",
    ]);
    let vals = &v["entries"][0]["values"];
    assert_eq!(vals[0]["n"], 1);
    assert_eq!(vals[0]["mult"], 1);
    assert_eq!(vals[1]["n"], 2);
    assert_eq!(vals[1]["mult"], 1);
    assert_eq!(v["entries"][0]["total"], 2);

    let v = json(&[
        "graded",
        "--family",
        "A",
        "--rank",
        "2",
        "--variety",
        "subregular",
        "--lambda",
        "1,1",
    ]);
    assert_eq!(v["k"], 2);
    let vals = v["entries"][0]["values"].as_array().unwrap();
    assert_eq!(vals.len(), 1);
    assert_eq!(vals[0]["n"], 1);
    assert_eq!(vals[0]["mult"], 1);
}

#[test]
fn graded_check_passes_on_sweep() {
    let o = run(&[
        "graded",
        "--family",
        "B",
        "--rank",
        "2",
        "--variety",
        "subregular",
        "--sweep",
        "2",
        "--check",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn graded_table_states_degree_convention() {
    let o = run(&[
        "graded",
        "--family",
        "A",
        "--rank",
        "2",
        "--variety",
        "nilcone",
        "--lambda",
        "1,1",
    ]);
    assert!(stdout(&o).contains("cohomological degree 2n"));
}

#[test]
fn graded_csv_has_one_row_per_degree() {
    let o = run(&[
        "graded",
        "--family",
        "A",
        "--rank",
        "2",
        "--variety",
        "nilcone",
        "--lambda",
        "1,1",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda,n,mult,total,expected");
    assert_eq!(lines.len(), 3);
}

#[test]
fn tilting_example_signs() {
    let v = json(&["tilting-example"]);
    let euler = |l: [i64; 2]| {
        v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["lambda"] == serde_json::json!(l))
            .unwrap()["euler"]
            .clone()
    };
    assert_eq!(euler([0, 0]), 1);
    assert_eq!(euler([3, 0]), -1);
    assert_eq!(v["sign_change"], true);
}

#[test]
fn cohomology_parity_and_csv() {
    let v = json(&[
        "cohomology",
        "--family",
        "A",
        "--rank",
        "2",
        "--kind",
        "trivial",
        "--sweep",
        "2",
    ]);
    assert_eq!(v["parity_check"]["ok"], true);
    assert_eq!(v["parity_check"]["vanishing_parity"], "odd");
    assert_eq!(v["kind"], "trivial");

    let o = run(&[
        "cohomology",
        "--family",
        "G",
        "--rank",
        "2",
        "--kind",
        "simple",
        "--sweep",
        "1",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("i,lambda,mult\n"));

    let o = run(&[
        "cohomology",
        "--family",
        "A",
        "--rank",
        "2",
        "--kind",
        "weyl",
        "--sweep",
        "2",
        "--check",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn mult_methods_agree() {
    for method in ["freudenthal", "kostant"] {
        let v = json(&[
            "mult", "--family", "A", "--rank", "2", "--lambda", "1,1", "--mu", "0,0", "--method",
            method,
        ]);
        assert_eq!(v["mult"], 2, "{method}");
    }
    let o = run(&[
        "mult", "--family", "B", "--rank", "2", "--lambda", "2,1", "--mu", "0,1", "--check",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn hilbert_a1() {
    let v = json(&[
        "hilbert",
        "--family",
        "A",
        "--rank",
        "1",
        "--variety",
        "nilcone",
        "--max-degree",
        "4",
    ]);
    assert_eq!(v["coefficients"], serde_json::json!([1, 3, 5, 7, 9]));
}

#[test]
fn roots_json() {
    let v = json(&["roots", "--family", "A", "--rank", "2"]);
    assert_eq!(v["family"], "A");
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 3);
    assert_eq!(v["rho"], serde_json::json!([1, 1]));
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "cohomology",
        "--family",
        "B",
        "--rank",
        "2",
        "--kind",
        "tilting",
        "--sweep",
        "2",
        "--format",
        "json",
    ];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["kconst", "--family", "B", "--rank", "1"][..],
        &["kconst", "--family", "Q", "--rank", "2"],
        &["kconst"],
        &[
            "graded",
            "--family",
            "A",
            "--rank",
            "2",
            "--variety",
            "nilcone",
            "--lambda",
            "1,0,0",
        ],
        &[
            "graded",
            "--family",
            "A",
            "--rank",
            "2",
            "--variety",
            "nilcone",
            "--lambda",
            "-1,2",
        ],
        &[
            "graded",
            "--family",
            "A",
            "--rank",
            "2",
            "--variety",
            "nilcone",
        ],
        &[
            "mult", "--family", "A", "--rank", "2", "--lambda", "x", "--mu", "0,0",
        ],
        &["no-such-command"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn weyl_cap_exits_3() {
    let o = run(&[
        "graded",
        "--family",
        "B",
        "--rank",
        "3",
        "--variety",
        "nilcone",
        "--lambda",
        "1,0,0",
        "--weyl-cap",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn cache_is_written_listed_and_cleared() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(
        dir.path(),
        &[
            "graded",
            "--family",
            "G",
            "--rank",
            "2",
            "--variety",
            "nilcone",
            "--sweep",
            "1",
        ],
    );
    assert!(o.status.success());
    let listed: Value = serde_json::from_str(&stdout(&run_in(
        dir.path(),
        &["cache", "list", "--format", "json"],
    )))
    .unwrap();
    assert_eq!(listed["caches"][0]["system"], "G2");

    // A second run reads the cache and gives the same answer.
    let again = run_in(
        dir.path(),
        &[
            "graded",
            "--family",
            "G",
            "--rank",
            "2",
            "--variety",
            "nilcone",
            "--sweep",
            "1",
        ],
    );
    assert_eq!(stdout(&o), stdout(&again));

    let cleared: Value = serde_json::from_str(&stdout(&run_in(
        dir.path(),
        &["cache", "clear", "--format", "json"],
    )))
    .unwrap();
    assert_eq!(cleared["removed"], 1);
    let listed: Value = serde_json::from_str(&stdout(&run_in(
        dir.path(),
        &["cache", "list", "--format", "json"],
    )))
    .unwrap();
    assert_eq!(listed["caches"].as_array().unwrap().len(), 0);
}

#[test]
fn no_cache_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(
        dir.path(),
        &[
            "graded",
            "--family",
            "A",
            "--rank",
            "2",
            "--variety",
            "nilcone",
            "--sweep",
            "1",
            "--no-cache",
        ],
    );
    assert!(o.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}
