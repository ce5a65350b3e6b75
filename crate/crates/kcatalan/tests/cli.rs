//! End-to-end checks of the binary: exact bytes, exit codes, file output.

use std::process::{Command, Output};

fn kcatalan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kcatalan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kcatalan(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn catalan_prints_the_exact_decimal() {
    assert_eq!(stdout(&["catalan", "--k", "3", "--n", "3"]), "42\n");
    assert_eq!(stdout(&["catalan", "--k", "4", "--n", "2"]), "14\n");
}

#[test]
fn narayana_triangle_csv() {
    assert_eq!(
        stdout(&["triangle", "--kind", "narayana", "--k", "3", "--rows", "2", "--format", "csv"]),
        "1\n2,3\n"
    );
}

#[test]
fn height_triangle_table() {
    assert_eq!(
        stdout(&["triangle", "--kind", "height", "--k", "3", "--rows", "3"]),
        "1\n1 2 2\n1 8 18 10 5\n"
    );
}

#[test]
fn padded_narayana_is_rectangular() {
    assert_eq!(
        stdout(&["triangle", "--kind", "narayana", "--k", "3", "--rows", "3", "--padded", "--format", "csv"]),
        "1,0,0\n2,3,0\n5,23,14\n"
    );
}

#[test]
fn period_reports_odd_squares_scalar_period() {
    let out = stdout(&["period", "--k", "2", "--weights", "odd-squares", "--mod", "27"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["period_report"]["scalar_period"], 2);
    assert_eq!(v["period_report"]["hypothesis"], "product");
    assert_eq!(v["period_report"]["cap"], 4);
    assert_eq!(v["period_report"]["confirmed"], true);

    let out = stdout(&["period", "--k", "2", "--weights", "odd-squares", "--mod", "81"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["period_report"]["scalar_period"], 6);
}

#[test]
fn period_declines_when_no_hypothesis_applies() {
    let out = stdout(&["period", "--k", "3", "--weights", "ones", "--mod", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["period_report"].is_null());
}

#[test]
fn period_exhausted_budget_is_exit_2() {
    let out = kcatalan(&[
        "period", "--k", "3", "--weights", "ones", "--mod", "11", "--s", "6", "--max-steps", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bfile_flag_writes_the_sequence_file() {
    let dir = std::env::temp_dir().join(format!("kcatalan-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let path = dir.join("b_bounded.txt");
    let out = kcatalan(&[
        "bounded", "--k", "3", "--s", "4", "--n", "6", "--bfile",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "1 1\n2 5\n3 27\n4 147\n5 801\n6 4365\n"
    );

    let path = dir.join("b_catalan.txt");
    let out = kcatalan(&["catalan", "--k", "2", "--n", "5", "--bfile", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 1\n2 2\n3 5\n4 14\n5 42\n");

    let path = dir.join("b_empty.txt");
    let out = kcatalan(&["catalan", "--k", "2", "--n", "0", "--bfile", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "");

    let out = kcatalan(&["catalan", "--k", "2", "--n", "3", "--bfile", "/nonexistent/dir/b.txt"]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bfile_format_prints_to_stdout() {
    assert_eq!(
        stdout(&["catalan", "--k", "2", "--n", "5", "--format", "bfile"]),
        "1 1\n2 2\n3 5\n4 14\n5 42\n"
    );
    // triangles flatten in reading order
    assert_eq!(
        stdout(&["triangle", "--kind", "height", "--k", "3", "--rows", "2", "--format", "bfile"]),
        "1 1\n2 1\n3 2\n4 2\n"
    );
}

#[test]
fn matrix_json_is_stable() {
    let out = stdout(&["matrix", "--k", "3", "--s", "4"]);
    assert_eq!(
        out,
        "{\"k\":3,\"matrix\":[[\"1\",\"2\",\"0\"],[\"2\",\"4\",\"1\"],[\"1\",\"2\",\"1\"]],\
         \"s\":4,\"states\":[[0,0,0],[2,1,0],[3,3,0]]}\n"
    );
}

#[test]
fn enumerate_lists_paths_lexicographically() {
    assert_eq!(
        stdout(&["enumerate", "--k", "3", "--n", "2"]),
        "1,1,2,2,3,3\n1,1,2,3,2,3\n1,2,1,2,3,3\n1,2,1,3,2,3\n1,2,3,1,2,3\n"
    );
    assert_eq!(
        stdout(&["enumerate", "--k", "3", "--n", "2", "--s", "3"]),
        "1,2,1,2,3,3\n1,2,1,3,2,3\n1,2,3,1,2,3\n"
    );
}

#[test]
fn triangle_columns_project_to_sequences() {
    // the first Narayana column is the one-dimension-down closed form
    assert_eq!(
        stdout(&["triangle", "--kind", "narayana", "--k", "3", "--rows", "6", "--p", "1", "--format", "csv"]),
        "1,2,5,14,42,132\n"
    );
    assert_eq!(
        stdout(&["triangle", "--kind", "height", "--k", "3", "--rows", "4", "--s", "4", "--format", "bfile"]),
        "1 0\n2 2\n3 18\n4 120\n"
    );
    let out = kcatalan(&["triangle", "--kind", "height", "--k", "3", "--rows", "3", "--p", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn weighted_and_modulus() {
    assert_eq!(stdout(&["weighted", "--k", "2", "--n", "3", "--weights", "list:1,2,3"]), "15\n");
    assert_eq!(
        stdout(&["weighted", "--k", "2", "--n", "3", "--weights", "list:1,2,3", "--mod", "7"]),
        "1\n"
    );
    assert_eq!(
        stdout(&["weighted", "--k", "2", "--n", "3", "--weights", "list:1,2,3", "--format", "json"]),
        "{\"k\":2,\"n\":3,\"values\":[\"15\"]}\n"
    );
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["triangle", "--kind", "narayana", "--k", "4", "--rows", "4", "--format", "json"],
        vec!["matrix", "--k", "3", "--s", "6", "--weights", "list:1,2,3,4"],
        vec!["period", "--k", "2", "--weights", "odd-squares", "--mod", "27"],
    ] {
        assert_eq!(stdout(&args), stdout(&args));
    }
}

#[test]
fn check_suites_pass_and_unknown_suite_is_usage_error() {
    let out = kcatalan(&["check", "--suite", "tables"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL "));
    assert!(text.contains("erratum"));

    for suite in ["identities", "matrices", "periods"] {
        let out = kcatalan(&["check", "--suite", suite]);
        assert!(out.status.success(), "suite {suite} failed");
    }

    let out = kcatalan(&["check", "--suite", "oracle", "--max-paths", "1000"]);
    assert!(out.status.success());

    let out = kcatalan(&["check", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1() {
    let out = kcatalan(&["catalan", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = kcatalan(&["catalan", "--k", "1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = kcatalan(&["weighted", "--k", "2", "--n", "3", "--weights", "list:1,x"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = kcatalan(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
