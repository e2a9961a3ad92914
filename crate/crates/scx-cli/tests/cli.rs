//! End-to-end checks of the `scx` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../scx/fixtures")
        .join(name)
}

fn scx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn validate_accepts_the_chain_fixture() {
    let out = scx(&["validate", fixture("triangle_chain.scx").to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert_eq!(stdout(&out), "ok\n");
}

#[test]
fn validate_strict_rejects_zero_weights() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("zero.scx");
    std::fs::write(&file, "scx 2 3\n1 2 3 0\n").unwrap();
    let lenient = scx(&["validate", file.to_str().unwrap()]);
    assert_eq!(code(&lenient), 0);
    let strict = scx(&["validate", "--strict-positive", file.to_str().unwrap()]);
    assert_eq!(code(&strict), 1);
    assert!(stdout(&strict).contains("zero weight"), "{strict:?}");
}

#[test]
fn validate_reports_negative_weights() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("neg.scx");
    std::fs::write(&file, "scx 2 3\n1 2 3 -4\n").unwrap();
    let out = scx(&["validate", file.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("negative weight -4"), "{out:?}");
}

#[test]
fn missing_files_and_parse_errors_exit_2() {
    let out = scx(&["validate", "/no/such/file.scx"]);
    assert_eq!(code(&out), 2);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("broken.scx");
    std::fs::write(&file, "scx 2 5\n1 2 3 4 1\n").unwrap();
    let out = scx(&["validate", file.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("broken.scx:2"), "{stderr}");
}

#[test]
fn sssp_prints_the_full_table() {
    let out = scx(&[
        "sssp",
        fixture("triangle_chain.scx").to_str().unwrap(),
        "--source",
        "1,3",
    ]);
    assert_eq!(code(&out), 0, "{out:?}");
    let expected = "\
1,3 0 -
1,2 2 1,3
2,3 2 1,3
2,5 5 2,3
3,5 5 2,3
3,4 10 3,5
4,5 10 3,5
2,6 12 2,5
5,6 12 2,5
4,7 15 4,5
5,7 15 4,5
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn sssp_source_is_order_insensitive() {
    let a = scx(&["sssp", fixture("triangle_chain.scx").to_str().unwrap(), "--source", "1,3"]);
    let b = scx(&["sssp", fixture("triangle_chain.scx").to_str().unwrap(), "--source", "3,1"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn sssp_all_adds_inf_rows() {
    let out = scx(&[
        "sssp",
        fixture("two_triangles.scx").to_str().unwrap(),
        "--source",
        "2,3",
        "--all",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "2,3 0 -");
    assert_eq!(lines.len(), 6); // the isolated source plus five incident facets
    assert!(lines[1..].iter().all(|l| l.contains(" inf -")), "{text}");
}

#[test]
fn sssp_json_mirrors_the_table() {
    let out = scx(&[
        "sssp",
        fixture("triangle_chain.scx").to_str().unwrap(),
        "--source",
        "1,3",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["source"], "1,3");
    assert_eq!(value["rows"].as_array().unwrap().len(), 11);
    assert_eq!(value["rows"][0]["simplex"], "1,3");
    assert_eq!(value["rows"][0]["distance"], 0.0);
}

#[test]
fn sssp_rejects_malformed_sources() {
    let out = scx(&["sssp", fixture("triangle_chain.scx").to_str().unwrap(), "--source", "1,x"]);
    assert_eq!(code(&out), 2);
    let wrong_arity =
        scx(&["sssp", fixture("triangle_chain.scx").to_str().unwrap(), "--source", "1,2,3"]);
    assert_eq!(code(&wrong_arity), 2);
}

#[test]
fn path_walks_the_chain() {
    let out = scx(&[
        "path",
        fixture("triangle_chain.scx").to_str().unwrap(),
        "--source",
        "1,3",
        "--target",
        "4,7",
    ]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert_eq!(
        stdout(&out),
        "path 1,3 2,3 3,5 4,5 4,7\nvia 1,2,3 2,3,5 3,4,5 4,5,7\nhops 4\ntotal 15\n"
    );
}

#[test]
fn path_handles_trivial_and_unreachable_queries() {
    let trivial = scx(&[
        "path",
        fixture("triangle_chain.scx").to_str().unwrap(),
        "--source",
        "1,3",
        "--target",
        "1,3",
    ]);
    assert_eq!(code(&trivial), 0);
    assert!(stdout(&trivial).contains("hops 0\ntotal 0\n"));

    let unreachable = scx(&[
        "path",
        fixture("two_triangles.scx").to_str().unwrap(),
        "--source",
        "1,2",
        "--target",
        "2,3",
    ]);
    assert_eq!(code(&unreachable), 1);
    assert_eq!(stdout(&unreachable), "unreachable\n");

    let json = scx(&[
        "path",
        fixture("two_triangles.scx").to_str().unwrap(),
        "--source",
        "1,2",
        "--target",
        "2,3",
        "--json",
    ]);
    assert_eq!(code(&json), 1);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["found"], false);
}

#[test]
fn generate_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.scx");
    let b = dir.path().join("b.scx");
    for file in [&a, &b] {
        let out = scx(&[
            "generate", "--n", "12", "--d", "2", "--p", "0.4", "--seed", "99", "--int",
            "--output", file.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{out:?}");
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn generate_with_p_one_emits_every_candidate() {
    let out = scx(&["generate", "--n", "4", "--d", "2", "--p", "1", "--seed", "1", "--int"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5); // header plus C(4,3) = 4 simplices
    assert!(text.starts_with("scx 2 4\n1 2 3 "));
}

#[test]
fn generate_rejects_bad_configs() {
    let out = scx(&["generate", "--n", "4", "--d", "4", "--p", "0.5", "--seed", "1"]);
    assert_eq!(code(&out), 2);
    let out = scx(&["generate", "--n", "4", "--d", "2", "--p", "1.5", "--seed", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn bench_emits_the_fixed_csv_schema() {
    let out = scx(&["bench", "--d", "2", "--target-m", "60,120", "--p", "0.5", "--repeat", "3"]);
    assert_eq!(code(&out), 0, "{out:?}");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n_simplices,d,m,build_ms,sssp_ms");
    assert_eq!(lines.len(), 3);
    for row in &lines[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 5);
        assert_eq!(fields[1], "2");
        assert!(fields[2].parse::<u64>().unwrap() > 0);
        assert!(fields[3].parse::<f64>().is_ok());
        assert!(fields[4].parse::<f64>().is_ok());
    }
}

#[test]
fn sssp_rejects_negative_weight_files_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("neg.scx");
    std::fs::write(&file, "scx 2 3\n1 2 3 -4\n").unwrap();
    let out = scx(&["sssp", file.to_str().unwrap(), "--source", "1,2"]);
    assert_eq!(code(&out), 1);
}
