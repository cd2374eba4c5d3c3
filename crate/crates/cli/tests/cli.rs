//! End-to-end tests of the bsmt binary: output goldens, exit codes, and
//! seed-pinned determinism.

use std::process::{Command, Output};

fn bsmt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsmt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn demazure_word_fold() {
    let out = bsmt(&["demazure", "--n", "4", "--word", "2,3,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "[3142]");
}

#[test]
fn demazure_operands() {
    let out = bsmt(&["demazure", "--n", "4", "[2134]", "[2134]"]);
    assert_eq!(stdout(&out).trim(), "[2134]");
    let out = bsmt(&["demazure", "--n", "3", "[321]", "[213]"]);
    assert_eq!(stdout(&out).trim(), "[321]");
}

#[test]
fn demazure_parse_failure() {
    let out = bsmt(&["demazure", "--n", "4", "[21", "[2134]"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn maxe_golden_with_trace_and_oracle() {
    for extra in [&[][..], &["--oracle"][..]] {
        let mut args = vec!["maxe", "--n", "4", "--w", "[4231]", "--col", "1,3"];
        args.extend_from_slice(extra);
        let out = bsmt(&args);
        assert_eq!(code(&out), 0);
        let text = stdout(&out);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "[3142]");
        let tags: Vec<&str> =
            lines[1..].iter().map(|l| l.split_whitespace().nth(1).unwrap()).collect();
        assert_eq!(tags, vec![">", "<=", "fix", ">", "fix"]);
    }
}

#[test]
fn maxe_empty_fibre_exits_3() {
    let out = bsmt(&["maxe", "--n", "3", "--w", "[123]", "--col", "2"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn wmax_output() {
    let out = bsmt(&["wmax", "--n", "3", "--word", "2,1,2"]);
    assert_eq!(stdout(&out).trim(), "[321]");
}

#[test]
fn tableaux_records() {
    let out = bsmt(&["tableaux", "--n", "2", "--word", "1", "--mult", "1"]);
    assert_eq!(code(&out), 0);
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    let w0_count = lines
        .iter()
        .filter(|r| r["w0_standard"].as_bool().unwrap())
        .count();
    assert_eq!(w0_count, 1);
    assert!(lines.iter().all(|r| r["standard"].as_bool().unwrap()));
}

#[test]
fn tableaux_empty_shape() {
    let out = bsmt(&["tableaux", "--n", "2", "--word", "1", "--mult", "0"]);
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn chain_default_word_n4() {
    let out = bsmt(&["chain", "--n", "4"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let kappas: Vec<&str> = v["steps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["kappa"].as_str().unwrap())
        .collect();
    assert_eq!(kappas, vec!["1", "2", "3", "1,4", "2,4", "1,3,4"]);
}

#[test]
fn chain_missing_letter_exits_5() {
    let out = bsmt(&["chain", "--n", "4", "--word", "1,1"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn verify_small_instance_passes() {
    let out = bsmt(&[
        "verify", "--n", "3", "--word", "1,2,1", "--mult", "1,1,1", "--seed", "3",
        "--samples", "10",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["rank"]["standard_on_chart"], v["counts"]["standard"]);
    assert_eq!(v["rank"]["w0_on_fibre"], v["counts"]["w0_standard"]);
    assert_eq!(v["rank"]["standard_on_fibre"], v["counts"]["w0_standard"]);
}

#[test]
fn verify_corrupted_basis_exits_1() {
    let out = bsmt(&[
        "verify", "--n", "3", "--word", "1,2,1", "--mult", "1,1,1", "--seed", "3",
        "--samples", "10", "--corrupt",
    ]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], false);
    assert_eq!(v["checks"]["rank_standard"], false);
}

#[test]
fn sample_is_deterministic_per_seed() {
    let args = [
        "sample", "--n", "3", "--word", "1,2,1", "--gamma", "--samples", "3", "--seed", "7",
    ];
    let a = bsmt(&args);
    let b = bsmt(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let other = bsmt(&[
        "sample", "--n", "3", "--word", "1,2,1", "--samples", "3", "--seed", "8",
    ]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn sample_richardson_matrices() {
    let out = bsmt(&[
        "sample", "--n", "3", "--v", "[132]", "--w", "[312]", "--samples", "2", "--seed", "1",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert_eq!(arr[0]["matrix"].as_array().unwrap().len(), 3);
}

#[test]
fn sample_richardson_requires_comparable_pair() {
    let out = bsmt(&[
        "sample", "--n", "3", "--v", "[321]", "--w", "[123]", "--samples", "1",
    ]);
    assert_eq!(code(&out), 5);
}
