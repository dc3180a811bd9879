use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfusion"))
        .args(args)
        .env_remove("QFUSION_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn entries(v: &Value) -> Vec<(String, String, String, i64, u64)> {
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["lambda"].as_str().unwrap().to_string(),
                e["mu"].as_str().unwrap().to_string(),
                e["nu"].as_str().unwrap().to_string(),
                e["d"].as_i64().unwrap(),
                e["c"].as_u64().unwrap(),
            )
        })
        .collect()
}

#[test]
fn fusion_example_all_methods() {
    let out = run(&[
        "fusion", "--n", "3", "--k", "2", "--lhs", "2,1", "--rhs", "2,1", "--method", "all",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["agreement"], true);
    assert_eq!(v["method"], "all");
    let got: Vec<(String, u64)> = entries(&v).into_iter().map(|e| (e.2, e.4)).collect();
    assert_eq!(got, vec![("0".to_string(), 1), ("2,1".to_string(), 1)]);
    // schema key order
    let text = String::from_utf8(out.stdout).unwrap();
    let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("params") < pos("entries") && pos("entries") < pos("method") && pos("method") < pos("agreement"));
}

#[test]
fn gw_example() {
    let out = run(&["gw", "--k", "4", "--n", "3", "--lhs", "3,3,2,1", "--rhs", "2,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let got: Vec<(String, i64, u64)> = entries(&json(&out)).into_iter().map(|e| (e.2, e.3, e.4)).collect();
    let want = [
        ("0", 2, 1),
        ("2,2,2,1", 1, 1),
        ("3,2,1,1", 1, 2),
        ("3,2,2", 1, 1),
        ("3,3,1", 1, 1),
    ];
    assert_eq!(
        got,
        want.iter().map(|(a, d, c)| (a.to_string(), *d, *c)).collect::<Vec<_>>()
    );
}

#[test]
fn gw_all_methods_agree_on_full_table() {
    let out = run(&["gw", "--k", "2", "--N", "5", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["agreement"], true);
    assert!(entries(&v).contains(&("3,2".into(), "2,1".into(), "3".into(), 1, 1)));
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["bethe", "smatrix", "symmetry", "recursion", "cauchy", "tq"] {
        let out = run(&["verify", "--suite", suite, "--n", "3", "--k", "2"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert_eq!(json(&out)["ok"], true);
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(
        run(&["gw", "--k", "6", "--n", "7", "--method", "spectral"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["fusion", "--n", "3", "--k", "2", "--lhs", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["fusion", "--n", "3"]).status.code(), Some(1));
    assert_eq!(
        run(&["fusion", "--n", "3", "--k", "1", "--method", "recursion"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn residual_failure_exits_three() {
    let out = run(&[
        "fusion", "--n", "3", "--k", "2", "--method", "spectral", "--tol", "1e-300",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn deterministic_across_thread_counts() {
    let a = run(&["--threads", "1", "gw", "--k", "3", "--N", "6"]);
    let b = run(&["--threads", "4", "gw", "--k", "3", "--N", "6"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&[
        "--threads",
        "1",
        "fusion",
        "--n",
        "4",
        "--k",
        "2",
        "--method",
        "spectral",
    ]);
    let b = run(&[
        "--threads",
        "3",
        "fusion",
        "--n",
        "4",
        "--k",
        "2",
        "--method",
        "spectral",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_hits_match_cold_runs() {
    let dir = std::env::temp_dir().join(format!("qfusion-cache-test-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let args = ["gw", "--k", "2", "--N", "6", "--method", "all"];
    let cold = Command::new(env!("CARGO_BIN_EXE_qfusion"))
        .args(args)
        .env("QFUSION_CACHE_DIR", &dir)
        .output()
        .unwrap();
    let files = std::fs::read_dir(&dir).unwrap().count();
    assert_eq!(files, 3);
    let warm = Command::new(env!("CARGO_BIN_EXE_qfusion"))
        .args(args)
        .env("QFUSION_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, run(&args).stdout);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn hierarchy_matches_gw() {
    let h = run(&["hierarchy", "--N", "5", "--k", "2"]);
    let g = run(&["gw", "--k", "2", "--N", "5"]);
    assert_eq!(entries(&json(&h)), entries(&json(&g)));
}

#[test]
fn word_algorithms() {
    let out = run(&["dengdu", "--n", "3", "--word", "a0^2a2^4a1^5a0^6a2^3a1^2a0^3a2^2"]);
    let v = json(&out);
    assert_eq!(v["multipartition"], serde_json::json!(["4,2,2,2", "3,1,1", "4,4,2,2"]));
    let out = run(&["dengdu", "--n", "3", "--multipartition", "4,2,2,2|3,1,1|4,4,2,2"]);
    assert_eq!(json(&out)["word"], "a0^2a2^4a1^5a0^6a2^3a1^2a0^3a2^2");
    assert_eq!(
        run(&["dengdu", "--n", "3", "--multipartition", "1|1|1"]).status.code(),
        Some(1)
    );

    let out = run(&[
        "normalize",
        "--tableau",
        "1,1,1,2,2,3,3,4,6,10/2,2,3,3,3,4,5,6,7/9",
        "--log",
    ]);
    let v = json(&out);
    assert_eq!(
        v["output"],
        serde_json::json!([[1, 1, 1, 2, 2, 3, 3, 3, 4, 6, 6, 9, 10], [2, 2, 3, 3, 4, 5, 7]])
    );
    assert_eq!(v["rules"].as_array().unwrap().len(), 20);
    assert_eq!(run(&["normalize", "--tableau", "2,1"]).status.code(), Some(1));
}

#[test]
fn csv_and_pretty() {
    let out = run(&["--format", "csv", "fusion", "--n", "3", "--k", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("lambda,mu,nu,d,c"));
    assert_eq!(text.lines().count(), 10);
    let out = run(&["--format", "pretty", "smatrix", "--n", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("S-matrix"));
}
