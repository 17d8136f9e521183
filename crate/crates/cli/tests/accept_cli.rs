use std::process::{Command, Output};

use genstirling::parse_rational;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genstirling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

/// Every string leaf must parse as an exact rational.
fn assert_rationals(v: &Value, skip: &[&str]) {
    match v {
        Value::String(s) => {
            parse_rational(s).unwrap_or_else(|_| panic!("{s:?} does not parse"));
        }
        Value::Array(items) => items.iter().for_each(|i| assert_rationals(i, skip)),
        Value::Object(map) => map
            .iter()
            .filter(|(k, _)| !skip.contains(&k.as_str()))
            .for_each(|(_, v)| assert_rationals(v, skip)),
        _ => {}
    }
}

#[test]
fn table_csv() {
    let out = stdout(&["table", "--alpha", "0", "--beta", "-1", "--nmax", "2", "--format", "csv"]);
    assert_eq!(out, "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,2\n2,2,1\n");

    let out = stdout(&["table", "--alpha", "1", "--beta", "1", "--nmax", "1"]);
    assert_eq!(out, "n,k,value\n0,0,1\n1,0,-1\n1,1,-1\n");
}

#[test]
fn table_diagonal_case() {
    let out = stdout(&["table", "--alpha", "0", "--beta", "1", "--nmax", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    for (n, row) in rows.iter().enumerate() {
        for (k, cell) in row.as_array().unwrap().iter().enumerate() {
            let expected = if k < n {
                "0"
            } else if n % 2 == 0 {
                "1"
            } else {
                "-1"
            };
            assert_eq!(cell, expected);
        }
    }
    assert_rationals(&v, &[]);
}

#[test]
fn poly_and_family() {
    let out = stdout(&["poly", "--alpha", "0", "--beta", "1", "--n", "4"]);
    assert_eq!(out.lines().next(), Some("0, 0, 0, 0, 1"));

    let out = stdout(&["family", "laguerre", "--lambda", "0", "--n", "2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "1, 2, 1/2");
    assert_eq!(lines[1], "(x^2 + 4x + 2)/2");
    assert!(lines[2].starts_with("note:"));

    let out = stdout(&["family", "u", "--n", "1", "--format", "csv"]);
    assert_eq!(out, "1/2, 1/2\n");
    let out = stdout(&["family", "assoc-lah", "--m", "1", "--n", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["0", "2", "1"]));
    assert_eq!(code(&["family", "assoc-lah", "--m", "0", "--n", "2"]), Some(2));
    assert_eq!(code(&["family", "laguerre", "--n", "2"]), Some(2));
}

#[test]
fn eval_matches_exact() {
    let out = stdout(&["eval", "--alpha", "0", "--beta", "-1", "--n", "2", "--x", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["exact"], "8");
    assert!((v["dobinski"].as_f64().unwrap() - 8.0).abs() < 1e-11);

    let out = stdout(&["eval", "--alpha", "3/2", "--beta", "2", "--n", "3", "--x", "0", "--format", "csv"]);
    // <-3/2>_3 = (-3/2)(-1/2)(1/2)
    assert!(out.lines().nth(1).unwrap().starts_with("3,0,3/8,"));
    assert_eq!(code(&["eval", "--alpha", "0", "--beta", "1", "--n", "1", "--x", "1", "--epsilon", "0"]), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["table", "--alpha", "1", "--beta", "0"]), Some(2));
    assert_eq!(code(&["table", "--alpha", "0.5", "--beta", "1"]), Some(2));
    assert_eq!(code(&["poly", "--alpha", "1", "--beta", "1/0", "--n", "2"]), Some(2));
    assert_eq!(code(&["verify", "--identity", "nope", "--alpha", "1", "--beta", "1"]), Some(2));
    assert_eq!(code(&["verify", "--identity", "t4", "--alpha", "1"]), Some(2));
    assert_eq!(code(&["verify", "--identity", "t4", "--alpha", "1", "--beta", "0"]), Some(2));
    assert_eq!(code(&["verify", "--identity", "rebase", "--alpha", "1", "--beta", "1"]), Some(2));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("genstirling-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = run(&["table", "--alpha", "0", "--beta", "-1", "--nmax", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "n,k,value\n0,0,1\n1,0,0\n1,1,1\n");
    std::fs::remove_dir_all(&dir).unwrap();

    let missing = "/nonexistent-dir/for/genstirling/out.csv";
    assert_eq!(code(&["table", "--alpha", "0", "--beta", "-1", "--output", missing]), Some(1));
}

#[test]
fn verify_identities() {
    let out = stdout(&["verify", "--identity", "t4", "--alpha", "-1/2", "--beta", "-1/2", "--nmax", "6"]);
    assert_eq!(out.lines().count(), 14);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));

    let out = stdout(&["verify", "--identity", "p5", "--alpha", "2", "--beta", "-3", "--nmax", "10"]);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));

    let out = stdout(&["verify", "--identity", "p4-lah", "--nmax", "6"]);
    assert!(out.lines().any(|l| l == "resolved sign: (-1)^j on the summation index j"));
    assert!(!out.contains("FAIL"));

    let out = stdout(&[
        "verify", "--identity", "composition", "--alpha", "1", "--beta", "-1", "--alpha2", "0", "--beta2", "-2",
        "--nmax", "6",
    ]);
    assert!(out.starts_with("PASS composition"));

    for id in ["t2", "p2", "p3", "c3", "c4", "lemma1"] {
        let out = stdout(&["verify", "--identity", id, "--alpha", "1/3", "--beta", "-2", "--nmax", "5"]);
        assert!(!out.contains("FAIL"), "{id}: {out}");
    }
}

#[test]
fn verify_reports_failures() {
    let out = run(&["verify", "--identity", "bell-operator", "--alpha", "1", "--beta", "2", "--lambda", "1/2", "--nmax", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "PASS bell-operator alpha=1 beta=2 lambda=1/2 n=0\n\
         FAIL bell-operator alpha=1 beta=2 lambda=1/2 n=1\n\
         FAIL bell-operator alpha=1 beta=2 lambda=1/2 n=2\n"
    );
    let out = stdout(&["verify", "--identity", "bell-operator", "--alpha", "0", "--beta", "1", "--lambda", "0", "--nmax", "6"]);
    assert!(!out.contains("FAIL"));
}

#[test]
fn zeros_report() {
    let out = stdout(&["zeros", "--alpha", "-1", "--beta", "-1", "--nmax", "10", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["region"], "A");
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 10);
    for r in results {
        assert_eq!(r["asserted"], true);
        assert_eq!(r["all_real"], true);
        assert_eq!(r["roots"].as_array().unwrap().len(), r["n"].as_u64().unwrap() as usize);
    }
    assert_rationals(&v, &["region"]);

    let out = stdout(&["zeros", "--alpha", "5/2", "--beta", "1", "--nmax", "5"]);
    assert!(out.starts_with("region: A-tilde\n"));
    assert!(out.contains("n=3 all_real=true asserted"));
    assert!(out.contains("n=4 all_real="));
    assert!(out.contains("not asserted"));

    let out = stdout(&["zeros", "--alpha", "-1/2", "--beta", "-3/2", "--nmax", "6", "--logconcave"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("newton") && l.ends_with("PASS")).count(), 5);
    assert_eq!(code(&["zeros", "--alpha", "1", "--beta", "-1", "--nmax", "4", "--logconcave"]), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["zeros", "--alpha", "1/3", "--beta", "-2", "--nmax", "8", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["table", "--alpha", "-3/2", "--beta", "1/2", "--nmax", "6", "--format", "json"];
    let out = stdout(&args);
    assert_eq!(out, stdout(&args));
    assert_rationals(&serde_json::from_str(&out).unwrap(), &[]);
}
