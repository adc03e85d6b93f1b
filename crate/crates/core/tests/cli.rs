use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::process::Command;

use admissible_zeta::cli::{OutputEnvelope, EXIT_DOMAIN, EXIT_USAGE};
use serde_json::Value;

fn admzeta(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_admzeta"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = admzeta(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn envelope(args: &[&str]) -> OutputEnvelope {
    serde_json::from_str(&ok(args)).expect("valid envelope")
}

/// `key=value` lines of the text reports.
fn fields(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn field(text: &str, key: &str) -> f64 {
    fields(text)[key].parse().unwrap()
}

fn is_perfect_power(m: u64) -> bool {
    (2..m).any(|b| {
        let mut p = b * b;
        while p < m {
            p *= b;
        }
        p == m
    })
}

#[test]
fn terms_listings() {
    assert_eq!(
        ok(&["terms", "--n", "12"]),
        "2\n3\n5\n6\n7\n10\n11\n12\nl=8\n"
    );
    assert_eq!(ok(&["terms", "--n", "2"]), "2\nl=1\n");

    let out = ok(&["terms", "--n", "20"]);
    let listed: Vec<u64> = out
        .lines()
        .filter(|l| !l.starts_with("l="))
        .map(|l| l.parse().unwrap())
        .collect();
    let expected: Vec<u64> = (2..=20).filter(|&m| !is_perfect_power(m)).collect();
    assert_eq!(listed, expected);
    assert_eq!(listed.len(), 15);
    assert!(out.ends_with("l=15\n"));
}

#[test]
fn terms_json_envelope() {
    let env = envelope(&["terms", "--n", "12", "--json"]);
    assert_eq!(env.schema_version, "1");
    assert_eq!(env.command, "terms");
    assert_eq!(env.parameters["n"], "12");
    assert_eq!(
        env.payload["members"],
        serde_json::json!([2, 3, 5, 6, 7, 10, 11, 12])
    );
    assert_eq!(env.payload["term_count"], 8);
    // round trip through the typed schema
    let again: OutputEnvelope =
        serde_json::from_str(&serde_json::to_string(&env).unwrap()).unwrap();
    assert_eq!(again, env);
}

#[test]
fn terms_rejects_small_n() {
    let (code, out, err) = admzeta(&["terms", "--n", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("error"));
}

#[test]
fn eval_direct_and_coth_at_two() {
    // 1 + 1/3 + 1/8 + 1/24 + 1/35
    let exact = 107.0 / 70.0;
    let direct = ok(&["eval", "--rep", "direct", "--z", "2,0", "--n", "6"]);
    let coth = ok(&["eval", "--rep", "coth", "--z", "2,0", "--n", "6"]);
    assert!((field(&direct, "value_re") - exact).abs() < 1e-15);
    assert!((field(&coth, "value_re") - exact).abs() < 1e-12);
    assert_eq!(field(&direct, "value_im"), 0.0);
    assert_eq!(fields(&direct)["term_count"], "4");
    // tail bound and reference error are reported for sigma > 1
    assert!(field(&direct, "reference_error") <= field(&direct, "tail_bound"));
}

#[test]
fn eval_bernoulli_matches_direct() {
    let series = ok(&[
        "eval",
        "--rep",
        "bernoulli",
        "--z",
        "0.5,0",
        "--n",
        "6",
        "--order",
        "40",
    ]);
    let direct = ok(&["eval", "--rep", "direct", "--z", "0.5,0", "--n", "6"]);
    assert!((field(&series, "value_re") - field(&direct, "value_re")).abs() < 1e-10);
    assert!(!fields(&direct).contains_key("tail_bound"));
}

#[test]
fn eval_json_round_trip() {
    let env = envelope(&["eval", "--rep", "alt", "--z", "2,1", "--n", "50", "--json"]);
    assert_eq!(env.command, "eval");
    assert_eq!(env.parameters["z"], "2,1");
    assert_eq!(env.parameters["order"], "40");
    let v = &env.payload["value"];
    assert!(v["re"].is_f64() && v["im"].is_f64());
    assert!(env.payload["reference_error"].as_f64().unwrap() < 1e-2);
}

#[test]
fn eval_errors() {
    let (code, _, err) = admzeta(&["eval", "--rep", "direct", "--z", "0,0", "--n", "6"]);
    assert_eq!(code, EXIT_DOMAIN, "{err}");
    let (code, _, _) = admzeta(&["eval", "--rep", "bernoulli", "--z", "5,0", "--n", "6"]);
    assert_eq!(code, EXIT_DOMAIN);
    let (code, _, _) = admzeta(&["eval", "--rep", "alt", "--z", "-1,0", "--n", "6"]);
    assert_eq!(code, EXIT_DOMAIN);
    let (code, _, _) = admzeta(&["eval", "--rep", "nope", "--z", "2,0", "--n", "6"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = admzeta(&["eval", "--rep", "direct", "--z", "2,0,1", "--n", "6"]);
    assert_eq!(code, EXIT_USAGE);
}

struct Row {
    n: u64,
    abs_error: Option<f64>,
    tail_bound: Option<f64>,
}

fn parse_csv(text: &str) -> Vec<Row> {
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,value_re,value_im,abs_error,tail_bound")
    );
    lines
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            assert_eq!(cols.len(), 5, "{l}");
            let opt = |s: &str| (!s.is_empty()).then(|| s.parse::<f64>().unwrap());
            Row {
                n: cols[0].parse().unwrap(),
                abs_error: opt(cols[3]),
                tail_bound: opt(cols[4]),
            }
        })
        .collect()
}

#[test]
fn converge_direct_respects_tail_bound() {
    let rows = parse_csv(&ok(&[
        "converge", "--rep", "direct", "--z", "2,0", "--n-max", "1000", "--step", "100",
    ]));
    assert_eq!(rows.len(), 10);
    assert_eq!(
        rows.iter().map(|r| r.n).collect::<Vec<_>>(),
        (1..=10).map(|k| 100 * k).collect::<Vec<_>>()
    );
    for r in &rows {
        assert!(r.abs_error.unwrap() <= r.tail_bound.unwrap());
    }
    for w in rows.windows(2) {
        assert!(w[1].abs_error.unwrap() <= w[0].abs_error.unwrap() + 1e-15);
    }
}

#[test]
fn converge_alternating_tends_to_zero() {
    let rows = parse_csv(&ok(&[
        "converge", "--rep", "alt", "--z", "2,0", "--n-max", "1000", "--step", "100",
    ]));
    let first = rows[0].abs_error.unwrap();
    let last = rows.last().unwrap().abs_error.unwrap();
    assert!(last < first);
    assert!(last < 1e-3);
}

#[test]
fn converge_without_bound_leaves_column_empty() {
    let text = ok(&[
        "converge", "--rep", "direct", "--z", "0.5,0", "--n-max", "300", "--step", "100",
    ]);
    let rows = parse_csv(&text);
    assert_eq!(rows.len(), 3);
    assert!(rows
        .iter()
        .all(|r| r.tail_bound.is_none() && r.abs_error.is_some()));
    assert!(text.lines().skip(1).all(|l| l.ends_with(',')));
}

#[test]
fn converge_csv_is_lossless() {
    let text = ok(&[
        "converge", "--rep", "coth", "--z", "3,0.25", "--n-max", "40", "--step", "20",
    ]);
    let line = text.lines().nth(1).unwrap();
    let value_re = line.split(',').nth(1).unwrap();
    // 17 significant digits, '.' separator, no grouping
    let mantissa = value_re.split('e').next().unwrap();
    assert_eq!(mantissa.chars().filter(|c| c.is_ascii_digit()).count(), 17);
    let parsed: f64 = value_re.parse().unwrap();
    assert_eq!(format!("{parsed:.16e}"), value_re);
}

fn roots(env: &OutputEnvelope) -> Vec<(f64, f64, bool)> {
    env.payload["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["re"].as_f64().unwrap(),
                r["im"].as_f64().unwrap(),
                r["verified"].as_bool().unwrap(),
            )
        })
        .collect()
}

#[test]
fn zeros_direct_two_is_empty() {
    let env = envelope(&[
        "zeros",
        "--preset",
        "paper-direct-2",
        "--region",
        "-5,5,-10,10",
    ]);
    assert_eq!(env.schema_version, "1");
    assert_eq!(env.payload["roots"], serde_json::json!([]));
    assert_eq!(env.payload["region_count"]["zeros"], 0);
    assert_eq!(env.parameters["preset"], "paper-direct-2");
    assert_eq!(env.parameters["region"], "-5,5,-10,10");
}

#[test]
fn zeros_direct_three() {
    let env = envelope(&[
        "zeros",
        "--preset",
        "paper-direct-3",
        "--region",
        "-2,2,-6,6",
    ]);
    let found = roots(&env);
    assert_eq!(found.len(), 2);
    for (k, &(re, im, verified)) in found.iter().enumerate() {
        assert!(verified);
        assert!(re.abs() <= 1e-4);
        assert!((im.abs() - 3.50671).abs() < 1e-4);
        assert_eq!(env.payload["roots"][k]["conjugate_of"], 1 - k);
    }
    assert!(found[0].1 < 0.0, "sorted by imaginary part");
    assert_eq!(
        env.payload["target"]["formula"],
        "1 + 1/(2^z-1) + 1/(3^z-1)"
    );
}

#[test]
fn zeros_alternating_three_real_root() {
    let env = envelope(&["zeros", "--preset", "paper-alt-3", "--region", "-2,2,-6,6"]);
    let real: Vec<f64> = roots(&env)
        .iter()
        .filter(|r| r.1 == 0.0)
        .map(|r| r.0)
        .collect();
    assert_eq!(real.len(), 1);
    // high-precision root of 1 - 1/(2^x-1) + 1/(3^x-1)
    assert!(
        (real[0] - 0.523_305_268_852_764).abs() < 1e-9,
        "{}",
        real[0]
    );
    assert!(roots(&env).iter().all(|r| r.2));
}

#[test]
fn zeros_custom_target_and_out_file() {
    let dir = std::env::temp_dir().join(format!("admzeta-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zeros.json");
    let path_str = path.to_str().unwrap();
    let out = ok(&[
        "zeros",
        "--rep",
        "alt",
        "--n",
        "5",
        "--constant",
        "0.5",
        "--region",
        "-2,2,-2,2",
        "--grid",
        "20",
        "--out",
        path_str,
    ]);
    assert!(out.is_empty());
    let env: OutputEnvelope =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(env.parameters["constant"], "0.5");
    assert_eq!(env.parameters["grid"], "20");
    let found = roots(&env);
    assert_eq!(found.len(), 2);
    assert!(found
        .iter()
        .all(|r| r.0.abs() < 1e-4 && (r.1.abs() - 0.719409).abs() < 1e-4));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn zeros_usage_errors() {
    for args in [
        &["zeros", "--preset", "paper-direct-3", "--region", "-2,2,-6"][..],
        &[
            "zeros",
            "--preset",
            "paper-direct-3",
            "--region",
            "2,-2,-6,6",
        ],
        &[
            "zeros",
            "--preset",
            "paper-direct-4",
            "--region",
            "-2,2,-6,6",
        ],
        &["zeros", "--region", "-2,2,-6,6"],
        &[
            "zeros",
            "--rep",
            "coth",
            "--n",
            "3",
            "--region",
            "-2,2,-6,6",
        ],
        &[
            "zeros",
            "--preset",
            "paper-direct-3",
            "--region",
            "-2,2,-6,6",
            "--threads",
            "0",
        ],
        &[
            "zeros",
            "--preset",
            "paper-direct-3",
            "--region",
            "-2,2,-6,6",
            "--tol",
            "-1",
        ],
    ] {
        let (code, _, err) = admzeta(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
    }
}

#[test]
fn special_values() {
    let even = ok(&["special", "--kind", "even", "--m", "1", "--n", "10000"]);
    assert_eq!(fields(&even)["argument"], "2");
    assert!((field(&even, "value") - 1.644934).abs() < 2e-4);
    assert!((field(&even, "euler") - PI * PI / 6.0).abs() < 1e-15);
    assert!(field(&even, "deviation") <= 2e-4);

    let odd = ok(&["special", "--kind", "odd", "--m", "1", "--n", "10000"]);
    assert_eq!(fields(&odd)["argument"], "3");
    assert!((field(&odd, "value") - 1.2020569032).abs() < 1e-7);
    assert!(!fields(&odd).contains_key("euler"));

    let any = ok(&["special", "--kind", "any", "--m", "2", "--n", "6"]);
    assert!((field(&any, "value") - 107.0 / 70.0).abs() < 1e-15);

    let env = envelope(&[
        "special", "--kind", "even", "--m", "3", "--n", "100", "--json",
    ]);
    assert_eq!(env.payload["argument"], 6);
    let euler = env.payload["euler"].as_f64().unwrap();
    assert!((euler - PI.powi(6) / 945.0).abs() < 1e-14);

    let (code, _, _) = admzeta(&["special", "--kind", "any", "--m", "1", "--n", "6"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = admzeta(&["special", "--kind", "sideways", "--m", "2", "--n", "6"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn commands_are_deterministic() {
    let args = [
        "zeros",
        "--preset",
        "paper-alt-6",
        "--region",
        "-2,2,-6,6",
        "--threads",
        "2",
    ];
    assert_eq!(ok(&args), ok(&args));
    let a: Value = serde_json::from_str(&ok(&[
        "eval", "--rep", "coth", "--z", "1.5,7", "--n", "30", "--json",
    ]))
    .unwrap();
    let b: Value = serde_json::from_str(&ok(&[
        "eval", "--rep", "coth", "--z", "1.5,7", "--n", "30", "--json",
    ]))
    .unwrap();
    assert_eq!(a, b);
}
