//! The binary's exit codes and output.

use std::process::{Command, Output};

fn polysum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polysum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn record(out: &Output) -> serde_json::Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "{text}");
    serde_json::from_str(&text).unwrap()
}

#[test]
fn decompose_exit_codes() {
    let ok = polysum(&[
        "decompose",
        "--m",
        "4",
        "--scheme",
        "1,1,1,1",
        "--n",
        "1792",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let r = record(&ok);
    assert_eq!(r["command"], "decompose");
    assert_eq!(r["method"], "constructive");
    let sum: u64 = r["result"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .sum();
    assert_eq!(sum, 1792);

    let below = polysum(&["decompose", "--m", "4", "--scheme", "1,1,1,1", "--n", "131"]);
    assert_eq!(below.status.code(), Some(0));
    assert_eq!(record(&below)["method"], "oracle");

    assert_eq!(
        polysum(&["decompose", "--m", "4", "--scheme", "1,1,1,1", "--n", "130"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        polysum(&["decompose", "--m", "4", "--scheme", "2,2,1,1", "--n", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        polysum(&["decompose", "--m", "4", "--n", "10"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn scan_outputs() {
    let out = polysum(&[
        "scan", "--m", "4", "--scheme", "1,1,2,2", "--domain", "natural", "--limit", "104191",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = record(&out);
    assert_eq!(r["result"]["exceptions"], serde_json::json!([22, 82, 100]));
    assert_eq!(r["result"]["largest_exception"], 100);

    let mut args = vec!["scan"];
    for _ in 0..3 {
        args.extend(["--slot", "4,1,natural"]);
    }
    args.extend(["--slot", "1,1,natural", "--limit", "100000"]);
    assert_eq!(
        record(&polysum(&args))["result"]["exceptions"],
        serde_json::json!([])
    );

    let zero = polysum(&["scan", "--m", "4", "--scheme", "1,1,1,1", "--limit", "0"]);
    assert_eq!(record(&zero)["result"]["exceptions"], serde_json::json!([]));

    assert_eq!(
        polysum(&[
            "scan",
            "--m",
            "4",
            "--scheme",
            "1,1,1,1",
            "--limit",
            "100000001"
        ])
        .status
        .code(),
        Some(4)
    );
    assert_eq!(
        polysum(&["scan", "--slot", "4,1,natural", "--limit", "10"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_reproducible() {
    let args = [
        "scan",
        "--m",
        "5",
        "--scheme",
        "1,1,2,4",
        "--limit",
        "50000",
        "--workers",
        "3",
    ];
    let a = polysum(&args);
    let b = polysum(&args);
    assert_eq!(a.stdout, b.stdout);
    let csv = polysum(&[
        "scan", "--m", "5", "--scheme", "1,1,2,4", "--limit", "50000", "--format", "csv",
    ]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "n\n17\n51\n");
}

#[test]
fn family_verdicts() {
    let out = polysum(&["family", "--theorem", "1.1ii", "--m", "4", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = record(&out);
    assert_eq!(r["result"]["member"], "20");
    assert_eq!(r["result"]["status"], "NonRepresentable");

    let out = polysum(&["family", "--theorem", "1.2ii", "--m", "6", "--k", "1"]);
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(record(&out)["result"]["status"], "Representable");

    assert_eq!(
        polysum(&["family", "--theorem", "1.1ii", "--m", "6", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn checks() {
    assert_eq!(
        polysum(&["identity", "--which", "3.5", "--trials", "1000", "--seed", "42"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        polysum(&["identity", "--which", "3.6", "--trials", "1000", "--seed", "1"])
            .status
            .code(),
        Some(0)
    );

    let r4 = polysum(&["r4", "--n", "4", "--check"]);
    assert_eq!(r4.status.code(), Some(0));
    let r = record(&r4);
    assert_eq!(
        (
            r["result"]["formula"].as_u64(),
            r["result"]["agree"].as_bool()
        ),
        (Some(24), Some(true))
    );

    let t = polysum(&["ternary", "--form", "1,2,4", "--n", "14"]);
    assert_eq!(t.status.code(), Some(0));
    assert_eq!(record(&t)["result"]["status"], "excluded");
    assert_eq!(
        polysum(&["ternary", "--form", "1,2,3", "--n", "14"])
            .status
            .code(),
        Some(2)
    );

    let v = polysum(&[
        "verify-range",
        "--m",
        "5",
        "--scheme",
        "1,1,1,3",
        "--count",
        "2000",
    ]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(record(&v)["result"]["all_verified"], true);
    assert_eq!(
        polysum(&[
            "verify-range",
            "--m",
            "6",
            "--scheme",
            "1,1,1,1",
            "--count",
            "5"
        ])
        .status
        .code(),
        Some(2)
    );
}
