use std::path::Path;
use std::process::{Command, Output};

use degdist::io::parse_rational;
use degdist::phenylene::phe6;
use degdist::Rational;
use serde_json::Value;

fn degdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn compute_path_with_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.txt", "0 1\n1 2\n");
    let out = degdist(&["compute", &p3, "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("DD = 10"), "{text}");
    assert!(text.contains("Gut = 6"), "{text}");
}

#[test]
fn compute_phe6_by_trees() {
    let dir = tempfile::tempdir().unwrap();
    let cells = write(dir.path(), "phe6.txt", &phe6().to_text());
    let out = degdist(&["compute", "--cells", &cells, "--method", "trees", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["values"]["degree_distance"], 18384);
    assert_eq!(v["values"]["gutman"], 22856);
    let lines = v["breakdown"].as_array().unwrap();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[3]["terms"]["DD"], 5784);
    assert_eq!(lines[3]["terms"]["Gut"], 7252);
}

#[test]
fn compute_house_by_hamming() {
    let out = degdist(&[
        "compute", "--family", "house", "--n", "5", "--method", "hamming", "--check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Gut = 956"), "{text}");
    assert!(text.contains("oracle agrees"), "{text}");
}

#[test]
fn json_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let weights = write(dir.path(), "w.txt", "0 1/2 3\n1 2\n2 3\n3 4 2/3\n4 5\n");
    let out = degdist(&[
        "compute",
        &c5,
        "--weights",
        &weights,
        "--method",
        "cuts",
        "--check",
        "--json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    let values = &v["values"];
    assert!(values["wiener"].is_i64());
    assert_eq!(values["wiener"], 15);
    assert_eq!(values["degree_distance"], 60);
    // every number is an integer or an exact "p/q" string
    let w = &values["weighted"];
    for key in ["wiener_weighted", "wiener_plus", "wiener_double"] {
        let x = &w[key];
        assert!(
            x.is_i64() || x.as_str().is_some_and(|s| s.contains('/')),
            "{key}: {x}"
        );
    }
    assert_eq!(v["check"]["agrees"], true);
    assert_eq!(v["check"]["oracle"], *values);
    // W(C5, a) with a = (1/2, 2, 3, 4, 5): adjacent pairs at distance 1, others at 2
    let a = [Rational::new(1, 2), 2.into(), 3.into(), 4.into(), 5.into()];
    let mut expected = Rational::from_integer(0);
    for u in 0..5 {
        for v in u + 1..5 {
            let d = if v - u == 1 || v - u == 4 { 1 } else { 2 };
            expected += a[u] * a[v] * Rational::from_integer(d);
        }
    }
    let got = parse_rational(w["wiener_weighted"].as_str().unwrap()).unwrap();
    assert_eq!(got, expected);
}

#[test]
fn classes_and_quotients() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let out = degdist(&["classes", &c6, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], 3);

    let c5 = write(dir.path(), "c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = degdist(&["quotient", &c5, "--class", "0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"], 5);
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_random_graphs() {
    let out = degdist(&["verify", "--random", "100", "--max-n", "40", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("0 failures"));
}

#[test]
fn verify_single_inputs() {
    let out = degdist(&["verify", "--chain", "5", "--kinks", "+L-"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("squeeze"));
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn reduce_and_hamming_reports() {
    let out = degdist(&["reduce", "--family", "star", "--n", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["double"], 24);
    assert_eq!(v["single"], 15);
    assert_eq!(v["steps"][0]["relation"], "R");

    let out = degdist(&["hamming", "--family", "cycle", "--n", "5", "--json"]);
    let v = json(&out);
    assert_eq!(v["partial_hamming"], false);
    assert_eq!(v["bound"], 40);
    assert_eq!(v["gap"], 20);
}

#[test]
fn generate_round_trips_through_compute() {
    let dir = tempfile::tempdir().unwrap();
    let out = degdist(&["generate", "--family", "hypercube", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let q3 = write(dir.path(), "q3.txt", &stdout(&out));
    let out = degdist(&["compute", &q3, "--method", "oracle", "--json"]);
    assert_eq!(json(&out)["edges"], 12);

    let out = degdist(&[
        "generate",
        "phenylene",
        "--chain",
        "4",
        "--kinks",
        "L+",
        "--placement",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let cells = write(dir.path(), "chain.txt", &stdout(&out));
    let out = degdist(&["compute", "--cells", &cells, "--json"]);
    assert_eq!(json(&out)["method"], "trees");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(degdist(&["compute", "--bogus"]).status.code(), Some(1));
    assert_eq!(degdist(&["compute"]).status.code(), Some(1));
    let bad = write(dir.path(), "bad.txt", "0 1\n1 x\n");
    let out = degdist(&["compute", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let c5 = write(dir.path(), "c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(
        degdist(&["compute", &c5, "--method", "trees"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        degdist(&["compute", &c5, "--method", "hamming"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(degdist(&["--help"]).status.code(), Some(0));
}
