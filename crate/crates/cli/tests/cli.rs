use std::process::{Command, Output};

use serde_json::Value;

fn radii(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radii"))
        .args(args)
        .env_remove("RADII_SEED")
        .output()
        .expect("spawn radii")
}

fn json_lines(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

#[test]
fn radius_record_round_trips() {
    let o = radii(&[
        "radius", "--family", "wright", "--rho", "1", "--beta", "1", "--form", "g",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 1);
    let r = &recs[0];
    assert_eq!(r["schema"], 1);
    assert_eq!(r["family"], "wright");
    assert_eq!(r["problem"], "starlike");
    assert_eq!(r["derivation"], "theorem");
    let radius = r["radius"].as_f64().unwrap();
    let bracket = r["bracket"].as_array().unwrap();
    assert!(bracket[0].as_f64().unwrap() < radius && radius < bracket[1].as_f64().unwrap());
    assert!(r["residual"].as_f64().unwrap().abs() <= 1e-12);
    let again: Value = serde_json::from_str(&r.to_string()).unwrap();
    assert_eq!(&again, r);
}

#[test]
fn alpha_for_sine_domain() {
    let o = radii(&["alpha", "--domain", "sine"]);
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert!((r["closed_form"].as_f64().unwrap() - 1f64.sin()).abs() < 1e-15);
    assert!(r["difference"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn exponential_alpha_warns() {
    let o = radii(&["alpha", "--domain", "exponential"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let r = &json_lines(&o)[0];
    assert!((r["closed_form"].as_f64().unwrap() - (1.0 - (-1f64).exp())).abs() < 1e-15);
    assert!((r["printed"].as_f64().unwrap() - (1f64.exp() - 1.0)).abs() < 1e-15);
}

#[test]
fn legendre_zero_as_csv() {
    let o = radii(&[
        "--format", "csv", "zeros", "--family", "legendre", "--n", "2", "--count", "1",
    ]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        ["family", "params", "kind", "n", "zero", "residual"]
    );
    let rows: Vec<_> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 1);
    let z: f64 = rows[0][4].parse().unwrap();
    assert!((z - 0.7745966692).abs() < 1e-10);
}

#[test]
fn bad_parameters_exit_with_two() {
    for args in [
        vec!["radius", "--family", "wright", "--rho", "1"],
        vec![
            "radius",
            "--family",
            "lommel",
            "--u",
            "0.3",
            "--problem",
            "starlike",
            "--alpha",
            "1.5",
        ],
        vec![
            "radius",
            "--family",
            "struve",
            "--beta",
            "0.3",
            "--problem",
            "strongly-starlike",
            "--epsilon",
            "0",
        ],
        vec!["radius", "--family", "nope"],
        vec!["verify"],
    ] {
        let o = radii(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn computation_error_exits_with_one() {
    let o = radii(&[
        "radius",
        "--family",
        "ml",
        "--mu",
        "1.5",
        "--nu",
        "1",
        "--a",
        "1",
        "--problem",
        "strongly-starlike",
        "--epsilon",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sweep_is_increasing() {
    let o = radii(&[
        "sweep",
        "--family",
        "lommel",
        "--u",
        "0.3",
        "--form",
        "g",
        "--problem",
        "convex",
    ]);
    assert!(o.status.success());
    let radii: Vec<f64> = json_lines(&o)
        .iter()
        .map(|r| r["radius"].as_f64().unwrap())
        .collect();
    assert_eq!(radii.len(), 10);
    assert!(radii.windows(2).all(|w| w[0] < w[1]), "{radii:?}");
}

#[test]
fn verify_protocol_and_inequalities() {
    let o = radii(&[
        "verify",
        "--family",
        "struve",
        "--beta",
        "0.3",
        "--form",
        "V",
        "--problem",
        "starlike",
        "--domain",
        "lemniscate",
        "--inequalities",
        "500",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let recs = json_lines(&o);
    let checks: Vec<&str> = recs.iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert_eq!(&checks[..2], ["disk_lemma", "lambda_inequality"]);
    assert!(checks.contains(&"inner") && checks.contains(&"sharpness"));
    for r in &recs {
        let check = r["check"].as_str().unwrap();
        if !check.starts_with("outer_") {
            assert_eq!(r["passed"], true, "{check}");
        }
    }
}

#[test]
fn out_file_receives_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("radii.jsonl");
    let o = radii(&[
        "--out",
        path.to_str().unwrap(),
        "radius",
        "--family",
        "legendre",
        "--n",
        "2",
        "--problem",
        "convex",
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let r: Value = serde_json::from_str(text.trim()).unwrap();
    assert!((r["radius"].as_f64().unwrap() - 1.0 / 15f64.sqrt()).abs() < 1e-10);
}
