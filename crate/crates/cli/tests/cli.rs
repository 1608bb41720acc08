use std::fs;
use std::process::{Command, Output};

use bcml::bicomplex::parse_bicomplex;
use bcml::Bicomplex;
use serde_json::Value;

fn bcml(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcml"))
        .args(args)
        .output()
        .expect("bcml runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn close(a: Bicomplex, b: Bicomplex, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

#[test]
fn eval_exponential_at_hyperbolic_point() {
    let o = bcml(&["eval", "--ml", "--alpha", "1", "--xi", "1 + 1 j", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let got: Vec<f64> = serde_json::from_value(v["value"].clone()).unwrap();
    // e^{1+j} = e (cosh 1 + j sinh 1)
    let e = 1f64.exp();
    let want = [e * 1f64.cosh(), 0.0, 0.0, e * 1f64.sinh()];
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() < 1e-13, "{got:?}");
    }
}

#[test]
fn printed_values_round_trip() {
    let o = bcml(&["eval", "--ml", "--alpha", "0.8 + 0.1 j", "--xi", "0.3 - 0.7 i1 + 0.2 i2 + 0.5 j"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let cart = text.lines().find_map(|l| l.strip_prefix("value      = ")).unwrap();
    let idem = text.lines().find_map(|l| l.strip_prefix("idempotent = ")).unwrap();
    let a = parse_bicomplex(cart).unwrap();
    let b = parse_bicomplex(idem).unwrap();
    assert!(close(a, b, 1e-14), "{a:?} vs {b:?}");

    let j = json(&bcml(&[
        "eval", "--ml", "--alpha", "0.8 + 0.1 j", "--xi", "0.3 - 0.7 i1 + 0.2 i2 + 0.5 j", "--format", "json",
    ]));
    let x: Vec<f64> = serde_json::from_value(j["value"].clone()).unwrap();
    assert_eq!(Bicomplex::new(x[0], x[1], x[2], x[3]), a);
}

#[test]
fn eval_gamma_and_algorithms() {
    let v = json(&bcml(&["eval", "--gamma", "--xi", "3", "--format", "json"]));
    assert_eq!(v["value"][0].as_f64(), Some(2.0));
    let v = json(&bcml(&[
        "eval", "--gamma", "--xi", "2.5 + 0.3 i1", "--algorithm", "integral", "--format", "json",
    ]));
    let l = json(&bcml(&["eval", "--gamma", "--xi", "2.5 + 0.3 i1", "--format", "json"]));
    for k in 0..4 {
        let (a, b) = (v["value"][k].as_f64().unwrap(), l["value"][k].as_f64().unwrap());
        assert!((a - b).abs() < 1e-9, "{a} {b}");
    }
}

#[test]
fn csv_output_has_header() {
    let o = bcml(&["eval", "--special", "2cosh", "--xi", "0.5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().contains("x0"));
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn exit_codes() {
    let o = bcml(&["eval", "--ml", "--alpha", "-1", "--xi", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("DomainAlpha"));
    assert_eq!(bcml(&["eval", "--ml", "--alpha", "1", "--xi", "1 + * j"]).status.code(), Some(2));
    assert_eq!(bcml(&["eval", "--xi", "1"]).status.code(), Some(2));
    assert_eq!(bcml(&["eval", "--ml", "--gamma", "--xi", "1"]).status.code(), Some(2));
    assert_eq!(bcml(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bcml(&["eval", "--gamma", "--xi", "-2"]).status.code(), Some(3));
    assert_eq!(bcml(&["verify", "--only", "nope"]).status.code(), Some(3));
    assert_eq!(bcml(&["eval", "--gamma", "--xi", "1", "--out", "/nonexistent/dir/x"]).status.code(), Some(4));
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = bcml(&["verify", "--seed", "42", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let (x, y) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(x, y);
    let v: Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["failed"], 0);
    let sections = v["sections"].as_array().unwrap();
    assert!(sections.len() >= 9);
    for s in sections {
        assert!(s["identity"].is_string());
        for r in s["reports"].as_array().unwrap() {
            for key in ["identity", "point", "lhs", "rhs", "abs_residual", "rel_residual", "tolerance", "pass"] {
                assert!(r.get(key).is_some(), "missing {key}");
            }
        }
    }
}

#[test]
fn verify_subsets() {
    let o = bcml(&["verify", "--only", "duplication", "--tol", "1e-3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["sections"].as_array().unwrap().len(), 1);
    for r in v["sections"][0]["reports"].as_array().unwrap() {
        assert_eq!(r["tolerance"].as_f64(), Some(1e-3));
    }

    // The verbatim recurrence is reported but never gates the exit code.
    let o = bcml(&["verify", "--only", "paper-recurrence"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let s = &v["sections"][0];
    let verbatim: Vec<&Value> = s["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["identity"].as_str().unwrap().starts_with("paper-recurrence"))
        .collect();
    assert!(!verbatim.is_empty());
    assert!(verbatim.iter().all(|r| r["tolerance"].is_null() && r["pass"].is_null()));

    assert_eq!(bcml(&["verify", "--only", "duplication", "--tol", "1e-30"]).status.code(), Some(1));
}

#[test]
fn growth_sweep_slope() {
    let o = bcml(&["sweep", "--growth", "--alpha", "1", "--radii", "5,10,20"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        rdr.headers().unwrap().iter().collect::<Vec<_>>(),
        ["alpha", "r", "max_abs", "log_log_max", "slope"]
    );
    let last = rdr.records().last().unwrap().unwrap();
    assert_eq!(&last[1], "20.0");
    let slope: f64 = last[4].parse().unwrap();
    assert!((slope - 1.0).abs() <= 0.2, "slope {slope}");
}

#[test]
fn special_sweep_matches_cosine() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cos.csv");
    let o = bcml(&[
        "sweep", "--special", "2cos", "--grid", "x0=0:3.141592653589793:33", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(&out).unwrap();
    let h = rdr.headers().unwrap().clone();
    let col = |n: &str| h.iter().position(|c| c == n).unwrap();
    let (x0, v0, v3) = (col("x0"), col("v0"), col("v3"));
    let mut n = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let x: f64 = rec[x0].parse().unwrap();
        let v: f64 = rec[v0].parse().unwrap();
        assert!((v - x.cos()).abs() < 1e-11, "{x}: {v}");
        assert_eq!(&rec[v3], "0.0");
        n += 1;
    }
    assert_eq!(n, 33);
}

#[test]
fn sweep_grid_shapes() {
    let o = bcml(&["sweep", "--ml", "--alpha", "1", "--grid", "x0=0:1:0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);

    let o = bcml(&["sweep", "--ml", "--alpha", "1", "--grid", "x0=0:1:3,x3=-1:1:2", "--format", "json"]);
    let v = json(&o);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    // x0 varies slowest
    assert_eq!(rows[0][0].as_f64(), Some(0.0));
    assert_eq!(rows[1][0].as_f64(), Some(0.0));
    assert_eq!(rows[1][3].as_f64(), Some(1.0));

    assert_eq!(bcml(&["sweep", "--ml", "--alpha", "1", "--grid", "x9=1"]).status.code(), Some(2));
}

#[test]
fn sweep_records_errors_in_row() {
    let o = bcml(&["sweep", "--gamma", "--grid", "x0=-2:0:3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let errors: Vec<String> = rdr.records().map(|r| r.unwrap()[18].to_string()).collect();
    assert_eq!(errors.len(), 3);
    assert!(errors.iter().all(|e| !e.is_empty()), "{errors:?}");
}

#[test]
fn series_subcommand() {
    let v = json(&bcml(&["series", "--p", "2", "--terms", "4"]));
    let c: Vec<[f64; 2]> = serde_json::from_value(v["coeffs"].clone()).unwrap();
    let want = [1.0, 0.5, 1.0 / 24.0, 1.0 / 720.0, 1.0 / 40320.0];
    assert_eq!(c.len(), want.len());
    for (a, b) in c.iter().zip(want) {
        assert!((a[0] - b).abs() < 1e-16 && a[1] == 0.0);
    }
    let d = json(&bcml(&["series", "--p", "1", "--q", "2", "--terms", "6", "--differentiate", "2"]));
    assert!(d["coeffs"].is_array());
    assert_eq!(bcml(&["series", "--p", "0"]).status.code(), Some(3));
}
