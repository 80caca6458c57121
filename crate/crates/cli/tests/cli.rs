//! End-to-end tests of the `opendoor` binary: flags, formats, exit codes
//! and the shape of every emitted document.

use std::path::Path;
use std::process::{Command, Output};

fn opendoor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opendoor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = opendoor(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8")
}

fn exit_code(args: &[&str]) -> i32 {
    opendoor(args).status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["table1", "--help"]), 0);
    assert_eq!(exit_code(&["no-such-command"]), 1);
    assert_eq!(exit_code(&["table1", "--bogus-flag"]), 1);
    assert_eq!(exit_code(&["table1", "--format", "json"]), 1);
    assert_eq!(exit_code(&["eval", "--c", "2", "--z-re", "0.5", "--format", "csv"]), 1);
    // usage-level parameter problems
    assert_eq!(exit_code(&["eval", "--c", "-1", "--z-re", "0.3"]), 1);
    assert_eq!(exit_code(&["table1", "--n-max", "0"]), 1);
    // computation failure: evaluation at the singular point
    assert_eq!(exit_code(&["eval", "--c", "2", "--z-re", "1.0"]), 2);
}

#[test]
fn coeffs_json_shape() {
    let text = stdout(&["coeffs", "--n-max", "7"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n_max"], 7);
    assert_eq!(v["b"].as_array().unwrap().len(), 8);
    assert_eq!(v["b"][1][1], "1/2");
}

#[test]
fn eval_json_value() {
    let text = stdout(&["eval", "--c", "2", "--z-re", "0.3"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let q = v["q"].as_array().unwrap();
    // 30-digit reference for q_2(0.3)
    assert!((q[0].as_f64().unwrap() - 1.335_663_789_676_194_2).abs() < 1e-10);
    assert!(q[1].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn table1_matches_reference_rows() {
    let reference = [
        (1, 4.00000000),
        (2, 3.46410162),
        (3, 3.36499696),
        (4, 3.33586037),
        (5, 3.21295295),
        (6, 3.17351296),
        (7, 3.17032183),
        (8, 3.13275982),
        (9, 3.11076636),
        (10, 3.10609706),
    ];
    let text = stdout(&["table1", "--n-max", "10", "--tol", "1e-8"]);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines[0], "n,rho_n,gamma_n,delta_gamma_n");
    assert_eq!(lines.len(), 11);
    for (line, (n, rho)) in lines[1..].iter().zip(reference) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], n.to_string());
        let got: f64 = fields[1].parse().unwrap();
        assert!((got - rho).abs() < 1e-6, "row {n}: {got} vs {rho}");
    }
}

#[test]
fn find_c0_bracket() {
    let text = stdout(&["find-c0", "--tol", "1e-6"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let c0 = v["c0"].as_f64().unwrap();
    assert!((3.02756..=3.02757).contains(&c0), "c0 = {c0}");
    let gamma = v["gamma_star"].as_f64().unwrap();
    assert!((gamma - std::f64::consts::PI * c0 / 4.0).abs() < 1e-12);
    let bracket = v["bracket"].as_array().unwrap();
    let (lo, hi) = (bracket[0].as_f64().unwrap(), bracket[1].as_f64().unwrap());
    assert!(lo < c0 && c0 < hi && hi - lo <= 1e-6);
}

#[test]
fn trace_writes_to_file() {
    let dir = std::env::temp_dir().join("opendoor-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trace.csv");
    let out = opendoor(&["trace", "--c", "1.5", "--m", "32", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("theta,R,Theta,beta,re,im\n"));
    assert_eq!(text.trim_end().lines().count(), 33);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn plots_are_wellformed_and_deterministic() {
    for args in [
        vec!["plot", "--kind", "boundary", "--c", "3.0276", "--m", "48"],
        vec!["plot", "--kind", "f-graph", "--samples", "24", "--c-min", "2.5", "--c-max", "3.5"],
    ] {
        let a = stdout(&args);
        let b = stdout(&args);
        assert_eq!(a, b, "deterministic output for {args:?}");
        assert!(a.starts_with("<svg"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert!(a.contains("<polyline"));
    }
}

#[test]
fn gamma_curves_plot_has_three_styles() {
    let text = stdout(&["plot", "--kind", "gamma-curves", "--grid", "16", "--tol", "1e-3"]);
    assert_eq!(text.matches("<polyline").count(), 3);
    assert!(text.contains("stroke-dasharray=\"7,4\""));
    assert!(text.contains("stroke-dasharray=\"1.5,3.5\""));
}

#[test]
fn bounds_csv_orders_columns() {
    let text = stdout(&["bounds", "--grid", "16", "--tol", "1e-3"]);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines[0], "alpha,lower,gamma,upper");
    assert_eq!(lines.len(), 17);
    for line in &lines[1..] {
        let f: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert!(f[1] < f[2] && f[2] < f[3], "{line}");
    }
}

#[test]
fn out_write_failure_is_a_computation_error() {
    let bad = Path::new("/nonexistent-dir-xyz/out.csv");
    let out = opendoor(&["table1", "--n-max", "2", "--out", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
