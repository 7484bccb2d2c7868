use std::process::{Command, Output};

use serde_json::Value;

fn kronecker(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronecker"))
        .args(args)
        .env_remove("KRONECKER_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn roots_height_four() {
    let out = kronecker(&["roots", "--ell", "3", "--max-height", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["real_roots"], serde_json::json!([[0, 1], [1, 0], [1, 3], [3, 1]]));
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        kronecker(&["roots", "--ell", "3", "--max-height", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(kronecker(&["frame", "--ell", "2"]).status.code(), Some(2));
    assert_eq!(
        kronecker(&["verify", "--ell", "3", "--samples", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kronecker(&["verify", "--ell", "3", "--fd-step", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kronecker(&["eval", "--ell", "3", "--chart", "q", "--point", "0,0", "--what", "tensors"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kronecker(&["eval", "--ell", "3", "--chart", "s", "--point", "zz,0", "--what", "tensors"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn frame_constants() {
    let v = json(&kronecker(&["frame", "--ell", "3"]));
    assert_eq!(v["cartan_matrix"], serde_json::json!([[2, -3], [-3, 2]]));
    let h = v["h"]["im"].as_f64().unwrap();
    assert!((h - 2.0 * std::f64::consts::PI / v["log_rho"].as_f64().unwrap()).abs() < 1e-12);
    assert_eq!(v["h"]["re"].as_f64().unwrap(), 0.0);
}

#[test]
fn eval_domain_error_exits_three() {
    let out = kronecker(&[
        "eval", "--ell", "3", "--chart", "s", "--point", "1i,0", "--what", "periods",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("branch cut"));
    let out = kronecker(&[
        "eval",
        "--ell",
        "3",
        "--chart",
        "t",
        "--point",
        "1,0",
        "--what",
        "potential",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = kronecker(&[
        "eval", "--ell", "3", "--chart", "x", "--point", "1,-1", "--what", "tensors",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn eval_discriminant_and_tensors() {
    let v = json(&kronecker(&[
        "eval",
        "--ell",
        "3",
        "--chart",
        "s",
        "--point",
        "2i,0",
        "--what",
        "discriminant",
    ]));
    let d = &v["result"]["s"];
    assert!(d["re"].as_f64().unwrap().abs() < 1e-12 && d["im"].as_f64().unwrap().abs() < 1e-12);
    let v = json(&kronecker(&[
        "eval", "--ell", "3", "--chart", "s", "--point", "0,0", "--what", "tensors",
    ]));
    assert_eq!(v["result"]["g"]["chart"], "s");
    assert_eq!(v["result"]["g"]["matrix"][1][1]["re"].as_f64(), Some(-2.0));
    let v = json(&kronecker(&[
        "eval", "--ell", "3", "--chart", "s", "--point", "1,0", "--what", "periods",
    ]));
    assert!((v["result"]["flat_function"]["re"].as_f64().unwrap() + 2.0).abs() < 1e-12);
}

#[test]
fn verify_is_deterministic_and_byte_identical() {
    let args = [
        "verify",
        "--ell",
        "3",
        "--samples",
        "50",
        "--seed",
        "7",
        "--suite",
        "axioms",
    ];
    let a = kronecker(&args);
    let b = kronecker(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["pass"], true);
    assert_eq!(v["seed"], 7);
}

#[test]
fn seed_falls_back_to_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_kronecker"))
        .args(["verify", "--ell", "3", "--samples", "5", "--suite", "axioms"])
        .env("KRONECKER_SEED", "1234")
        .output()
        .unwrap();
    assert_eq!(json(&out)["seed"], 1234);
}

#[test]
fn verify_monodromy_matrices() {
    let out = kronecker(&["verify", "--ell", "3", "--samples", "20", "--suite", "monodromy"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let nu = (3.0 + 5f64.sqrt()) / 2.0;
    let m1 = &v["monodromy"]["m1"];
    assert!((m1[0][1]["re"].as_f64().unwrap() - nu).abs() < 1e-5);
    assert!((m1[1][0]["re"].as_f64().unwrap() - 1.0 / nu).abs() < 1e-5);
    let m2 = &v["monodromy"]["m2"];
    assert!((m2[0][1]["re"].as_f64().unwrap() - 1.0 / nu).abs() < 1e-5);
    assert!((m2[1][0]["re"].as_f64().unwrap() - nu).abs() < 1e-5);
}

#[test]
fn failing_verification_exits_one() {
    let out = kronecker(&[
        "verify",
        "--ell",
        "3",
        "--samples",
        "5",
        "--suite",
        "dubrovin",
        "--tol",
        "eta_lie_fd=0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_format_is_plain_text() {
    let out = kronecker(&["--format", "table", "frame", "--ell", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cartan_matrix[0][1]"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
