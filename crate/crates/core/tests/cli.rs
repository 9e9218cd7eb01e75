use std::fs;
use std::process::Command;

use fracsde::problem::{example_problem, zero_problem, Coefficient};

fn fracsde(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_fracsde")).args(args).env_remove("FRACSDE_SEED").output().unwrap()
}

fn write(dir: &std::path::Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let out = out.to_str().unwrap();

    let mut zero = zero_problem(2);
    zero.criterion.a2 = Some(1.0);
    let z = write(dir.path(), "zero.json", &zero.to_json().unwrap());
    assert_eq!(fracsde(&["check", "--config", &z, "--samples", "5", "--out", out]).status.code(), Some(0));

    let mut big = example_problem();
    big.coefficients.a_hat[2] = 1000.0;
    let b = write(dir.path(), "big.json", &big.to_json().unwrap());
    assert_eq!(fracsde(&["check", "--config", &b, "--samples", "5", "--out", out]).status.code(), Some(2));

    let bad = write(dir.path(), "bad.json", "{ \"alpha\": ");
    let o = fracsde(&["check", "--config", &bad, "--out", out]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    let mut wild = zero_problem(1);
    wild.coefficients.g = Coefficient::Linear { scale: 3.0, rate: 0.0, lag: 0.0, smoothing: 0.5 };
    wild.coefficients.a_hat[0] = 3.0;
    let w = write(dir.path(), "wild.json", &wild.to_json().unwrap());
    let o = fracsde(&["picard", "--config", &w, "--dt", "0.05", "--max-iter", "30", "--out", out]);
    assert_eq!(o.status.code(), Some(3));
    let residuals = fs::read_to_string(dir.path().join("out/residuals.csv")).unwrap();
    assert!(residuals.starts_with("iteration,residual\n"));
    assert_eq!(residuals.lines().count(), 31);
}

#[test]
fn simulate_is_reproducible_and_seed_env_applies() {
    let dir = tempfile::tempdir().unwrap();
    let run = |sub: &str, seed_env: Option<&str>| {
        let out = dir.path().join(sub);
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_fracsde"));
        cmd.args(["simulate", "--config", "builtin:damped", "--paths", "4", "--dt", "0.05", "--out"]).arg(&out);
        cmd.env_remove("FRACSDE_SEED");
        if let Some(s) = seed_env {
            cmd.env("FRACSDE_SEED", s);
        }
        assert!(cmd.output().unwrap().status.success());
        fs::read(out.join("moment.csv")).unwrap()
    };
    let a = run("a", None);
    let b = run("b", None);
    let c = run("c", Some("77"));
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert!(String::from_utf8_lossy(&a).starts_with("t,mean,ci_low,ci_high\n"));
}

#[test]
fn fit_reads_curve_files() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("t,mean,ci_low,ci_high\n");
    for i in 0..20 {
        let t = 0.1 * i as f64;
        let v = 3.0 * (-2.0 * t).exp();
        text.push_str(&format!("{t},{v},{v},{v}\n"));
    }
    let curve = write(dir.path(), "curve.csv", &text);
    let out = dir.path().join("o");
    let o = fracsde(&["fit", "--curve", &curve, "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let fit: serde_json::Value = serde_json::from_slice(&fs::read(out.join("fit.json")).unwrap()).unwrap();
    assert!((fit["mu_hat"].as_f64().unwrap() - 2.0).abs() < 1e-10);

    let flat = write(dir.path(), "flat.csv", "t,mean\n0,1\n1,1\n2,1\n");
    let o = fracsde(&["fit", "--curve", &flat, "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let fit: serde_json::Value = serde_json::from_slice(&fs::read(out.join("fit.json")).unwrap()).unwrap();
    assert_eq!(fit["mu_hat"].as_f64().unwrap(), 0.0);

    let broken = write(dir.path(), "broken.csv", "time,mean\n0,1\n");
    let o = fracsde(&["fit", "--curve", &broken, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("'t'"));
}
