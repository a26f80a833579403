use std::io::Write;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsp4-zeta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("gsp4-zeta-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn cosets_p2_machine() {
    let o = bin(&["verify-cosets", "--p", "2", "--trials", "10", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let first: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(first["name"], "cosets/audit/p=2");
    assert_eq!(first["status"], "pass");
    assert!(first["witness"].as_str().unwrap().starts_with("45 cosets"));
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v.as_object().unwrap().len(), 3);
    }
}

#[test]
fn local_deterministic() {
    let args = ["verify-local", "--seed", "9", "--trials", "3", "--order", "10", "--format", "machine"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = bin(&["verify-local", "--seed", "10", "--trials", "3", "--order", "10", "--format", "machine"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn lfactor_prints_closed_form() {
    let o = bin(&["lfactor"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(1/15)(1 - 1/8*t^2)/(1 - 1/2*t)^4"));
}

#[test]
fn mismatch_exits_one() {
    let o = bin(&["verify-arch", "--tol", "1e-300", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"status\":\"fail\""));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(bin(&["verify-local", "--order", "5"]).status.code(), Some(2));
    assert_eq!(bin(&["verify-local", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["global"]).status.code(), Some(2));
    let path = temp_file("bad.json", "{\n  \"local_scenarios\": [\n    {\"q\": 2,,}\n  ]\n}");
    let o = bin(&["verify-local", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
    std::fs::remove_file(path).ok();
}

#[test]
fn input_scenarios_are_checked() {
    let body = r#"{"local_scenarios": [{"q": 3, "symbol": "ramified", "lambda": {"piL": "3/2"},
        "satake": {"u0": "1/2", "u1": "3", "u2": "3"}, "omega": "-1"}],
      "global_input": {"l": 12, "D": 3, "N": 1, "lambda_classvals": ["1"], "fourier_classvals": ["1"],
        "a1": 1e-7, "ir": "11", "petersson_phi": 1.0, "petersson_psi": 1.0,
        "primes": [{"p": 2, "satake": {"u0": 1, "u1": 1, "u2": 1}, "tau": {"alpha": [1, 1]}},
                   {"p": 3, "lambda_piL": 1, "satake": {"u0": 1, "u1": 1, "u2": 1}, "tau": {"alpha": [1, 1]}}]}}"#;
    let path = temp_file("ok.json", body);
    let p = path.to_str().unwrap();
    let o = bin(&["verify-local", "--trials", "1", "--order", "12", "--input", p, "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("local/input/0"));
    let o = bin(&["global", "--pmax", "3", "--input", p]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("global/z/0") && out.contains("global/special-value"));
    let o = bin(&["lfactor", "--input", p]);
    assert!(stdout(&o).contains("symbol=ramified"));
    std::fs::remove_file(path).ok();
}
