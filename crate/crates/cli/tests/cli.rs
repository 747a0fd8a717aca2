use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monohurwitz")).args(args).output().expect("binary runs")
}

fn lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn bgw_single_eigenvalue_series() {
    let out = run(&["bgw", "orthogonal", "--x", "1", "--tmax", "3"]);
    assert!(out.status.success());
    let rows = lines(&out);
    let coeffs: Vec<&str> = rows[..4].iter().map(|r| r["coefficient"].as_str().unwrap()).collect();
    assert_eq!(coeffs, ["1", "1/2", "1/8", "1/72"]);
    assert_eq!(rows[4]["status"], "pass");
    assert!(rows[4]["witness"].is_null());
}

#[test]
fn as_printed_border_exits_nonzero() {
    let out = run(&["bgw", "orthogonal", "--x", "1", "--tmax", "2", "--as-printed"]);
    assert!(!out.status.success());
    let report = lines(&out).pop().unwrap();
    assert_eq!(report["status"], "fail");
    assert_eq!(report["witness"]["degree"], 0);
}

#[test]
fn sampled_mode_requires_a_point() {
    let out = run(&["tau", "check-evolution", "--mode", "sample"]);
    assert!(!out.status.success());
    assert_eq!(lines(&out)[0]["status"], "fail");
    let out = run(&["tau", "check-evolution", "--nmax", "4", "--mode", "sample", "--b", "3/7", "--n", "5/2"]);
    assert!(out.status.success());
}

#[test]
fn oracle_budget_is_a_failing_report() {
    let out = run(&["oracle", "enumerate", "--n", "9", "--r", "2"]);
    assert!(!out.status.success());
    assert!(lines(&out)[0]["note"].as_str().unwrap().contains("exceeds"));
}

#[test]
fn output_is_deterministic() {
    let args = ["pfaffian", "check", "--count", "5", "--tuples", "5", "--size", "3", "--nmax", "3", "--seed", "3"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_schema() {
    let out = run(&["oracle", "compare", "--n", "3", "--r", "2"]);
    assert!(out.status.success());
    let r = &lines(&out)[0];
    for key in ["identity", "anchor", "params", "status", "witness"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn selected_criteria() {
    let out = run(&["all", "--only", "5"]);
    assert!(out.status.success());
    let rows = lines(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["criterion"], 5);
    assert_eq!(rows[0]["status"], "pass");
}
