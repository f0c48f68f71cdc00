use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hardyx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hardyx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = hardyx(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn phi1_p2_half() {
    let v = json(&["phi1", "--p", "2", "--t", "0.5", "--json"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "phi1");
    let value = v["results"]["value"].as_f64().unwrap();
    assert!((value - 0.75f64.sqrt()).abs() < 1e-12);
    assert_eq!(v["results"]["regime"], "MOEBIUS_OUTER");
}

#[test]
fn phi1_infinite_exponent() {
    let v = json(&["phi1", "--p", "inf", "--t", "0.5", "--json"]);
    assert!((v["results"]["value"].as_f64().unwrap() - 0.75).abs() < 1e-12);
    assert_eq!(v["inputs"]["p"], "inf");
}

#[test]
fn phi1_at_switching_point_is_both() {
    let v = json(&["phi1", "--p", "0.5", "--t", "tp", "--json"]);
    assert_eq!(v["results"]["regime"], "BOTH");
    assert!(v["results"]["alpha"].is_number() && v["results"]["beta"].is_number());
    assert_eq!(v["inputs"]["t"], v["diagnostics"]["t_p"]);
}

#[test]
fn phi1_regimes_either_side_of_t_p() {
    let below = json(&["phi1", "--p", "0.5", "--t", "0.1", "--json"]);
    assert_eq!(below["results"]["regime"], "MOEBIUS_OUTER");
    assert!(below["results"]["beta"].is_null());
    let above = json(&["phi1", "--p", "0.5", "--t", "0.9", "--json"]);
    assert_eq!(above["results"]["regime"], "OUTER");
    assert!(above["results"]["alpha"].is_null());
}

#[test]
fn domain_errors_exit_2() {
    for args in [
        &["phi1", "--p", "-1", "--t", "0.5"][..],
        &["phi1", "--p", "0", "--t", "0.5"],
        &["phi1", "--p", "1", "--t", "1.5"],
        &["phi1", "--p", "2", "--t", "tp"],
        &["phi1", "--p", "abc", "--t", "0.5"],
        &["solve", "--k", "0", "--p", "1", "--t", "0.5"],
        &["wiener", "--p", "2", "--k", "2"],
        &["verify", "--suite", "nonsense"],
    ] {
        let out = hardyx(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn infeasible_solve_exits_3() {
    // for p = inf and no zeros the candidate is a unimodular constant, so
    // |f(0)| = 0.5 cannot be met
    let out = hardyx(&["solve", "--k", "1", "--p", "inf", "--t", "0.5", "--l", "0"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn solve_matches_closed_form() {
    let v = json(&["solve", "--k", "1", "--p", "2", "--t", "0.3", "--starts", "8", "--json"]);
    let got = v["results"]["value"].as_f64().unwrap();
    let want = v["diagnostics"]["phi1_closed_form"].as_f64().unwrap();
    assert!((got - want).abs() < 1e-6, "{got} vs {want}");
    assert!(v["diagnostics"]["norm_residual"].as_f64().unwrap() < 1e-7);
    assert_eq!(v["results"]["best"]["zero_count"], v["results"]["l_used"]);
}

#[test]
fn solve_is_reproducible_for_a_seed() {
    let args = [
        "solve", "--k", "2", "--p", "1", "--t", "0.7", "--starts", "8", "--seed", "5", "--json",
    ];
    let a = json(&args);
    let b = json(&args);
    assert_eq!(a["results"], b["results"]);
}

#[test]
fn json_round_trips() {
    let v = json(&["phi1", "--p", "1", "--t", "0.8", "--json"]);
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    for section in ["inputs", "results", "diagnostics"] {
        assert!(v[section].is_object(), "{section}");
    }
}

#[test]
fn figures_are_byte_stable() {
    for (cmd, header, rows) in [("figure1", "p,t,phi1", 2048), ("figure2", "p,t_p,lower,upper", 256)] {
        let a = scratch(&format!("{cmd}_a.csv"));
        let b = scratch(&format!("{cmd}_b.csv"));
        assert!(hardyx(&[cmd, "--out", a.to_str().unwrap()]).status.success());
        assert!(hardyx(&[cmd, "--out", b.to_str().unwrap()]).status.success());
        let (da, db) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        assert_eq!(da, db, "{cmd}");
        let text = String::from_utf8(da).unwrap();
        assert_eq!(text.lines().next(), Some(header));
        assert_eq!(text.lines().count(), rows + 1);
    }
}

#[test]
fn figure1_contains_known_points() {
    let path = scratch("figure1_points.csv");
    assert!(hardyx(&["figure1", "--out", path.to_str().unwrap()]).status.success());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.contains("\n2,0,1\n"));
    assert!(text.contains("\ninf,1,0\n"));
}

#[test]
fn unwritable_output_exits_1() {
    let out = hardyx(&["figure2", "--out", "/nonexistent-dir/f.csv"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn wiener_table() {
    let v = json(&["wiener", "--p", "0.5", "--k", "2", "--eps-list", "1e-2,1e-3", "--json"]);
    let ratios = v["results"]["ratios"].as_array().unwrap();
    assert_eq!(ratios.len(), 2);
    let r: Vec<f64> = ratios.iter().map(|x| x["ratio"].as_f64().unwrap()).collect();
    assert!(r[1] > r[0] && r[1] < 2f64.sqrt());
    assert!((v["results"]["limit"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-15);
    assert_eq!(v["results"]["monotone_in_eps"], true);
}

#[test]
fn verify_appendix_passes() {
    let out = hardyx(&["verify", "--suite", "appendix"]);
    assert!(out.status.success());
    let v = json(&["verify", "--suite", "appendix", "--json"]);
    assert_eq!(v["results"]["all_passed"], true);
    assert!(!v["results"]["checks"].as_array().unwrap().is_empty());
}

#[test]
fn explore_sandwich_is_ordered() {
    let v = json(&[
        "explore", "sandwich", "--k", "2", "--p", "0.5", "--t", "0.5", "--starts", "8", "--json",
    ]);
    let r = &v["results"];
    let (lo, mid, hi) = (
        r["lower"].as_f64().unwrap(),
        r["solved"].as_f64().unwrap(),
        r["upper"].as_f64().unwrap(),
    );
    assert!(lo <= mid + 1e-9 && mid <= hi + 1e-9, "{lo} {mid} {hi}");
}

#[test]
fn thread_count_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_hardyx"))
        .args(["phi1", "--p", "1", "--t", "0.2"])
        .env("HARDYX_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_hardyx"))
        .args(["phi1", "--p", "1", "--t", "0.2"])
        .env("HARDYX_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
