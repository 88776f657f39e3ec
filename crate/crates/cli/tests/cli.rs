use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wavemanifold")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("wavemanifold-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

#[test]
fn classify_reports_lifts_and_region() {
    let o = run(&["classify", "-0.125", "3.5"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["class"], "Hyperbolic");
    assert_eq!(v["region"], "II");
    assert_eq!(v["lift"]["us"]["z"].as_f64().unwrap(), -1.0);
}

#[test]
fn solve_emits_solution_json() {
    let o = run(&["solve", "-0.125", "3.5", "9.048076925", "14.03846154"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let kinds: Vec<&str> = v["waves"].as_array().unwrap().iter().map(|w| w["type"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["S1", "R2"]);
    assert!(v["waves"][0]["speed"].is_number());
    assert!(v["waves"][1]["speed_range"].is_array());
    assert_eq!(v["compatible"], true);
}

#[test]
fn solve_with_equal_states_is_empty() {
    let o = run(&["solve", "1", "3", "1", "3"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["waves"].as_array().unwrap().is_empty());
}

#[test]
fn solve_writes_svg() {
    let dir = scratch("svg");
    let o = run(&["solve", "0.125", "-2.5", "3", "4", "--format", "svg", "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let svg = std::fs::read_to_string(dir.join("solution.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("polyline"));
}

#[test]
fn elliptic_data_exit_with_domain_error() {
    let o = run(&["solve", "0", "-0.5", "3", "4"]);
    assert_eq!(code(&o), 3);
    assert!(!o.stderr.is_empty());
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(code(&run(&["solve", "1", "2"])), 2);
    assert_eq!(code(&run(&["classify", "1", "2", "--params", "b1=0.5"])), 2);
    assert_eq!(code(&run(&["export", "nonsense"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn validate_is_deterministic() {
    let a = run(&["validate", "--n", "300", "--seed", "11"]);
    let b = run(&["validate", "--n", "300", "--seed", "11"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn export_writes_grids() {
    let dir = scratch("export");
    let o = run(&["export", "son", "--format", "csv", "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let csv = std::fs::read_to_string(dir.join("son.csv")).unwrap();
    assert!(csv.starts_with("i,j,z,t,Y"));
    let o = run(&["export", "wavecurve", "--u", "0.125", "--v", "-2.5", "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
}

#[test]
fn config_file_is_honoured() {
    let dir = scratch("config");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.json");
    std::fs::write(&cfg, r#"{"params": {"a1": 0, "a2": 0, "a3": 2, "a4": 0, "b1": 8}}"#).unwrap();
    let o = run(&["classify", "0", "-1", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    // (0, -1) is the ellipse center once c = 2
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["class"], "Elliptic");
}
