use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_accretive"))
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn remark_matrix(dir: &Path) -> PathBuf {
    write(dir, "remark.json", r#"{"n":2,"entries":[[5,-4],[0,2],[1,1],[6,0]]}"#)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let a = remark_matrix(dir.path());
    let a = a.to_str().unwrap();

    let pass = run(&["check", "--case", "thm.abs_real.a", "--matrix", a, "--window", "4,50"]);
    assert_eq!(pass.status.code(), Some(0), "{}", String::from_utf8_lossy(&pass.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&pass)).unwrap();
    assert_eq!(v["case_id"], "thm.abs_real.a");
    assert_eq!(v["pass"], true);

    let not_met = run(&["check", "--case", "thm.abs_real.a", "--matrix", a, "--window", "1,2"]);
    assert_eq!(not_met.status.code(), Some(2));

    let bad_window = run(&["check", "--case", "thm.abs_real.a", "--matrix", a, "--window", "5,4"]);
    assert_eq!(bad_window.status.code(), Some(3));

    let unknown = run(&["check", "--case", "thm.nothing", "--matrix", a, "--window", "4,50"]);
    assert_eq!(unknown.status.code(), Some(3));

    let missing = run(&["check", "--case", "thm.abs_real.a", "--matrix", "/nonexistent.json", "--window", "4,50"]);
    assert_eq!(missing.status.code(), Some(3));
}

#[test]
fn check_on_psd_pairs() {
    // 4I is not below 2I, and both sides of the equivalence say so
    let dir = tempfile::tempdir().unwrap();
    let x = write(dir.path(), "x.json", r#"{"n":2,"entries":[[4,0],[0,0],[0,0],[4,0]]}"#);
    let y = write(dir.path(), "y.json", r#"{"n":2,"entries":[[1,0],[0,0],[0,0],[1,0]]}"#);
    let out = run(&[
        "check",
        "--case",
        "prop.norm_product",
        "--matrix",
        x.to_str().unwrap(),
        "--matrix-b",
        y.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "check",
        "--case",
        "lem.sqrt_equiv",
        "--matrix",
        x.to_str().unwrap(),
        "--matrix-b",
        y.to_str().unwrap(),
        "--alpha",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["details"]["left"], false);
}

#[test]
fn check_with_map_and_second_window() {
    let dir = tempfile::tempdir().unwrap();
    let a = remark_matrix(dir.path());
    let map = write(dir.path(), "map.json", r#"{"kind":"normalized_trace"}"#);
    let out = run(&[
        "check",
        "--case",
        "ineq.posmap_reverse",
        "--matrix",
        a.to_str().unwrap(),
        "--map",
        map.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let i = write(dir.path(), "i.json", r#"{"n":2,"entries":[[1,0],[0,0],[0,0],[1,0]]}"#);
    let i = i.to_str().unwrap();
    let out = run(&[
        "check", "--case", "w.product", "--matrix", i, "--matrix-b", i, "--window", "0.5,2", "--window-b", "0.5,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["rhs_summary"].as_f64().unwrap() - 1.5625).abs() < 1e-6);
}

#[test]
fn window_radius_and_range() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(dir.path(), "d.json", r#"{"n":2,"entries":[[1,0],[0,0],[0,0],[4,0]]}"#);
    let d = d.to_str().unwrap();
    let out = run(&["window", "--matrix", d, "--variant", "A"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["feasible"], true);
    assert!((v["K"].as_f64().unwrap() - 1.25).abs() < 1e-8);

    let j = write(dir.path(), "j.json", r#"{"n":2,"entries":[[0,0],[1,0],[0,0],[0,0]]}"#);
    let j = j.to_str().unwrap();
    let out = run(&["radius", "--matrix", j, "--eps", "1e-9"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let (lo, hi) = (v["lo"].as_f64().unwrap(), v["hi"].as_f64().unwrap());
    assert!(lo <= 0.5 + 1e-9 && hi >= 0.5 - 1e-9 && hi - lo <= 1e-9);

    let out = run(&["range", "--matrix", j, "--count", "16"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,re,im"));
    assert_eq!(lines.count(), 16);
}

#[test]
fn demo_paper_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("demo.json");
    let out = run(&["demo-paper", "--json", json.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("3.56083"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(v["all_ok"], true);
}

#[test]
fn sweep_writes_reports_and_replays_instances() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let o = run(&[
        "sweep", "--seed", "7", "--trials", "5", "--dims", "2,3", "--case", "thm.", "--out",
        out.to_str().unwrap(), "--csv", csv.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("case_id,trials,hyp_met,pass,fail,min_slack,argmin_seed\n"));
    assert!(csv_text.lines().skip(1).all(|l| l.starts_with("thm.")));
    let first = std::fs::read_to_string(&out).unwrap();

    let out2 = dir.path().join("r2.json");
    let o = run(&[
        "sweep", "--seed", "7", "--trials", "5", "--dims", "2,3", "--case", "thm.", "--out",
        out2.to_str().unwrap(), "--threads", "2",
    ]);
    assert!(o.status.success());
    assert_eq!(first, std::fs::read_to_string(&out2).unwrap());

    // a stored instance replays through `check --instance`
    let a = remark_matrix(dir.path());
    let inst = write(
        dir.path(),
        "inst.json",
        &format!(r#"{{"a":{},"window":{{"m":4,"M":50}}}}"#, std::fs::read_to_string(a).unwrap()),
    );
    let o = run(&["check", "--case", "thm.squared.a", "--instance", inst.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));

    let bad = run(&["sweep", "--trials", "1", "--dims", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn list_cases() {
    let out = run(&["check", "--list"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 41);
}
