//! End-to-end checks of the command-line interface: output schemas, exit
//! codes, stiffness validation, the thread-cap environment variable, and
//! byte determinism of emitted artifacts.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fuzzy-spectra"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn spectrum_circle_csv_schema_and_values() {
    let out = run(&[
        "spectrum", "--space", "circle", "--lambda", "2", "--k", "36",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "h,eigenvalue");
    assert_eq!(lines.len(), 6);
    let vals: Vec<f64> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    let a1 = 0.5 * (3.0f64 + 2.0 / 36.0).sqrt();
    let a2 = 0.5 * (1.0f64 + 2.0 / 36.0).sqrt();
    for (v, expect) in vals.iter().zip([a1, a2, 0.0, -a2, -a1]) {
        assert!((v - expect).abs() <= 1e-11, "{v} vs {expect}");
    }
    assert!(lines[1].starts_with("1,"));
    assert!(text.ends_with('\n'));
}

#[test]
fn spectrum_json_mirrors_csv_fields() {
    let out = run(&[
        "spectrum", "--space", "sphere", "--lambda", "3", "--m", "1", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("{\"command\":\"spectrum\",\"space\":\"sphere\",\"lambda\":3,"));
    assert!(text.contains("\"rows\":[{\"h\":1,\"eigenvalue\":"));
    assert_eq!(text.matches("\"h\":").count(), 3); // block size 3
}

#[test]
fn eigvec_csv_schema() {
    let out = run(&[
        "eigvec", "--space", "circle", "--lambda", "4", "--h", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "i,component");
    assert_eq!(lines.len(), 10); // 2*4+1 components
    let first: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!(first > 0.0, "sign convention: first large component positive");
}

#[test]
fn sweep_csv_schema() {
    let out = run(&["sweep", "--space", "circle", "--lambda-max", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda,alpha1,lower_bound,upper_bound,pass");
    assert_eq!(lines.len(), 7);
    assert!(lines[1].starts_with("1,"));
    assert!(lines[1].ends_with(",true"));
}

#[test]
fn madore_compare_fields() {
    let out = run(&["madore-compare", "--lambda", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for field in ["top_eig_fuzzy", "top_eig_madore", "L3_fuzzy", "L3_madore"] {
        assert!(text.contains(&format!("\"{field}\":")), "missing {field}");
    }
    assert!(text.contains("\"L3_fuzzy\":0.0000000000000000e0"));
    assert!(text.contains("\"L3_madore\":1.0000000000000000e1"));
}

#[test]
fn verify_parity_report_passes() {
    let out = run(&[
        "verify", "--theorem", "parity", "--space", "sphere", "--lambda", "5", "--m", "0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# theorem: parity"));
    assert!(text.contains("PASS sphere-parity"));
    assert!(text.trim_end().ends_with("# result: PASS"));
}

#[test]
fn verify_unknown_theorem_is_usage_error() {
    let out = run(&["verify", "--theorem", "no-such-claim"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn algebra_check_passes_and_rejects_madore() {
    let out = run(&["algebra-check", "--space", "circle", "--lambda", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("# result: PASS"));

    let out = run(&["algebra-check", "--space", "madore", "--lambda", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn below_floor_stiffness_is_usage_error() {
    let out = run(&["spectrum", "--space", "circle", "--lambda", "3", "--k", "100"]);
    assert_eq!(out.status.code(), Some(2), "floor at lambda=3 is 144");
}

#[test]
fn m_requires_sphere() {
    let out = run(&["spectrum", "--space", "circle", "--lambda", "3", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn madore_rejects_stiffness() {
    let out = run(&["spectrum", "--space", "madore", "--lambda", "3", "--k", "144"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["spectrum", "--space", "madore", "--lambda", "3"]);
    assert!(out.status.success());
}

#[test]
fn thread_cap_env_is_validated() {
    let out = bin()
        .args(["spectrum", "--space", "circle", "--lambda", "2"])
        .env("FUZZY_SPECTRA_THREADS", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["spectrum", "--space", "circle", "--lambda", "2"])
        .env("FUZZY_SPECTRA_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["spectrum", "--space", "circle", "--lambda", "2"])
        .env("FUZZY_SPECTRA_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn output_file_is_written_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.csv");
    let out = run(&[
        "spectrum", "--space", "circle", "--lambda", "2",
        "--output", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty(), "file output leaves stdout clean");
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("h,eigenvalue\n"));
    // No leftover temporary files after the rename.
    let leftovers: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path() != path)
        .collect();
    assert!(leftovers.is_empty());
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "spectrum", "--space", "sphere", "--lambda", "12", "--m", "2", "--format", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    // Thread count must not leak into sweep output.
    let sweep = ["sweep", "--space", "circle", "--lambda-max", "12"];
    let one = bin()
        .args(sweep)
        .env("FUZZY_SPECTRA_THREADS", "1")
        .output()
        .unwrap();
    let four = bin()
        .args(sweep)
        .env("FUZZY_SPECTRA_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_closed_forms_json_and_csv() {
    let out = run(&["verify", "--theorem", "closed-forms", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("[{\"theorem\":\"closed-forms\""));
    assert!(text.contains("\"pass\":true"));

    let out = run(&["verify", "--theorem", "closed-forms", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("theorem,check,pass,measured,bound\n"));
    assert!(text.contains("closed-forms,circle-lambda1-spectrum,true,"));
}
