use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const CURVES: &str = r#"{"label":"37a","A":-16,"B":16,"bad_primes":[{"p":2,"kind":"potentially_good_nonabelian"},{"p":37,"kind":"multiplicative","a_p1":-1}]}
{"label":"cm","A":-1,"B":0,"bad_primes":[]}
"#;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(dir: &Path, args: &[&str]) -> String {
    let out = run(dir, args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn workspace() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("curves.jsonl"), CURVES).unwrap();
    dir
}

#[test]
fn every_subcommand_has_help() {
    let dir = workspace();
    for cmd in [
        "scan",
        "predict",
        "st-hist",
        "approx-verify",
        "fourier-dump",
        "sympow-dump",
        "smoothed-sum",
    ] {
        let text = stdout(dir.path(), &[cmd, "--help"]);
        assert!(text.contains("Usage: extremal"), "{cmd}");
    }
}

#[test]
fn scan_csv_header_and_blocks() {
    let dir = workspace();
    let text = stdout(
        dir.path(),
        &["scan", "--curves", "curves.jsonl", "--lo", "2", "--hi", "100", "--out", "-", "--format", "csv"],
    );
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# 37a");
    assert_eq!(lines[1], "p,a_p,theta,extremal");
    assert!(lines.contains(&"# cm"));
    assert!(lines.contains(&"29,-10,2.76108627648,min"));
}

#[test]
fn single_curve_csv_has_no_label_line() {
    let dir = workspace();
    fs::write(dir.path().join("one.jsonl"), CURVES.lines().nth(1).unwrap()).unwrap();
    let text = stdout(
        dir.path(),
        &["scan", "--curves", "one.jsonl", "--lo", "2", "--hi", "100", "--out", "-", "--format", "csv"],
    );
    assert!(text.starts_with("p,a_p,theta,extremal\n"));
}

#[test]
fn scan_json_counts_primes() {
    let dir = workspace();
    let text = stdout(
        dir.path(),
        &["scan", "--curves", "curves.jsonl", "--lo", "100000", "--hi", "200000", "--out", "-", "--format", "json"],
    );
    for line in text.lines() {
        let report: Value = serde_json::from_str(line).unwrap();
        // π(2·10^5) − π(10^5) = 17984 − 9592
        assert_eq!(report["n_primes"], 8392);
        assert!(report.get("records").is_none());
    }
}

#[test]
fn scan_output_is_independent_of_thread_count() {
    let dir = workspace();
    let mut outputs = Vec::new();
    for threads in ["1", "8"] {
        let out = format!("scan_{threads}.csv");
        stdout(
            dir.path(),
            &[
                "--threads", threads, "scan", "--curves", "curves.jsonl", "--lo", "2", "--hi", "300000",
                "--out", &out, "--format", "csv",
            ],
        );
        outputs.push(fs::read(dir.path().join(out)).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn flags_override_config_file() {
    let dir = workspace();
    fs::write(
        dir.path().join("run.toml"),
        "curves = \"curves.jsonl\"\nn = 1\nx = 1000.0\nthreads = 2\n",
    )
    .unwrap();
    let from_file = stdout(dir.path(), &["--config", "run.toml", "smoothed-sum"]);
    assert!(from_file.lines().nth(1).unwrap().starts_with("37a,1,1000.00000000,"));
    let overridden = stdout(dir.path(), &["--config", "run.toml", "smoothed-sum", "--n", "0"]);
    assert!(overridden.lines().nth(1).unwrap().starts_with("37a,0,1000.00000000,"));
}

#[test]
fn missing_required_value_is_reported() {
    let dir = workspace();
    let out = run(dir.path(), &["smoothed-sum", "--curves", "curves.jsonl", "--n", "0"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--x"));
}

#[test]
fn unknown_fields_are_rejected() {
    let dir = workspace();
    fs::write(dir.path().join("bad.jsonl"), "{\"label\":\"x\",\"A\":1,\"B\":1,\"bad_primes\":[],\"extra\":0}\n").unwrap();
    let out = run(dir.path(), &["sympow-dump", "--curves", "bad.jsonl", "--n", "1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.jsonl:1"));

    fs::write(dir.path().join("bad.toml"), "bogus = 1\n").unwrap();
    let out = run(dir.path(), &["--config", "bad.toml", "predict", "--x", "10"]);
    assert!(!out.status.success());
}

#[test]
fn predict_prints_fixed_notation() {
    let dir = workspace();
    assert_eq!(stdout(dir.path(), &["predict", "--x", "1e6", "--cm"]), "485.726646567\n");
    assert_eq!(stdout(dir.path(), &["predict", "--x", "1e6", "--no-cm"]), "1.94290658627\n");
    assert!(!run(dir.path(), &["predict", "--x", "1e6", "--cm", "--no-cm"]).status.success());
}

#[test]
fn approx_verify_passes_on_short_interval() {
    let dir = workspace();
    let report: Value = serde_json::from_str(&stdout(dir.path(), &["approx-verify", "--M", "16"])).unwrap();
    assert_eq!(report["M"], 16);
    assert_eq!(report["all_pass"], true);
    assert_eq!(report["majorant"]["decay"]["pass"], true);
}

#[test]
fn fourier_dump_shape() {
    let dir = workspace();
    for (side, name) in [("maj", "majorant"), ("min", "minorant")] {
        let text = stdout(
            dir.path(),
            &["fourier-dump", "--M", "8", "--alpha", "0.5", "--beta", "2", "--side", side],
        );
        let dump: Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<&String> = dump.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["M", "bounds_check", "coeffs", "interval", "side"]);
        assert_eq!(dump["side"], name);
        assert_eq!(dump["coeffs"].as_array().unwrap().len(), 9);
        assert_eq!(dump["bounds_check"]["all_pass"], true);
    }
}

#[test]
fn sympow_dump_lines() {
    let dir = workspace();
    let text = stdout(dir.path(), &["sympow-dump", "--curves", "curves.jsonl", "--n", "2"]);
    let rows: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    for key in ["p", "kind", "n", "eps_n", "delta_n", "exact", "lambda_m1"] {
        assert!(rows.iter().all(|r| r.get(key).is_some()), "{key}");
    }
    assert_eq!(rows[1]["p"], 37);
    assert_eq!(rows[1]["eps_n"], 2);
    assert_eq!(rows[1]["exact"], true);
}

#[test]
fn st_hist_rows() {
    let dir = workspace();
    let text = stdout(
        dir.path(),
        &["st-hist", "--curves", "curves.jsonl", "--lo", "2", "--hi", "1000", "--bins", "4"],
    );
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "curve,bin,theta_lo,theta_hi,empirical,mu_st");
    assert_eq!(lines.len(), 1 + 2 * 4);
    assert!(!run(dir.path(), &["st-hist", "--curves", "curves.jsonl", "--lo", "2", "--hi", "9", "--bins", "0"])
        .status
        .success());
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = workspace();
    let args = ["smoothed-sum", "--curves", "curves.jsonl", "--n", "2", "--x", "5000"];
    assert_eq!(stdout(dir.path(), &args), stdout(dir.path(), &args));
}
