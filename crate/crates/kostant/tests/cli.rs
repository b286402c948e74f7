use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("kostant").chain(args.iter().copied());
    let code = kostant::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn hecke_transcripts() {
    let cases = [
        ("C: C(6,5)*C(1,2,4,3,2,5,6)", "C'(1,2,3,2,6)+C'(1,2,3,2,5,6,5)+C'(1,2,4,5,6,5,4,3,2)"),
        ("D: D(1,2,4,3,2,1,5,6,5,4)*C(6,5)", "D'(1,2,4,3,2,1,5,6,5,4)+(v+v^-1)D'(1,2,4,3,2,1,5,4,6,5,4)"),
        ("coeff(C(1,3,4,3,6)*C(1,2,3,4,5,6,5,4,3,2,1), 1,3,4,3,6)", "v^3 + 3*v + 3*v^(-1) + v^(-3)"),
        ("H: H()", "H()"),
    ];
    for (expr, want) in cases {
        let (code, out, err) = run(&["hecke", expr]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out.trim_end(), want);
    }
}

#[test]
fn hecke_parse_error_is_usage() {
    let (code, _, err) = run(&["hecke", "C(1,2"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn rs_example() {
    let j = json(&["rs", "1524376", "--format", "json"]);
    assert_eq!(j["p"], serde_json::json!([[1, 2, 3, 6], [4, 7], [5]]));
    assert_eq!(j["q"], serde_json::json!([[1, 2, 4, 6], [3, 7], [5]]));
    assert_eq!(j["shape"], serde_json::json!([4, 2, 1]));
    assert_eq!(j["right_descents"], serde_json::json!([2, 4, 6]));
}

#[test]
fn rs_accepts_every_notation() {
    let one_line = json(&["rs", "1524376", "--format", "json"]);
    let compressed = json(&["rs", one_line["compressed"].as_str().unwrap(), "-n", "7", "--format", "json"]);
    assert_eq!(one_line, compressed);
}

#[test]
fn patterns_verify() {
    let j = json(&["patterns", "2154367", "--verify", "--format", "json"]);
    let first = &j[0];
    assert_eq!(first["pattern"], "2143");
    assert_eq!(first["position"], 1);
    assert_eq!(first["certificate_checked"], true);
}

#[test]
fn cells_of_small_element() {
    let (code, out, _) = run(&["cells", "2143", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "member,compressed,involution");
    assert!(lines.iter().any(|l| l.starts_with("2143,") && l.ends_with(",true")));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["classify", "-n", "9"]).0, 1);
    assert_eq!(run(&["classify", "-n", "0"]).0, 1);
    assert_eq!(run(&["classify", "--threads", "0"]).0, 1);
    assert_eq!(run(&["classify", "--mode", "fast"]).0, 1);
    assert_eq!(run(&["tables", "--which", "9"]).0, 1);
    assert_eq!(run(&["sweep", "-n", "4", "--d", "2"]).0, 0);
    assert_eq!(run(&["sweep", "-n", "4", "--d", "12"]).0, 1);
    assert_eq!(run(&["sweep", "-n", "4"]).0, 1);
    assert_eq!(run(&["prebuild", "-n", "4"]).0, if std::env::var_os("KOSTANT_CACHE_DIR").is_some() { 0 } else { 1 });
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn io_errors_exit_four() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("none.toml");
    assert_eq!(run(&["classify", "--config", missing.to_str().unwrap()]).0, 4);
    let cp = dir.path().join("cp.jsonl");
    std::fs::write(&cp, "{\"format\":\"other\"}\n").unwrap();
    let (code, _, err) = run(&["sweep", "-n", "4", "--d", "2", "--resume", cp.to_str().unwrap()]);
    assert_eq!(code, 4, "{err}");
}

#[test]
fn config_file_layers_under_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("k.toml");
    std::fs::write(&cfg, "degree = 5\nformat = \"csv\"\n").unwrap();
    let c = cfg.to_str().unwrap();
    let (code, out, _) = run(&["classify", "--records", "--config", c]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1 + 26);
    assert!(out.starts_with("d,"));
    let (code, out, _) = run(&["classify", "--config", c, "-n", "4", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "9 positive / 1 negative");
    std::fs::write(&cfg, "degre = 5\n").unwrap();
    assert_eq!(run(&["classify", "--config", c]).0, 1);
}

#[test]
fn classify_seven() {
    let (code, out, _) = run(&["classify"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "125 positive / 107 negative");
    let j = json(&["classify", "--format", "json"]);
    assert_eq!(j["graded_sweep_pending"].as_array().unwrap().len(), 3);
    let j = json(&["classify", "--force-sweep", "--format", "json"]);
    assert_eq!(j["graded_sweep_pending"], serde_json::json!([]));
    assert_eq!(j["positive"], 125);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["classify", "--format", "json"][..],
        &["tables", "--which", "3", "--format", "csv"][..],
        &["tables", "--which", "1", "--format", "text"][..],
        &["sweep", "-n", "5", "--positive", "--mode", "graded", "--format", "json"][..],
    ] {
        let a = run(args);
        let b = run(&[args, &["--threads", "1"][..]].concat());
        assert_eq!(a.0, 0, "{args:?}");
        assert_eq!(a.1, b.1, "{args:?}");
    }
}

#[test]
fn table_row_counts() {
    for (which, rows) in [("1", 161), ("2", 29), ("3", 25), ("4", 107), ("5", 16)] {
        let (code, out, _) = run(&["tables", "--which", which, "--format", "csv"]);
        assert_eq!(code, 0, "table {which}");
        assert_eq!(out.lines().count(), rows + 1, "table {which}");
    }
}

#[test]
fn sweep_resume_matches_uninterrupted() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("s.jsonl");
    let cp = cp.to_str().unwrap();
    let base = ["sweep", "-n", "5", "--positive", "--mode", "ev", "--format", "json"];
    let (code, full, _) = run(&base);
    assert_eq!(code, 0);
    let (code, _, _) = run(&[&base[..], &["--resume", cp, "--stop-after", "5"]].concat());
    assert_eq!(code, 3);
    let (code, resumed, _) = run(&[&base[..], &["--resume", cp]].concat());
    assert_eq!(code, 0);
    assert_eq!(full, resumed);
}

#[test]
fn binary_prebuild_uses_env_cache() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_kostant");
    let go = || {
        let o = Command::new(bin).args(["prebuild", "-n", "5"]).env("KOSTANT_CACHE_DIR", dir.path()).output().unwrap();
        assert!(o.status.success());
        String::from_utf8(o.stdout).unwrap()
    };
    assert!(go().starts_with("built "));
    assert!(go().starts_with("present "));
    assert!(dir.path().join("kl-s5.v1.bin").is_file());
    let o = Command::new(bin).args(["classify", "-n", "9"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}
