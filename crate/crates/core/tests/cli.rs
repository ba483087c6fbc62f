use std::path::PathBuf;
use std::process::{Command, Output};

use bpuverify::report::VerificationReport;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bpuverify"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

/// Text output with the wall-time suffix of each summary line removed.
fn normalized_text(out: &[u8]) -> String {
    String::from_utf8_lossy(out)
        .lines()
        .map(|l| match l.rsplit_once(", ") {
            Some((head, tail)) if tail.ends_with(" ms") && (l.starts_with("PASS") || l.starts_with("FAIL")) => {
                head.to_string()
            }
            _ => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["run", "spectral"]).status.code(), Some(0));
    assert_eq!(run(&["run", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["run", "bpu2", "--format", "yaml"]).status.code(), Some(2));
    let missing = run(&["run", "spectral", "--presentation", "/nonexistent/file.alg"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn failing_fixture_exits_one() {
    let path = fixture("failing_presentation.alg");
    let out = run(&["run", "spectral", "--presentation", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("fail presentation/bad_relations_closed"), "{text}");
    // the suite itself still passes; only the injected presentation fails
    assert!(text.contains("PASS spectral"));
}

#[test]
fn consistent_fixture_exits_zero() {
    let path = fixture("consistent_presentation.alg");
    let out = run(&["run", "bpu2", "--presentation", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn findings_do_not_fail_the_run() {
    let out = run(&["run", "spectral", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.suite, "spectral");
    let finding = r.checks.iter().find(|c| c.name == "delta_c2_display").unwrap();
    assert_eq!(serde_json::to_value(finding.status).unwrap(), "finding");
}

#[test]
fn json_schema_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["run", "dga", "--max-degree", "16", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "dga");
    assert!(v["elapsed_ms"].is_u64());
    for c in v["checks"].as_array().unwrap() {
        for key in ["name", "status", "detail", "witness"] {
            assert!(c[key].is_string(), "{key} in {c}");
        }
    }
}

#[test]
fn all_runs_every_suite_in_registry_order() {
    let out = run(&["run", "all", "--format", "json"]);
    // k4's lattice check fails at the prime 3
    assert_eq!(out.status.code(), Some(1));
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.suite.as_str()).collect();
    assert_eq!(names, ["k4", "coker", "vistoli", "steenrod", "bpu2", "section10", "dga", "spectral"]);
    let failed: Vec<&str> = reports.iter().flat_map(|r| r.failures().map(|c| c.name.as_str())).collect();
    assert_eq!(failed, ["alpha_lattice"]);
}

#[test]
fn reports_are_deterministic() {
    for suite in ["steenrod", "section10", "dga"] {
        let a = run(&["run", suite]);
        let b = run(&["run", suite]);
        assert_eq!(normalized_text(&a.stdout), normalized_text(&b.stdout), "{suite}");
    }
}

#[test]
fn thread_cap_does_not_change_output() {
    let one = bin().env("BPUVERIFY_THREADS", "1").args(["run", "steenrod"]).output().unwrap();
    let many = bin().env("BPUVERIFY_THREADS", "4").args(["run", "steenrod"]).output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(normalized_text(&one.stdout), normalized_text(&many.stdout));
    let bad = bin().env("BPUVERIFY_THREADS", "lots").args(["run", "spectral"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn golden_reports() {
    for suite in ["k4", "coker", "vistoli", "steenrod", "bpu2", "section10", "dga", "spectral"] {
        let golden = std::fs::read_to_string(fixture(&format!("golden/{suite}.txt"))).unwrap();
        let out = run(&["run", suite]);
        assert_eq!(normalized_text(&out.stdout), golden, "{suite}");
    }
}

#[test]
fn k4_reports_the_relation() {
    let out = run(&["run", "k4", "--max-degree", "12"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("pass k4/relation: relation 64α₆−α₂³−27α₃²+48α₂α₄ = 0"), "{text}");
}
