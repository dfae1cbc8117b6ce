//! Black-box checks of the binary: exit codes, report files, reproducibility.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chowbench"))
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = bin().args(["verify", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    let out = bin().args(["verify", "appendix", "--frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn presentation_suite_passes_and_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["verify", "presentation", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let structured = std::fs::read_to_string(dir.path().join("report.jsonl")).unwrap();
    assert!(structured.lines().count() >= 4);
    let summary = std::fs::read_to_string(dir.path().join("summary.txt")).unwrap();
    assert!(summary.contains("all 5 checks passed"));
}

#[test]
fn structured_report_is_reproducible_byte_for_byte() {
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    for d in [&d1, &d2] {
        let st = bin()
            .args(["emit", "classes", "--max-N", "6", "--out"])
            .arg(d.path())
            .status()
            .unwrap();
        assert!(st.success());
    }
    let a = std::fs::read(d1.path().join("report.jsonl")).unwrap();
    let b = std::fs::read(d2.path().join("report.jsonl")).unwrap();
    assert_eq!(a, b);
    let a = std::fs::read(d1.path().join("classes.txt")).unwrap();
    let b = std::fs::read(d2.path().join("classes.txt")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn tiny_budget_yields_inconclusive_exit_3() {
    let out = bin()
        .args(["verify", "appendix", "--max-N", "4", "--budget", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("inconclusive"));
}

#[test]
fn fixed_variant_assignment_is_honored() {
    let out = bin()
        .args([
            "verify",
            "presentation",
            "--variants",
            "fixed:k1(1)=derived,d11c=section3,kh=minus",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    // an assignment that keeps a literal typo fails the audit
    let out = bin()
        .args([
            "verify",
            "presentation",
            "--variants",
            "fixed:k1(1)=literal,d11c=section3,kh=minus",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn simplify_and_compare_write_their_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let st = bin()
        .args(["simplify", "rational", "--out"])
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(st.success());
    let ideal = std::fs::read_to_string(dir.path().join("simplified_ideal.txt")).unwrap();
    assert_eq!(ideal.lines().count(), 12);

    let dir = tempfile::tempdir().unwrap();
    let st = bin()
        .args(["compare", "faber", "--out"])
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(st.success());
    let ideal = std::fs::read_to_string(dir.path().join("faber_ideal.txt")).unwrap();
    assert_eq!(ideal.lines().count(), 12);
    assert!(ideal.contains("kappa2") || ideal.contains("delta0"));
}
