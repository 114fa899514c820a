//! End-to-end checks of the binary: exit codes, report determinism, and the
//! printed star series.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twistlab"))
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("twistlab-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn star_calculator_prints_exact_series() {
    let out = bin()
        .args([
            "star", "--space", "gstar", "--f", "y", "--g", "x", "--order", "1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "x*y + hbar*(y^2)"
    );

    // identity element leaves the other factor unchanged
    let out = bin()
        .args([
            "star", "--space", "gstar", "--f", "1", "--g", "x*y - 2", "--order", "2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "x*y - 2 + hbar*(0) + hbar^2*(0)"
    );
}

#[test]
fn exit_codes() {
    // 0: all checks pass
    let ok = bin()
        .args(["verify", "--suite", "poisson", "--order", "1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    // 2: usage/config errors
    let unknown = bin()
        .args(["verify", "--suite", "not-a-suite"])
        .output()
        .unwrap();
    assert_eq!(unknown.status.code(), Some(2));
    let bad_order = bin()
        .args(["verify", "--suite", "poisson", "--order", "9"])
        .output()
        .unwrap();
    assert_eq!(bad_order.status.code(), Some(2));
    let bad_expr = bin()
        .args(["star", "--space", "gstar", "--f", "q+", "--g", "1"])
        .output()
        .unwrap();
    assert_eq!(bad_expr.status.code(), Some(2));
}

#[test]
fn fixtures_list_names_the_registry() {
    let out = bin().args(["fixtures", "list"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for name in [
        "axb",
        "axb_dual",
        "axb_double",
        "axb_double_group",
        "jordanian",
    ] {
        assert!(text.contains(name), "missing fixture {name}");
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tmpdir("determinism");
    let run = |path: &PathBuf| {
        let out = bin()
            .args([
                "verify",
                "--suite",
                "appendix-a",
                "--order",
                "2",
                "--seed",
                "12345",
                "--samples",
                "20",
                "--report",
            ])
            .arg(path)
            .output()
            .unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        std::fs::read(path).unwrap()
    };
    let a = run(&dir.join("a.json"));
    let b = run(&dir.join("b.json"));
    assert!(!a.is_empty());
    assert_eq!(a, b, "reports differ between identical runs");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn report_dir_env_var_is_honored() {
    let dir = tmpdir("envvar");
    let out = bin()
        .args(["verify", "--suite", "poisson", "--order", "1"])
        .env("TWISTLAB_REPORT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.join("report.json").exists());
    let _ = std::fs::remove_dir_all(&dir);
}
