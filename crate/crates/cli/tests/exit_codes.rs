//! Exit statuses of the real binary.

use std::process::{Command, Output};

fn quadric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadric")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    quadric(args).status.code().expect("exited normally")
}

#[test]
fn success_is_zero() {
    assert_eq!(code(&["verify", "algebra-core"]), 0);
    assert_eq!(code(&["reduce", "x1*y2"]), 0);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn usage_and_parse_errors_are_two() {
    for args in [
        &["reduce", "x5"][..],
        &["reduce", "x1 * * y1"],
        &["reduce", "(x1"],
        &["--k", "1", "verify", "weyl"],
        &["--k", "two", "verify", "weyl"],
        &["verify", "no-such-suite"],
        &["no-such-command"],
        &["--format", "xml", "verify", "weyl"],
        &["fourier-transform", "Delta"],
        &["kelvin", "--expr", "dy1*x1"],
    ] {
        assert_eq!(code(args), 2, "{args:?}");
    }
}

#[test]
fn parse_errors_report_position_and_expectation() {
    let out = quadric(&["reduce", "x1 + *"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("at 5"), "{err}");
    assert!(err.contains("expected"), "{err}");
}

#[test]
fn degree_cap_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_quadric"))
        .args(["reduce", "x1^40"])
        .env("QUADRIC_MAX_DEGREE", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("QUADRIC_MAX_DEGREE"));
}

#[test]
fn failing_verification_is_one() {
    // A report with a failing check maps to status 1 through the same path as `verify`.
    let r = quadric_cli::report::SuiteReport::new("x", 2, vec![quadric_core::Check::fail("a", "b", "c")]);
    assert_eq!(r.exit_status, 1);
}
