//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use quadric_cli::commands::run_args;
use quadric_cli::parse::{parse, Expr, Gen, Var};
use quadric_core::Rat;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const CORPUS: usize = 1000;
pub const CORPUS_SEED: u64 = 20_261_019;

fn leaf(r: &mut ChaCha8Rng, k: usize) -> Expr {
    let i = r.gen_range(1..=k);
    let j = r.gen_range(1..=k);
    let lo = r.gen_range(1..k);
    let hi = r.gen_range(lo + 1..=k);
    match r.gen_range(0..13) {
        0 => Expr::Var(Var::X(i)),
        1 => Expr::Var(Var::Y(i)),
        2 => Expr::Var(Var::Dx(i)),
        3 => Expr::Var(Var::Dy(i)),
        4 => Expr::Int(Rat::int(r.gen_range(0..100))),
        5 => Expr::Gen(Gen::E),
        6 => Expr::Gen(Gen::Delta),
        7 => Expr::Gen(Gen::Q),
        8 => Expr::Gen(Gen::XX(i)),
        9 => Expr::Gen(Gen::YY(i)),
        10 => Expr::Gen(Gen::Dop(i, j)),
        11 => Expr::Gen(Gen::Bop(lo, hi)),
        _ => Expr::Gen(Gen::Cop(lo, hi)),
    }
}

pub fn random_expr(r: &mut ChaCha8Rng, k: usize, depth: u32) -> Expr {
    if depth == 0 || r.gen_bool(0.25) {
        return leaf(r, k);
    }
    let sub = |r: &mut ChaCha8Rng| Box::new(random_expr(r, k, depth - 1));
    match r.gen_range(0..5) {
        0 => Expr::Add(sub(r), sub(r)),
        1 => Expr::Sub(sub(r), sub(r)),
        2 => Expr::Mul(sub(r), sub(r)),
        3 => Expr::Pow(sub(r), r.gen_range(0..5)),
        _ => Expr::Neg(sub(r)),
    }
}

pub fn round_trips(e: &Expr, k: usize) -> Result<(), String> {
    let printed = e.to_string();
    match parse(&printed, k) {
        Ok(back) if back == *e => Ok(()),
        Ok(back) => Err(format!("{printed} reparsed as {back:?}, expected {e:?}")),
        Err(err) => Err(format!("{printed}: {err}")),
    }
}

/// Golden JSON cases: file stem and arguments.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("reduce_delta_q", &["reduce", "Delta*Q - Q*Delta"]),
    ("reduce_xx_yy_k3", &["--k", "3", "reduce", "XX1*YY2 - YY2*XX1"]),
    ("fourier_x1_yy2", &["fourier-transform", "x1*YY2 + 2*E"]),
    ("shapovalov_d2", &["shapovalov", "--d", "2"]),
    ("shapovalov_d1_k3", &["--k", "3", "shapovalov", "--d", "1"]),
    ("kelvin_x1_over_q", &["kelvin", "--expr", "x1 + y2^2", "--q-power", "1"]),
    ("harmonic_d2", &["harmonic", "--d", "2"]),
    ("bessel_order6", &["bessel", "--order", "6"]),
    ("boundary", &["boundary"]),
    ("counterexample_n2", &["counterexample-n2"]),
    ("moment", &["moment"]),
    ("verify_weyl", &["verify", "weyl"]),
    ("verify_shapovalov_k3", &["--k", "3", "verify", "shapovalov"]),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

pub fn json_output(args: &[&str]) -> String {
    let argv = ["quadric"].iter().chain(args).chain(&["--format", "json"]).copied().collect::<Vec<_>>();
    let out = run_args(argv);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

/// Names of golden cases whose current output differs from the checked-in file.
pub fn stale_golden() -> Vec<&'static str> {
    GOLDEN
        .iter()
        .filter(|(name, args)| std::fs::read_to_string(golden_path(name)).ok() != Some(json_output(args)))
        .map(|(name, _)| *name)
        .collect()
}
