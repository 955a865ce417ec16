//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the summary lines are always printed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};

use quadric_cli::suites::{suite_checks, WORD_CORPUS};
use quadric_core::lie::basis;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const KS: [usize; 2] = [2, 3];

fn basis_len(k: usize) -> usize {
    basis(k).len()
}

/// Runs `suite` and keeps the checks whose id starts with one of `prefixes`;
/// fails if any kept check fails or if fewer than `min` were kept.
fn require(suite: &str, k: usize, prefixes: &[&str], min: usize) -> Result<usize, String> {
    let checks = suite_checks(suite, k).map_err(|e| e.to_string())?;
    let kept: Vec<_> = checks.iter().filter(|c| prefixes.iter().any(|p| c.id.starts_with(p))).collect();
    let failed: Vec<String> =
        kept.iter().filter(|c| !c.passed).map(|c| format!("{} (k={k}): {}", c.id, c.residue)).collect();
    if !failed.is_empty() {
        return Err(failed.join("; "));
    }
    if kept.len() < min {
        return Err(format!("{suite} k={k}: expected at least {min} checks for {prefixes:?}, found {}", kept.len()));
    }
    Ok(kept.len())
}

fn over_ks(suite: &str, prefixes: &[&str], min: impl Fn(usize) -> usize) -> Outcome {
    let mut total = 0;
    for k in KS {
        total += require(suite, k, prefixes, min(k))?;
    }
    Ok(format!("{total} exact checks over k in {{2,3}}"))
}

fn criterion_01_commutator_law() -> Outcome {
    over_ks("weyl", &["commutator-law."], basis_len)
}

fn criterion_02_fourier_bridge() -> Outcome {
    over_ks("cone-ops", &["tau-phi.", "conjugation."], |k| 2 * basis_len(k))
}

fn criterion_03_lie_homomorphism() -> Outcome {
    over_ks("lie-hom", &["hom."], |k| basis_len(k) * (basis_len(k) - 1) / 2)
}

fn criterion_04_quadric_fourier_relations() -> Outcome {
    if WORD_CORPUS != 500 {
        return Err(format!("word corpus has {WORD_CORPUS} words, expected 500"));
    }
    over_ks("fourier", &["commute.", "fundamental-relation", "involution.corpus"], |k| k * k + 2)
}

fn criterion_05_shapovalov() -> Outcome {
    over_ks("shapovalov", &["closed-form.", "scalars.", "bezout."], |_| 9)
}

fn criterion_06_moment_and_orbit() -> Outcome {
    over_ks("moment-orbit", &["descent.", "orbit."], |k| basis_len(k) + 10)
}

fn criterion_07_symbol_bridge() -> Outcome {
    over_ks("symbol", &["table.", "q-star-q"], |k| basis_len(k) + 1)
}

fn criterion_08_kelvin() -> Outcome {
    over_ks("kelvin", &["involution", "intertwining", "harmonic-one"], |_| 3)
}

fn criterion_09_higher_symmetry() -> Outcome {
    over_ks("higher-symmetry", &["phi.", "reject.x1", "reject.dyk"], |k| basis_len(k) + 2)
}

fn criterion_10_examples() -> Outcome {
    over_ks(
        "examples",
        &["dirac.", "bessel.", "exp.", "boundary.", "non-example", "n2."],
        |_| 6,
    )
}

fn criterion_11_harmonic_dimensions() -> Outcome {
    over_ks("harmonic", &["dimension."], |_| 6)
}

fn criterion_12_infrastructure() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(common::CORPUS_SEED);
    for n in 0..common::CORPUS {
        let k = 2 + n % 3;
        common::round_trips(&common::random_expr(&mut r, k, 5), k)?;
    }
    let stale = common::stale_golden();
    if !stale.is_empty() {
        return Err(format!("golden files out of date: {stale:?}"));
    }
    for k in ["2", "3"] {
        let out = Command::new(env!("CARGO_BIN_EXE_quadric"))
            .args(["--k", k, "verify", "all"])
            .output()
            .map_err(|e| e.to_string())?;
        if out.status.code() != Some(0) {
            let text = String::from_utf8_lossy(&out.stdout);
            let fails: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
            return Err(format!("verify all --k {k} exited with {:?}: {fails:?}", out.status.code()));
        }
    }
    Ok(format!(
        "{} expressions round-trip, {} golden files match, verify all exits 0 for k=2 and k=3",
        common::CORPUS,
        common::GOLDEN.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("commutator law [phi(xi), Delta] = 2(B(lambda,v) - alpha) Delta", criterion_01_commutator_law),
        ("Fourier bridge tau(phi) = rho_amb and corrected conjugation by Q*", criterion_02_fourier_bridge),
        ("Lie homomorphism into the cone operator algebra", criterion_03_lie_homomorphism),
        ("quadric Fourier relations and involution on 500 words", criterion_04_quadric_fourier_relations),
        ("Shapovalov closed form, pointwise scalars and Bezout certificate", criterion_05_shapovalov),
        ("moment map descent and orbit relations", criterion_06_moment_and_orbit),
        ("principal symbols match the invariant table; {Q*,Q} is the phase Euler function", criterion_07_symbol_bridge),
        ("Kelvin involution, intertwining and harmonicity of K(1)", criterion_08_kelvin),
        ("higher-symmetry decision procedure", criterion_09_higher_symmetry),
        ("worked examples", criterion_10_examples),
        ("harmonic dimensions for d <= 5", criterion_11_harmonic_dimensions),
        ("parser round-trip, golden JSON, verify all", criterion_12_infrastructure),
    ];
    // Failures are reported on the summary line, not as panic backtraces.
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("criterion {:02} PASS  {title}  ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:02} FAIL  {title}  ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
