//! Subcommands of the `quadric` binary. Every command renders its output to a
//! string and an exit status so it can be driven from tests without a process.

use clap::{Parser, Subcommand};
use quadric_core::cone::grading;
use quadric_core::harmonic::{
    bessel_check, bessel_series, boundary_phase_check, harmonic_decompose, harmonic_dimension, kelvin,
    kelvin_intertwine_check, n2_counterexample,
};
use quadric_core::lie::basis;
use quadric_core::moment::{check_descent, verify_orbit_relations};
use quadric_core::shapovalov::{
    fourier_euler, fourier_roots_bezout, shapovalov_closed, shapovalov_expand, shapovalov_factored,
};
use quadric_core::{Check, ConeOp, Grading, QLaurent, WeylOp};
use serde_json::{json, Value};

use crate::eval::{eval_cone, eval_op, eval_word, max_degree, EvalError};
use crate::parse::{parse, ParseError};
use crate::report::{Format, SuiteReport};
use crate::suites::run_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "quadric", version, about = "Exact operator identities on the split quadric cone")]
pub struct Cli {
    /// Half the dimension of the ambient space (n = 2k).
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=8))]
    pub k: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Canonical class of an operator expression.
    Reduce { expr: String },
    /// Quadric Fourier transform of a generator expression.
    FourierTransform { expr: String },
    /// Expanded and closed forms of the Shapovalov element.
    Shapovalov {
        #[arg(long, default_value_t = 1)]
        d: u32,
    },
    /// Moment map descent and orbit relations.
    Moment,
    /// Kelvin transform of `expr / Q^m`.
    Kelvin {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 0)]
        q_power: u32,
    },
    /// Harmonic decomposition of degree-`d` polynomials.
    Harmonic {
        #[arg(long, default_value_t = 2)]
        d: u32,
    },
    /// Bessel-type series annihilated by the first Fourier generator.
    Bessel {
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Boundary pairing and phase identities.
    Boundary,
    /// The two-dimensional counterexample (independent of --k).
    CounterexampleN2,
    /// Run a verification suite, or `all`.
    Verify { suite: String },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_USAGE }
    }

    fn report(r: &SuiteReport, format: Format) -> Self {
        Outcome { stdout: r.emit(format), stderr: String::new(), code: r.exit_status }
    }
}

#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Other(String),
}

/// Parses arguments and runs the command; clap errors map to exit status 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let k = cli.k as usize;
    let f = cli.format;
    let result = match &cli.command {
        Command::Reduce { expr } => reduce(expr, k, f),
        Command::FourierTransform { expr } => fourier_transform(expr, k, f),
        Command::Shapovalov { d } => return shapovalov(*d, k, f),
        Command::Moment => return moment(k, f),
        Command::Kelvin { expr, q_power } => kelvin_cmd(expr, *q_power, k, f),
        Command::Harmonic { d } => return harmonic(*d, k, f),
        Command::Bessel { order } => return bessel(*order, k, f),
        Command::Boundary => return Outcome::report(&SuiteReport::new("boundary", k, boundary_phase_check(k)), f),
        Command::CounterexampleN2 => {
            return Outcome::report(&SuiteReport::new("counterexample-n2", 1, n2_counterexample()), f)
        }
        Command::Verify { suite } => {
            return match run_suite(suite, k) {
                Ok(r) => Outcome::report(&r, f),
                Err(e) => Outcome::usage(e),
            }
        }
    };
    match result {
        Ok(o) => o,
        Err(e) => Outcome::usage(e),
    }
}

fn render(v: Value, format: Format, text: impl FnOnce(&Value) -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
            s.push('\n');
            s
        }
        Format::Text => text(&v),
    }
}

fn text_fields(v: &Value, keys: &[&str]) -> String {
    let mut s = String::new();
    for key in keys {
        let val = match &v[*key] {
            Value::String(t) => t.clone(),
            other => other.to_string(),
        };
        s.push_str(&format!("{key}: {val}\n"));
    }
    s
}

fn grading_text(op: &ConeOp) -> String {
    match grading(op) {
        Grading::Degree(d) => d.to_string(),
        Grading::Mixed => "mixed".into(),
    }
}

fn reduce(src: &str, k: usize, format: Format) -> Result<Outcome, InputError> {
    let e = parse(src, k)?;
    let op = eval_cone(&e, k)?;
    let v = json!({
        "input": e.to_string(),
        "k": k,
        "class": op.class().to_string(),
        "ambient": op.rep().to_string(),
        "grading": grading_text(&op),
        "preserves_ideal": op.preserves_ideal(),
    });
    Ok(Outcome::ok(render(v, format, |v| {
        text_fields(v, &["input", "class", "ambient", "grading", "preserves_ideal"])
    })))
}

fn fourier_transform(src: &str, k: usize, format: Format) -> Result<Outcome, InputError> {
    let e = parse(src, k)?;
    let w = eval_word(&e, k)?;
    let img = w.fourier();
    let deg = |d: Option<i64>| d.map_or(Value::Null, Value::from);
    let v = json!({
        "input": e.to_string(),
        "k": k,
        "word": w.to_string(),
        "image": img.to_string(),
        "degree": deg(w.degree()),
        "image_degree": deg(img.degree()),
        "image_class": img.eval().class().to_string(),
    });
    Ok(Outcome::ok(render(v, format, |v| {
        text_fields(v, &["input", "word", "image", "degree", "image_degree", "image_class"])
    })))
}

fn shapovalov(d: u32, k: usize, format: Format) -> Outcome {
    if d == 0 || 2 * d + 2 > max_degree() {
        return Outcome::usage(format!("--d must be between 1 and {}", (max_degree() - 2) / 2));
    }
    let op = shapovalov_expand(k, d);
    let closed = shapovalov_closed(d, k);
    let agrees = op == ConeOp::new(closed.to_weyl(k));
    let bezout = fourier_roots_bezout(d, k);
    let (a, b) = match &bezout {
        Ok((a, b)) => (Value::from(a.to_string()), Value::from(b.to_string())),
        Err(_) => (Value::Null, Value::Null),
    };
    let v = json!({
        "d": d,
        "k": k,
        "expanded_class": op.class().to_string(),
        "closed": closed.to_string(),
        "factored": shapovalov_factored(d, k),
        "fourier_image": fourier_euler(&closed, k).to_string(),
        "bezout_a": a,
        "bezout_b": b,
        "agrees": agrees,
    });
    let stdout = render(v, format, |v| {
        text_fields(v, &["factored", "closed", "fourier_image", "bezout_a", "bezout_b", "agrees", "expanded_class"])
    });
    Outcome { stdout, stderr: String::new(), code: if agrees && bezout.is_ok() { EXIT_OK } else { EXIT_FAILED } }
}

fn moment(k: usize, format: Format) -> Outcome {
    let mut checks: Vec<Check> = basis(k)
        .into_iter()
        .map(|(label, xi)| {
            let r = check_descent(&xi);
            Check::expect(format!("descent.{label}"), "moment map descends mod Q(x)", r.is_zero(), || r)
        })
        .collect();
    checks.extend(verify_orbit_relations(k));
    Outcome::report(&SuiteReport::new("moment", k, checks), format)
}

fn kelvin_cmd(src: &str, q_power: u32, k: usize, format: Format) -> Result<Outcome, InputError> {
    let e = parse(src, k)?;
    let op: WeylOp = eval_op(&e, k)?;
    if op.order().is_some_and(|o| o > 0) {
        return Err(InputError::Other(format!("'{e}' is not a function: it contains derivatives")));
    }
    let f = QLaurent::new(k, op.apply(&quadric_core::Poly::one(2 * k)), q_power);
    let kf = kelvin(&f);
    let residue = kelvin_intertwine_check(&f);
    let involutive = kelvin(&kf) == f;
    let v = json!({
        "input": f.to_string(),
        "k": k,
        "kelvin": kf.to_string(),
        "involutive": involutive,
        "intertwining_residue": residue.to_string(),
    });
    let stdout = render(v, format, |v| text_fields(v, &["input", "kelvin", "involutive", "intertwining_residue"]));
    let code = if involutive && residue.is_zero() { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome { stdout, stderr: String::new(), code })
}

fn harmonic(d: u32, k: usize, format: Format) -> Outcome {
    if d > max_degree() {
        return Outcome::usage(format!("--d exceeds the degree cap {}", max_degree()));
    }
    let h = harmonic_decompose(d, k);
    let expect = harmonic_dimension(d, k);
    let ok = h.harmonic.len() as i64 == expect;
    let v = json!({
        "d": d,
        "k": k,
        "dimension": h.harmonic.len(),
        "formula": expect,
        "basis": h.harmonic.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    });
    let stdout = render(v, format, |v| {
        let mut s = text_fields(v, &["dimension", "formula"]);
        for p in v["basis"].as_array().into_iter().flatten() {
            s.push_str(&format!("  {}\n", p.as_str().unwrap_or_default()));
        }
        s
    });
    Outcome { stdout, stderr: String::new(), code: if ok { EXIT_OK } else { EXIT_FAILED } }
}

fn bessel(order: usize, k: usize, format: Format) -> Outcome {
    if order as u32 > max_degree() {
        return Outcome::usage(format!("--order exceeds the degree cap {}", max_degree()));
    }
    let s = bessel_series(k, order);
    let checks = bessel_check(k, order);
    let ok = checks.iter().all(|c| c.passed);
    let v = json!({
        "k": k,
        "order": order,
        "coefficients": s.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "checks": checks,
    });
    let stdout = render(v, format, |v| {
        let mut out = String::from("coefficients of t^m:\n");
        for (m, c) in v["coefficients"].as_array().into_iter().flatten().enumerate() {
            out.push_str(&format!("  {m}: {}\n", c.as_str().unwrap_or_default()));
        }
        for c in &checks {
            out.push_str(&format!("{} {}  [{}]\n", if c.passed { "PASS" } else { "FAIL" }, c.id, c.anchor));
        }
        out
    });
    Outcome { stdout, stderr: String::new(), code: if ok { EXIT_OK } else { EXIT_FAILED } }
}
