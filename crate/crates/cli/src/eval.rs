//! Evaluation of parsed expressions to ambient operators and generator words.

use quadric_core::cone::ConeOp;
use quadric_core::forms::q_form;
use quadric_core::{GenWord, Generator, Rat, WeylOp};
use thiserror::Error;

use crate::parse::{Expr, Gen, Var};

/// Environment variable bounding the degree of any symbolic computation.
pub const MAX_DEGREE_ENV: &str = "QUADRIC_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: u32 = 48;

pub fn max_degree() -> u32 {
    std::env::var(MAX_DEGREE_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_DEGREE)
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum EvalError {
    #[error("expression degree bound {bound} exceeds the cap {cap} (set {MAX_DEGREE_ENV} to raise it)")]
    TooLarge { bound: u64, cap: u32 },
    #[error("{0} is not a generator of the cone operator algebra")]
    NotAGenerator(String),
}

/// Upper bound on coefficient degree plus order.
pub fn degree_bound(e: &Expr) -> u64 {
    match e {
        Expr::Var(_) => 1,
        Expr::Int(_) => 0,
        Expr::Gen(g) => match g {
            Gen::E | Gen::Delta | Gen::Q => 2,
            Gen::XX(_) | Gen::YY(_) => 3,
            _ => 2,
        },
        Expr::Add(a, b) | Expr::Sub(a, b) => degree_bound(a).max(degree_bound(b)),
        Expr::Mul(a, b) => degree_bound(a) + degree_bound(b),
        Expr::Pow(a, n) => degree_bound(a).saturating_mul(*n as u64),
        Expr::Neg(a) => degree_bound(a),
    }
}

fn check_cap(e: &Expr) -> Result<(), EvalError> {
    let bound = degree_bound(e);
    let cap = max_degree();
    if bound > cap as u64 {
        return Err(EvalError::TooLarge { bound, cap });
    }
    Ok(())
}

fn generator(g: Gen) -> Option<Generator> {
    Some(match g {
        Gen::XX(i) => Generator::XX(i),
        Gen::YY(i) => Generator::YY(i),
        Gen::Dop(i, j) => Generator::D(i, j),
        Gen::Bop(i, j) => Generator::B(i, j),
        Gen::Cop(i, j) => Generator::C(i, j),
        _ => return None,
    })
}

fn leaf_op(e: &Expr, k: usize) -> WeylOp {
    let n = 2 * k;
    match e {
        Expr::Var(Var::X(i)) => WeylOp::var(n, i - 1),
        Expr::Var(Var::Y(i)) => WeylOp::var(n, k + i - 1),
        Expr::Var(Var::Dx(i)) => WeylOp::partial(n, i - 1),
        Expr::Var(Var::Dy(i)) => WeylOp::partial(n, k + i - 1),
        Expr::Int(c) => WeylOp::constant(n, c.clone()),
        Expr::Gen(Gen::E) => WeylOp::euler(n),
        Expr::Gen(Gen::Delta) => WeylOp::laplacian(k),
        Expr::Gen(Gen::Q) => WeylOp::mult(&q_form(k)),
        Expr::Gen(g) => generator(*g).expect("remaining tokens are generators").rep(k),
        _ => unreachable!("not a leaf"),
    }
}

/// The ambient operator on `2k` variables.
pub fn eval_op(e: &Expr, k: usize) -> Result<WeylOp, EvalError> {
    check_cap(e)?;
    Ok(eval_op_unchecked(e, k))
}

fn eval_op_unchecked(e: &Expr, k: usize) -> WeylOp {
    match e {
        Expr::Add(a, b) => &eval_op_unchecked(a, k) + &eval_op_unchecked(b, k),
        Expr::Sub(a, b) => &eval_op_unchecked(a, k) - &eval_op_unchecked(b, k),
        Expr::Mul(a, b) => &eval_op_unchecked(a, k) * &eval_op_unchecked(b, k),
        Expr::Pow(a, n) => eval_op_unchecked(a, k).pow(*n),
        Expr::Neg(a) => -&eval_op_unchecked(a, k),
        leaf => leaf_op(leaf, k),
    }
}

pub fn eval_cone(e: &Expr, k: usize) -> Result<ConeOp, EvalError> {
    Ok(ConeOp::new(eval_op(e, k)?))
}

/// The expression as a word in the generators, with `E = Ẽ − (k−1)` and
/// `Q = Σ x_i y_{k+1−i}`.
pub fn eval_word(e: &Expr, k: usize) -> Result<GenWord, EvalError> {
    check_cap(e)?;
    word_unchecked(e, k)
}

fn word_unchecked(e: &Expr, k: usize) -> Result<GenWord, EvalError> {
    Ok(match e {
        Expr::Add(a, b) => word_unchecked(a, k)?.add(&word_unchecked(b, k)?),
        Expr::Sub(a, b) => word_unchecked(a, k)?.sub(&word_unchecked(b, k)?),
        Expr::Mul(a, b) => word_unchecked(a, k)?.mul(&word_unchecked(b, k)?),
        Expr::Pow(a, n) => word_unchecked(a, k)?.pow(*n),
        Expr::Neg(a) => word_unchecked(a, k)?.scale(&Rat::int(-1)),
        Expr::Int(c) => GenWord::scalar(k, c.clone()),
        Expr::Var(Var::X(i)) => GenWord::letter(k, Generator::X(*i)),
        Expr::Var(Var::Y(i)) => GenWord::letter(k, Generator::Y(*i)),
        Expr::Var(v) => return Err(EvalError::NotAGenerator(v.to_string())),
        Expr::Gen(Gen::E) => {
            GenWord::letter(k, Generator::ETilde).sub(&GenWord::scalar(k, Rat::int(k as i64 - 1)))
        }
        Expr::Gen(Gen::Q) => (1..=k).fold(GenWord::zero(k), |acc, i| {
            acc.add(&GenWord::word(k, vec![Generator::X(i), Generator::Y(k + 1 - i)], Rat::int(1)))
        }),
        Expr::Gen(Gen::Delta) => return Err(EvalError::NotAGenerator("Delta".into())),
        Expr::Gen(g) => GenWord::letter(k, generator(*g).expect("generator token")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use quadric_core::cone::euler_shift;

    #[test]
    fn delta_q_commutator() {
        for k in [2, 3] {
            let e = parse("Delta*Q - Q*Delta", k).unwrap();
            assert_eq!(eval_op(&e, k).unwrap(), euler_shift(k, k as i64));
        }
    }

    #[test]
    fn fourier_images_commute() {
        let k = 2;
        let e = parse("XX1*YY2 - YY2*XX1", k).unwrap();
        assert!(eval_cone(&e, k).unwrap().is_zero());
    }

    #[test]
    fn word_and_operator_evaluations_agree() {
        let k = 2;
        let e = parse("x1*XX2 + 3*Q*E - Dop12^2 + (Bop12 - Cop12)*y1", k).unwrap();
        let w = eval_word(&e, k).unwrap();
        assert_eq!(w.eval(), eval_cone(&e, k).unwrap());
        assert!(eval_word(&parse("Delta", k).unwrap(), k).is_err());
    }

    #[test]
    fn cap() {
        let e = parse("x1^1000", 2).unwrap();
        assert!(matches!(eval_op(&e, 2), Err(EvalError::TooLarge { .. })));
    }
}
