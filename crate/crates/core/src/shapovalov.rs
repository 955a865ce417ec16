//! The Shapovalov element `𝔅_d` of the `dω₁` tower: its multinomial
//! expansion, closed form in `E`, and the coprimality certificate.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cone::{grading, ConeOp, Grading};
use crate::error::{Error, Result};
use crate::euler::EulerPoly;
use crate::poly::{Monomial, Poly};
use crate::rat::{factorial, Rat};
use crate::weyl::WeylOp;
use crate::words::{GenWord, Generator};

/// All exponent vectors of length `parts` summing to `d`.
pub fn compositions(parts: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(parts: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == parts {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=d).rev() {
            cur.push(a);
            go(parts, d - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(parts, d, &mut Vec::with_capacity(parts), &mut out);
    out
}

fn multinomial(d: u32, parts: &[u32]) -> Rat {
    parts.iter().fold(factorial(d), |acc, &a| &acc / &factorial(a))
}

/// The word `Σ d!/(α!β!) xᵅ yᵝ 𝔜_{k+1−i}^{α_i} 𝔛_{k+1−i}^{β_i}` obtained from
/// `B(x,y)^d` with the Fourier transform on the second factor.
pub fn shapovalov_word(k: usize, d: u32) -> GenWord {
    let mut acc = GenWord::zero(k);
    for e in compositions(2 * k, d) {
        acc = acc.add(&GenWord::word(k, letters_for(k, &e), multinomial(d, &e)));
    }
    acc
}

fn letters_for(k: usize, e: &[u32]) -> Vec<Generator> {
    let (alpha, beta) = e.split_at(k);
    let mut letters = Vec::new();
    for i in 1..=k {
        letters.extend(std::iter::repeat_n(Generator::X(i), alpha[i - 1] as usize));
        letters.extend(std::iter::repeat_n(Generator::Y(i), beta[i - 1] as usize));
    }
    for i in 1..=k {
        letters.extend(std::iter::repeat_n(Generator::YY(k + 1 - i), alpha[i - 1] as usize));
        letters.extend(std::iter::repeat_n(Generator::XX(k + 1 - i), beta[i - 1] as usize));
    }
    letters
}

/// `𝔅_d` as a cone operator. Multinomial terms are evaluated in parallel and
/// summed in a fixed order.
pub fn shapovalov_expand(k: usize, d: u32) -> ConeOp {
    let n = 2 * k;
    let gens: BTreeMap<Generator, WeylOp> = Generator::all(k).into_iter().map(|g| (g, g.rep(k))).collect();
    let comps = compositions(n, d);
    let pieces: Vec<WeylOp> = comps
        .par_iter()
        .map(|e| {
            let mut mono = Monomial::one(n);
            for (j, &a) in e.iter().enumerate() {
                mono.set(j, a as u16);
            }
            let mut op = WeylOp::mult(&Poly::term(mono, multinomial(d, e)));
            for g in letters_for(k, e).into_iter().filter(|g| g.degree() < 0) {
                op = &op * &gens[&g];
            }
            op
        })
        .collect();
    let rep = pieces.iter().fold(WeylOp::zero(n), |acc, p| &acc + p);
    ConeOp::new(rep)
}

/// `Π_{j=1}^d (E−j+1)·Π_{j=1}^d (E+k−j−1)`.
pub fn shapovalov_closed(d: u32, k: usize) -> EulerPoly {
    shapovalov_roots(d, k)
        .into_iter()
        .fold(EulerPoly::one(), |acc, r| acc.mul(&EulerPoly::linear(-Rat::int(r))))
}

/// Roots of the closed form with multiplicity, in factor order.
pub fn shapovalov_roots(d: u32, k: usize) -> Vec<i64> {
    let (d, k) = (d as i64, k as i64);
    (1..=d).map(|j| j - 1).chain((1..=d).map(|j| j + 1 - k)).collect()
}

/// The closed form as a product of linear factors, e.g. `E^2*(E - 1)*(E + 1)`.
pub fn shapovalov_factored(d: u32, k: usize) -> String {
    let mut mult: BTreeMap<i64, u32> = BTreeMap::new();
    for r in shapovalov_roots(d, k) {
        *mult.entry(r).or_insert(0) += 1;
    }
    let factors: Vec<String> = mult
        .iter()
        .rev()
        .map(|(&r, &m)| {
            let base = match r.cmp(&0) {
                std::cmp::Ordering::Equal => "E".to_string(),
                std::cmp::Ordering::Greater => format!("(E - {r})"),
                std::cmp::Ordering::Less => format!("(E + {})", -r),
            };
            if m == 1 {
                base
            } else {
                format!("{base}^{m}")
            }
        })
        .collect();
    factors.join("*")
}

/// The Fourier transform on `κ[E]`: `E ↦ −E−2k+2`.
pub fn fourier_euler(p: &EulerPoly, k: usize) -> EulerPoly {
    p.compose_affine(&Rat::int(-1), &Rat::int(2 - 2 * k as i64))
}

/// `(a, b)` with `a·𝔅_d + b·𝓕(𝔅_d) = 1`, checked by expansion.
pub fn fourier_roots_bezout(d: u32, k: usize) -> Result<(EulerPoly, EulerPoly)> {
    let p = shapovalov_closed(d, k);
    let fp = fourier_euler(&p, k);
    let (g, a, b) = p.ext_gcd(&fp);
    if !g.is_one() {
        return Err(Error::TheoryViolation(format!("gcd(B_{d}, F(B_{d})) = {g} for k={k}")));
    }
    if !a.mul(&p).add(&b.mul(&fp)).is_one() {
        return Err(Error::TheoryViolation("Bezout certificate does not expand to 1".into()));
    }
    Ok((a, b))
}

/// The scalar by which a degree-0 operator acts on the degree-`r` functions
/// on the cone, read off from `x1^r` and confirmed on `y1^r`.
pub fn scalar_on_graded(op: &ConeOp, r: u32) -> Result<Rat> {
    if grading(op) != Grading::Degree(0) {
        return Err(Error::NotScalar { degree: r });
    }
    let k = op.k();
    let n = 2 * k;
    let mut c: Option<Rat> = None;
    for var in [0, k] {
        let mut m = Monomial::one(n);
        m.set(var, r as u16);
        let f = Poly::term(m.clone(), Rat::one());
        let g = op.apply(&f);
        let s = g.coeff(&m);
        if g != f.scale(&s) {
            return Err(Error::NotScalar { degree: r });
        }
        match &c {
            None => c = Some(s),
            Some(c0) if *c0 != s => return Err(Error::NotScalar { degree: r }),
            _ => {}
        }
    }
    Ok(c.unwrap_or_else(Rat::zero))
}
