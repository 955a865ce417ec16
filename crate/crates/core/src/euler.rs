//! Univariate polynomials in the Euler operator `E`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rat::Rat;
use crate::weyl::WeylOp;

/// `Σ c_j E^j`, coefficients stored from degree 0 upward without trailing
/// zeros.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EulerPoly {
    coeffs: Vec<Rat>,
}

impl EulerPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        EulerPoly { coeffs }
    }

    pub fn zero() -> Self {
        EulerPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        EulerPoly::new(vec![c])
    }

    pub fn one() -> Self {
        EulerPoly::constant(Rat::one())
    }

    /// `E + c`.
    pub fn linear(c: Rat) -> Self {
        EulerPoly::new(vec![c, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &EulerPoly) -> EulerPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Rat], i: usize| v.get(i).cloned().unwrap_or_else(Rat::zero);
        EulerPoly::new((0..n).map(|i| get(&self.coeffs, i) + get(&other.coeffs, i)).collect())
    }

    pub fn sub(&self, other: &EulerPoly) -> EulerPoly {
        self.add(&other.scale(&Rat::int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> EulerPoly {
        EulerPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &EulerPoly) -> EulerPoly {
        if self.is_zero() || other.is_zero() {
            return EulerPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        EulerPoly::new(out)
    }

    pub fn eval(&self, e: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| &(&acc * e) + c)
    }

    /// `p(aE + b)`.
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> EulerPoly {
        let lin = EulerPoly::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(EulerPoly::zero(), |acc, c| acc.mul(&lin).add(&EulerPoly::constant(c.clone())))
    }

    /// Euclidean division.
    pub fn divrem(&self, d: &EulerPoly) -> (EulerPoly, EulerPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lead_inv = d.lead().recip();
        let mut r = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = &r.lead() * &lead_inv;
            let shift = rd - dd;
            q[shift] = c.clone();
            let mut t = vec![Rat::zero(); shift];
            t.extend(d.coeffs.iter().map(|x| x * &c));
            r = r.sub(&EulerPoly::new(t));
        }
        (EulerPoly::new(q), r)
    }

    /// `(g, s, t)` with `s·self + t·other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &EulerPoly) -> (EulerPoly, EulerPoly, EulerPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (EulerPoly::one(), EulerPoly::zero());
        let (mut t0, mut t1) = (EulerPoly::zero(), EulerPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lead().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// The operator `p(E)` on `2k` variables.
    pub fn to_weyl(&self, k: usize) -> WeylOp {
        let n = 2 * k;
        let e = WeylOp::euler(n);
        self.coeffs.iter().rev().fold(WeylOp::zero(n), |acc, c| {
            let shifted = &acc * &e;
            if c.is_zero() {
                shifted
            } else {
                &shifted + &WeylOp::constant(n, c.clone())
            }
        })
    }
}

impl fmt::Display for EulerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match j {
                0 => String::new(),
                1 => "E".to_string(),
                _ => format!("E^{j}"),
            };
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EulerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_for_coprime_squares() {
        let e2 = EulerPoly::new(vec![Rat::zero(), Rat::zero(), Rat::one()]);
        let f = EulerPoly::linear(Rat::int(2)).mul(&EulerPoly::linear(Rat::int(2)));
        let (g, s, t) = e2.ext_gcd(&f);
        assert!(g.is_one());
        assert!(s.mul(&e2).add(&t.mul(&f)).is_one());
    }

    #[test]
    fn compose_and_eval() {
        let p = EulerPoly::new(vec![Rat::int(1), Rat::int(2), Rat::int(3)]);
        let q = p.compose_affine(&Rat::int(-1), &Rat::int(4));
        for e in -3..4 {
            let e = Rat::int(e);
            assert_eq!(q.eval(&e), p.eval(&(Rat::int(4) - &e)));
        }
        assert_eq!(p.to_string(), "3*E^2 + 2*E + 1");
    }

    #[test]
    fn divrem_reconstructs() {
        let a = EulerPoly::new((0..6).map(|i| Rat::int(i * i - 3)).collect());
        let b = EulerPoly::new(vec![Rat::int(1), Rat::int(0), Rat::new(1, 2)]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }
}
