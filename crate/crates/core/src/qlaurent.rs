//! Functions of the form `N / Q^m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::forms::q_form;
use crate::poly::Poly;
use crate::rat::Rat;

/// `numerator / Q^qexp`, normalized so that `Q` does not divide the numerator
/// when `qexp > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QLaurent {
    k: usize,
    numerator: Poly,
    qexp: u32,
}

impl QLaurent {
    pub fn new(k: usize, numerator: Poly, qexp: u32) -> Self {
        assert_eq!(numerator.nvars(), 2 * k, "numerator ring mismatch");
        let mut out = QLaurent { k, numerator, qexp };
        out.normalize();
        out
    }

    pub fn from_poly(k: usize, p: Poly) -> Self {
        QLaurent::new(k, p, 0)
    }

    pub fn zero(k: usize) -> Self {
        QLaurent::from_poly(k, Poly::zero(2 * k))
    }

    pub fn one(k: usize) -> Self {
        QLaurent::from_poly(k, Poly::one(2 * k))
    }

    /// `Q^e` for any integer `e`.
    pub fn q_pow(k: usize, e: i32) -> Self {
        if e >= 0 {
            QLaurent::from_poly(k, q_form(k).pow(e as u32))
        } else {
            QLaurent::new(k, Poly::one(2 * k), (-e) as u32)
        }
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.qexp = 0;
            return;
        }
        if self.qexp == 0 {
            return;
        }
        let q = q_form(self.k);
        while self.qexp > 0 {
            match self.numerator.div_exact(&q) {
                Some(quot) => {
                    self.numerator = quot;
                    self.qexp -= 1;
                }
                None => break,
            }
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn qexp(&self) -> u32 {
        self.qexp
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.qexp == 0
    }

    pub fn to_poly(&self) -> Option<Poly> {
        self.is_poly().then(|| self.numerator.clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QLaurent::new(self.k, self.numerator.scale(c), self.qexp)
    }

    fn lift(&self, m: u32) -> Poly {
        &self.numerator * &q_form(self.k).pow(m - self.qexp)
    }

    pub fn partial(&self, i: usize) -> Self {
        let n = &self.numerator;
        if self.qexp == 0 {
            return QLaurent::from_poly(self.k, n.derivative(i));
        }
        let q = q_form(self.k);
        let m = Rat::int(self.qexp as i64);
        let num = &(&n.derivative(i) * &q) - &(n * &q.derivative(i)).scale(&m);
        QLaurent::new(self.k, num, self.qexp + 1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QLaurent::one(self.k);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

/// Substitutes Q-Laurent values into a polynomial.
pub fn eval_poly_at(p: &Poly, vals: &[QLaurent]) -> QLaurent {
    assert_eq!(p.nvars(), vals.len(), "substitution arity");
    let k = vals[0].k;
    let mut cache: Vec<Vec<QLaurent>> = vals.iter().map(|v| vec![QLaurent::one(k), v.clone()]).collect();
    let mut acc = QLaurent::zero(k);
    for (m, c) in p.terms() {
        let mut t = QLaurent::from_poly(k, Poly::constant(2 * k, c.clone()));
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while cache[i].len() <= e as usize {
                let next = cache[i].last().unwrap() * &vals[i];
                cache[i].push(next);
            }
            t = &t * &cache[i][e as usize];
        }
        acc = &acc + &t;
    }
    acc
}

impl Add<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        assert_eq!(self.k, rhs.k, "ambient mismatch");
        let m = self.qexp.max(rhs.qexp);
        QLaurent::new(self.k, &self.lift(m) + &rhs.lift(m), m)
    }
}

impl Sub<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        self + &(-rhs)
    }
}

impl Mul<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        assert_eq!(self.k, rhs.k, "ambient mismatch");
        QLaurent::new(self.k, &self.numerator * &rhs.numerator, self.qexp + rhs.qexp)
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent { k: self.k, numerator: -&self.numerator, qexp: self.qexp }
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qexp {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/Q", self.numerator),
            m => write!(f, "({})/Q^{}", self.numerator, m),
        }
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(k: usize, i: usize) -> QLaurent {
        QLaurent::from_poly(k, Poly::var(2 * k, i))
    }

    #[test]
    fn derivative_of_inverse_q() {
        let k = 2;
        let inv = QLaurent::q_pow(k, -1);
        let d = inv.partial(0);
        let expect = QLaurent::new(k, -Poly::var(4, 3), 2);
        assert_eq!(d, expect);
    }

    #[test]
    fn normalization() {
        let k = 2;
        let prod = &QLaurent::q_pow(k, -1) * &QLaurent::q_pow(k, 1);
        assert_eq!(prod, QLaurent::one(k));
        assert!(prod.is_poly());
    }

    #[test]
    fn quotient_rule_reduces() {
        let k = 2;
        let f = &var(k, 0) * &QLaurent::q_pow(k, -1);
        let d = f.partial(0);
        let x2y1 = &Poly::var(4, 1) * &Poly::var(4, 2);
        assert_eq!(d, QLaurent::new(k, x2y1, 2));
    }
}
