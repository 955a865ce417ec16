//! Sparse commutative polynomials over ℚ.
//!
//! Monomials are ordered graded-lexicographically with variable 0 largest, so
//! with the coordinate layout `x1..xk, y1..yk` the leading term of the
//! quadratic form is `x1*yk`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{check_same, Error, Result};
use crate::rat::Rat;

/// Exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 16]>);

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u16>) -> Self {
        Monomial(exps.into_iter().collect())
    }

    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.0[i] = 1;
        m
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, e: u16) {
        self.0[i] = e;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    /// Copies the exponents into a ring with `n` variables starting at `offset`.
    pub fn embed(&self, n: usize, offset: usize) -> Monomial {
        let mut m = Monomial::one(n);
        m.0[offset..offset + self.len()].copy_from_slice(&self.0);
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// All monomials of total degree `d` in `n` variables, in descending order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur.push(left as u16);
            out.push(Monomial::new(cur.iter().copied()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u16);
            rec(n, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, 0, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All monomials of degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|e| monomials_of_degree(n, e)).collect()
}

/// Standard coordinate names `x1..xk, y1..yk`.
pub fn coordinate_names(k: usize) -> Vec<String> {
    (1..=k)
        .map(|i| format!("x{i}"))
        .chain((1..=k).map(|i| format!("y{i}")))
        .collect()
}

/// Sparse polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Poly::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Poly::term(Monomial::unit(nvars, i), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut p = Poly::zero(m.len());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial length mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        check_same(self.nvars, other.nvars)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        check_same(self.nvars, other.nvars)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        check_same(self.nvars, other.nvars)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e > 0 {
                let mut m2 = m.clone();
                m2.set(i, e - 1);
                out.terms.insert(m2, c * Rat::int(e as i64));
            }
        }
        out
    }

    /// Applies `∂^β`.
    pub fn derivative_multi(&self, beta: &Monomial) -> Poly {
        let mut out = Poly::zero(self.nvars);
        'terms: for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut m2 = m.clone();
            for (i, &b) in beta.exps().iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let e = m.get(i);
                if e < b {
                    continue 'terms;
                }
                let mut f: i64 = 1;
                for j in 0..b {
                    f *= (e - j) as i64;
                }
                coef *= &Rat::int(f);
                m2.set(i, e - b);
            }
            out.add_term(m2, coef);
        }
        out
    }

    /// Substitutes `vals[i]` for variable `i`. All values must share a ring.
    pub fn substitute(&self, vals: &[Poly]) -> Poly {
        assert_eq!(vals.len(), self.nvars, "substitution arity");
        let target = vals.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: Vec<Vec<Poly>> = vals.iter().map(|v| vec![Poly::one(target), v.clone()]).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
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
            out = &out + &t;
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars, "evaluation arity");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= &point[i].pow(e as u32);
                }
            }
            acc += &t;
        }
        acc
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Moves the polynomial into a ring with `n` variables, placing variable
    /// `i` at position `offset + i`.
    pub fn embed(&self, n: usize, offset: usize) -> Poly {
        assert!(offset + self.nvars <= n, "embedding out of range");
        Poly {
            nvars: n,
            terms: self.terms.iter().map(|(m, c)| (m.embed(n, offset), c.clone())).collect(),
        }
    }

    /// Division with remainder by a single polynomial: `self = q*d + r` where
    /// no monomial of `r` is divisible by the leading monomial of `d`.
    pub fn normal_form_mod(&self, d: &Poly) -> Result<(Poly, Poly)> {
        check_same(self.nvars, d.nvars)?;
        let (lm, lc) = d.leading_term().ok_or(Error::ZeroDivisor)?;
        let lm = lm.clone();
        let lc_inv = lc.recip();
        let mut tail = d.clone();
        tail.terms.remove(&lm);
        let mut work = self.terms.clone();
        let mut q = Poly::zero(self.nvars);
        let mut r = Poly::zero(self.nvars);
        while let Some((m, c)) = work.pop_last() {
            if lm.divides(&m) {
                let t = m.div(&lm);
                let coef = &c * &lc_inv;
                for (tm, tc) in &tail.terms {
                    let key = tm.mul(&t);
                    let delta = -(tc * &coef);
                    match work.entry(key) {
                        std::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut o) => {
                            *o.get_mut() += &delta;
                            if o.get().is_zero() {
                                o.remove();
                            }
                        }
                    }
                }
                q.terms.insert(t, coef);
            } else {
                r.terms.insert(m, c);
            }
        }
        Ok((q, r))
    }

    /// Remainder of [`Poly::normal_form_mod`].
    pub fn reduce(&self, d: &Poly) -> Poly {
        self.normal_form_mod(d).expect("reduction by a nonzero divisor").1
    }

    /// Exact quotient `self / d` when `d` divides `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        match self.normal_form_mod(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms().enumerate() {
            let mono = monomial_string(m, names);
            let (neg, abs) = (c.is_negative(), c.abs());
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => s.push_str(&abs.to_string()),
                (false, true) => s.push_str(&mono),
                (false, false) => {
                    s.push_str(&abs.to_string());
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }

    fn default_names(&self) -> Vec<String> {
        if self.nvars % 2 == 0 {
            coordinate_names(self.nvars / 2)
        } else {
            (1..=self.nvars).map(|i| format!("z{i}")).collect()
        }
    }
}

pub(crate) fn monomial_string(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&self.default_names()))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<u16>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    exponents: m.exps().to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PolyJson::deserialize(d)?;
        let mut p = Poly::zero(j.nvars);
        for t in j.terms {
            if t.exponents.len() != j.nvars {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let c: Rat = format!("{}/{}", t.num, t.den).parse().map_err(D::Error::custom)?;
            p.add_term(Monomial::new(t.exponents), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::q_form;

    fn v(k: usize, name: &str) -> Poly {
        let names = coordinate_names(k);
        Poly::var(2 * k, names.iter().position(|n| n == name).unwrap())
    }

    #[test]
    fn difference_of_squares() {
        let (x1, y1) = (v(2, "x1"), v(2, "y1"));
        assert_eq!((&x1 + &y1) * (&x1 - &y1), &x1 * &x1 - &y1 * &y1);
    }

    #[test]
    fn q_squared_cross_coefficient() {
        let q = q_form(2);
        let m = Monomial::new([1, 1, 1, 1]);
        assert_eq!((&q * &q).coeff(&m), Rat::int(2));
        assert_eq!(&q * &Poly::one(4), q);
    }

    #[test]
    fn leading_term_of_q() {
        let q = q_form(3);
        let (m, _) = q.leading_term().unwrap();
        assert_eq!(m, &Monomial::new([1, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn normal_form_examples() {
        let q = q_form(2);
        let (x1, x2, y1, y2) = (v(2, "x1"), v(2, "x2"), v(2, "y1"), v(2, "y2"));
        assert_eq!((&x1 * &y2).reduce(&q), -(&x2 * &y1));
        assert!(q.reduce(&q).is_zero());
        let p = &x1 * &x1 * &y2 * &y1;
        let (quot, r) = p.normal_form_mod(&q).unwrap();
        assert_eq!(r, -(&x1 * &x2 * &y1 * &y1));
        assert_eq!(&quot * &q + &r, p);
    }

    #[test]
    fn zero_divisor_and_mismatch() {
        let p = Poly::one(4);
        assert_eq!(p.normal_form_mod(&Poly::zero(4)), Err(Error::ZeroDivisor));
        assert!(p.try_add(&Poly::one(6)).is_err());
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_up_to(4, 2).len(), 15);
        let ms = monomials_of_degree(3, 3);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn display_and_json() {
        let q = q_form(2);
        let p = &q.scale(&Rat::new(1, 2)) - &Poly::one(4);
        assert_eq!(p.to_string(), "1/2*x1*y2 + 1/2*x2*y1 - 1");
        let s = serde_json::to_string(&p).unwrap();
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn substitution_and_eval() {
        let q = q_form(2);
        let vars: Vec<Poly> = (0..4).map(|i| Poly::var(4, i).scale(&Rat::int(2))).collect();
        assert_eq!(q.substitute(&vars), q.scale(&Rat::int(4)));
        let pt = [Rat::int(1), Rat::int(2), Rat::int(3), Rat::int(4)];
        assert_eq!(q.eval(&pt), Rat::int(1 * 4 + 2 * 3));
    }
}
