//! The Weyl algebra: polynomial-coefficient differential operators, stored in
//! x-left normal order `Σ c x^α ∂^β`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_same, Error, Result};
use crate::forms::bar;
use crate::poly::{coordinate_names, monomial_string, monomials_up_to, Monomial, Poly};
use crate::qlaurent::QLaurent;
use crate::rat::Rat;

/// Exponents of one normal-ordered term `x^x ∂^d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylMono {
    pub x: Monomial,
    pub d: Monomial,
}

impl Ord for WeylMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d
            .degree()
            .cmp(&other.d.degree())
            .then_with(|| self.d.cmp(&other.d))
            .then_with(|| self.x.cmp(&other.x))
    }
}

impl PartialOrd for WeylMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn add_into<K: Ord>(map: &mut BTreeMap<K, Rat>, key: K, c: Rat) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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

/// `C(b, e) * a!/(a-e)!`, the coefficient picked up when `e` derivatives of
/// `∂^b` are spent on `x^a`.
fn exchange_weight(b: u16, a: u16, e: u16) -> u128 {
    let mut w: u128 = 1;
    for j in 0..e as u128 {
        w = w * (b as u128 - j) / (j + 1);
    }
    for j in 0..e as u128 {
        w *= a as u128 - j;
    }
    w
}

/// Enumerates all `ε ≤ min(b, a)` componentwise together with the product of
/// exchange weights; `sign` alternates by `|ε|` when set.
fn exchanges(b: &Monomial, a: &Monomial, sign: bool, mut f: impl FnMut(&Monomial, Rat)) {
    let n = b.len();
    let caps: Vec<u16> = (0..n).map(|i| b.get(i).min(a.get(i))).collect();
    let mut eps = Monomial::one(n);
    loop {
        let mut small: Option<u128> = Some(1);
        let mut big = BigInt::one();
        for i in 0..n {
            let e = eps.get(i);
            if e == 0 {
                continue;
            }
            let w = exchange_weight(b.get(i), a.get(i), e);
            small = small.and_then(|s| s.checked_mul(w));
            big *= BigInt::from(w);
        }
        let mut c = match small {
            Some(s) => Rat::from_bigint(BigInt::from(s)),
            None => Rat::from_bigint(big),
        };
        if sign && eps.degree() % 2 == 1 {
            c = -c;
        }
        f(&eps, c);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if eps.get(i) < caps[i] {
                eps.set(i, eps.get(i) + 1);
                break;
            }
            eps.set(i, 0);
            i += 1;
        }
    }
}

/// Differential operator with polynomial coefficients on `nvars` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylOp {
    nvars: usize,
    terms: BTreeMap<WeylMono, Rat>,
}

impl WeylOp {
    pub fn zero(nvars: usize) -> Self {
        WeylOp { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        WeylOp::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        WeylOp::term(Monomial::one(nvars), Monomial::one(nvars), c)
    }

    pub fn term(x: Monomial, d: Monomial, c: Rat) -> Self {
        assert_eq!(x.len(), d.len(), "exponent length mismatch");
        let mut op = WeylOp::zero(x.len());
        add_into(&mut op.terms, WeylMono { x, d }, c);
        op
    }

    /// Multiplication by a polynomial.
    pub fn mult(p: &Poly) -> Self {
        let n = p.nvars();
        let mut op = WeylOp::zero(n);
        for (m, c) in p.terms() {
            op.terms.insert(WeylMono { x: m.clone(), d: Monomial::one(n) }, c.clone());
        }
        op
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        WeylOp::term(Monomial::unit(nvars, i), Monomial::one(nvars), Rat::one())
    }

    pub fn partial(nvars: usize, i: usize) -> Self {
        WeylOp::term(Monomial::one(nvars), Monomial::unit(nvars, i), Rat::one())
    }

    /// Constant-coefficient operator `p(∂)`.
    pub fn from_symbol(p: &Poly) -> Self {
        let n = p.nvars();
        let mut op = WeylOp::zero(n);
        for (m, c) in p.terms() {
            op.terms.insert(WeylMono { x: Monomial::one(n), d: m.clone() }, c.clone());
        }
        op
    }

    /// `Σ v_j ∂_j`.
    pub fn euler(nvars: usize) -> Self {
        let mut op = WeylOp::zero(nvars);
        for i in 0..nvars {
            op.terms.insert(
                WeylMono { x: Monomial::unit(nvars, i), d: Monomial::unit(nvars, i) },
                Rat::one(),
            );
        }
        op
    }

    /// `Σ_i ∂_{x_i} ∂_{y_{k+1-i}}` on `2k` variables.
    pub fn laplacian(k: usize) -> Self {
        let n = 2 * k;
        let mut op = WeylOp::zero(n);
        for i in 0..k {
            let d = Monomial::unit(n, i).mul(&Monomial::unit(n, bar(n, i)));
            op.terms.insert(WeylMono { x: Monomial::one(n), d }, Rat::one());
        }
        op
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

    /// Terms in descending order of `(|β|, β, α)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeylMono, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, x: Monomial, d: Monomial, c: Rat) {
        add_into(&mut self.terms, WeylMono { x, d }, c);
    }

    /// Highest derivative order; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.d.degree()).max()
    }

    /// Highest total polynomial degree of the coefficients.
    pub fn coefficient_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x.degree()).max()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return WeylOp::zero(self.nvars);
        }
        WeylOp {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &WeylOp) -> Result<WeylOp> {
        check_same(self.nvars, other.nvars)?;
        Ok(self * other)
    }

    pub fn commutator(&self, other: &WeylOp) -> WeylOp {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, e: u32) -> WeylOp {
        let mut acc = WeylOp::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Moves the operator into a ring with `n` variables, placing variable
    /// `i` at position `offset + i`.
    pub fn embed(&self, n: usize, offset: usize) -> WeylOp {
        WeylOp {
            nvars: n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (WeylMono { x: m.x.embed(n, offset), d: m.d.embed(n, offset) }, c.clone()))
                .collect(),
        }
    }

    /// x-left coefficients grouped by derivative multi-index:
    /// `self = Σ_β c_β(x) ∂^β`.
    pub fn xleft_coeffs(&self) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.d.clone())
                .or_insert_with(|| Poly::zero(self.nvars))
                .add_term(m.x.clone(), c.clone());
        }
        out
    }

    pub fn from_xleft_coeffs(nvars: usize, coeffs: &BTreeMap<Monomial, Poly>) -> WeylOp {
        let mut op = WeylOp::zero(nvars);
        for (d, p) in coeffs {
            for (x, c) in p.terms() {
                op.add_term(x.clone(), d.clone(), c.clone());
            }
        }
        op
    }

    /// ∂-left normal form: `self = Σ_β ∂^β v_β(x)`.
    pub fn dleft_normal_form(&self) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            exchanges(&m.d, &m.x, true, |eps, w| {
                out.entry(m.d.div(eps))
                    .or_insert_with(|| Poly::zero(self.nvars))
                    .add_term(m.x.div(eps), &w * c);
            });
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn from_dleft(nvars: usize, form: &BTreeMap<Monomial, Poly>) -> WeylOp {
        let mut op = WeylOp::zero(nvars);
        for (d, v) in form {
            for (x, c) in v.terms() {
                exchanges(d, x, false, |eps, w| {
                    op.add_term(x.div(eps), d.div(eps), &w * c);
                });
            }
        }
        op
    }

    /// `η` with `self = η · q` (right multiplication by the function `q`).
    ///
    /// In ∂-left form `Σ ∂^β v_β`, right multiples of `q` are exactly the
    /// operators whose every `v_β` is divisible by `q`, by uniqueness of the
    /// ∂-left normal form.
    pub fn divide_right_by_mult(&self, q: &Poly) -> Result<WeylOp> {
        check_same(self.nvars, q.nvars())?;
        if q.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let mut quot = BTreeMap::new();
        for (d, v) in self.dleft_normal_form() {
            let u = v
                .div_exact(q)
                .ok_or_else(|| Error::NotDivisible(format!("∂-left coefficient {v} of ∂^{d:?}")))?;
            quot.insert(d, u);
        }
        Ok(WeylOp::from_dleft(self.nvars, &quot))
    }

    /// `u` with `self = u · d` for a constant-coefficient `d`.
    ///
    /// Writing `self = Σ x^α q_α(∂)`, right multiples of `d` are exactly those
    /// with every `q_α` divisible by the symbol polynomial of `d`.
    pub fn divide_right_by_constcoef(&self, d: &WeylOp) -> Result<WeylOp> {
        check_same(self.nvars, d.nvars)?;
        if d.terms.keys().any(|m| !m.x.is_one()) {
            return Err(Error::InvalidInput("divisor must have constant coefficients".into()));
        }
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let n = self.nvars;
        let sym = Poly::from_terms(n, d.terms.iter().map(|(m, c)| (m.d.clone(), c.clone())));
        let mut by_x: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_x.entry(m.x.clone()).or_insert_with(|| Poly::zero(n)).add_term(m.d.clone(), c.clone());
        }
        let mut out = WeylOp::zero(n);
        for (x, q) in by_x {
            let u = q
                .div_exact(&sym)
                .ok_or_else(|| Error::NotDivisible(format!("x^{x:?} coefficient {q}")))?;
            for (dm, c) in u.terms() {
                out.add_term(x.clone(), dm.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Top-order symbol in `2n` variables: base `w` (first `n`) and fiber `v`
    /// (last `n`), with `∂_j ↦ v_{bar(j)}`.
    pub fn principal_symbol(&self) -> Poly {
        let n = self.nvars;
        let Some(r) = self.order() else {
            return Poly::zero(2 * n);
        };
        let mut out = Poly::zero(2 * n);
        for (m, c) in &self.terms {
            if m.d.degree() != r {
                continue;
            }
            let mut e = m.x.embed(2 * n, 0);
            for j in 0..n {
                e.set(n + bar(n, j), m.d.get(j));
            }
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        assert_eq!(self.nvars, f.nvars(), "operator/function ring mismatch");
        let mut out = Poly::zero(self.nvars);
        for (d, c) in self.xleft_coeffs() {
            let g = f.derivative_multi(&d);
            if !g.is_zero() {
                out = &out + &(&c * &g);
            }
        }
        out
    }

    pub fn apply_laurent(&self, f: &QLaurent) -> QLaurent {
        assert_eq!(self.nvars, 2 * f.k(), "operator/function ring mismatch");
        let k = f.k();
        let mut cache: BTreeMap<Monomial, QLaurent> = BTreeMap::new();
        cache.insert(Monomial::one(self.nvars), f.clone());
        let mut out = QLaurent::zero(k);
        for (d, c) in self.xleft_coeffs() {
            let g = derivative_cached(&mut cache, &d);
            out = &out + &(&QLaurent::from_poly(k, c) * &g);
        }
        out
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let dnames: Vec<String> = names.iter().map(|n| format!("d{n}")).collect();
        let mut s = String::new();
        for (idx, (m, c)) in self.terms().enumerate() {
            let mut parts = Vec::new();
            let xs = monomial_string(&m.x, names);
            let ds = monomial_string(&m.d, &dnames);
            if !xs.is_empty() {
                parts.push(xs);
            }
            if !ds.is_empty() {
                parts.push(ds);
            }
            let (neg, abs) = (c.is_negative(), c.abs());
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if parts.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&parts.join("*"));
            }
        }
        s
    }
}

fn derivative_cached(cache: &mut BTreeMap<Monomial, QLaurent>, d: &Monomial) -> QLaurent {
    if let Some(v) = cache.get(d) {
        return v.clone();
    }
    let i = (0..d.len()).find(|&i| d.get(i) > 0).expect("nonzero multi-index");
    let mut prev = d.clone();
    prev.set(i, d.get(i) - 1);
    let g = derivative_cached(cache, &prev).partial(i);
    cache.insert(d.clone(), g.clone());
    g
}

/// True when `op` kills every monomial of degree at most `r`. For `r` at least
/// the order of `op` this decides `op = 0`.
pub fn is_zero_extensional(op: &WeylOp, r: u32) -> bool {
    monomials_up_to(op.nvars, r)
        .into_iter()
        .all(|m| op.apply(&Poly::term(m, Rat::one())).is_zero())
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = if self.nvars % 2 == 0 {
            coordinate_names(self.nvars / 2)
        } else {
            (1..=self.nvars).map(|i| format!("z{i}")).collect()
        };
        f.write_str(&self.display_with(&names))
    }
}

impl fmt::Debug for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        assert_eq!(self.nvars, rhs.nvars, "operator ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            add_into(&mut out.terms, m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        assert_eq!(self.nvars, rhs.nvars, "operator ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            add_into(&mut out.terms, m.clone(), -c);
        }
        out
    }
}

impl Mul<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: &WeylOp) -> WeylOp {
        assert_eq!(self.nvars, rhs.nvars, "operator ring mismatch");
        let mut out = WeylOp::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let c = ca * cb;
                // x^α ∂^β · x^γ ∂^δ = Σ_ε w(β,γ,ε) x^{α+γ-ε} ∂^{β-ε+δ}
                exchanges(&a.d, &b.x, false, |eps, w| {
                    let x = a.x.mul(&b.x.div(eps));
                    let d = a.d.div(eps).mul(&b.d);
                    add_into(&mut out.terms, WeylMono { x, d }, &w * &c);
                });
            }
        }
        out
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        WeylOp {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<WeylOp> for WeylOp {
            type Output = WeylOp;
            fn $method(self, rhs: WeylOp) -> WeylOp {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&WeylOp> for WeylOp {
            type Output = WeylOp;
            fn $method(self, rhs: &WeylOp) -> WeylOp {
                (&self).$method(rhs)
            }
        }
        impl $tr<WeylOp> for &WeylOp {
            type Output = WeylOp;
            fn $method(self, rhs: WeylOp) -> WeylOp {
                self.$method(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct OpTermJson {
    x: Vec<u16>,
    d: Vec<u16>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct OpJson {
    nvars: usize,
    terms: Vec<OpTermJson>,
}

impl Serialize for WeylOp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OpJson {
            nvars: self.nvars,
            terms: self
                .terms()
                .map(|(m, c)| OpTermJson {
                    x: m.x.exps().to_vec(),
                    d: m.d.exps().to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeylOp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = OpJson::deserialize(d)?;
        let mut op = WeylOp::zero(j.nvars);
        for t in j.terms {
            if t.x.len() != j.nvars || t.d.len() != j.nvars {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let c: Rat = format!("{}/{}", t.num, t.den).parse().map_err(D::Error::custom)?;
            op.add_term(Monomial::new(t.x), Monomial::new(t.d), c);
        }
        Ok(op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::q_form;

    #[test]
    fn canonical_commutation() {
        let (x, d) = (WeylOp::var(4, 0), WeylOp::partial(4, 0));
        assert_eq!(&d * &x, &(&x * &d) + &WeylOp::one(4));
        assert_eq!((&x * &d).len(), 1);
    }

    #[test]
    fn laplacian_and_q() {
        for k in [2usize, 3] {
            let n = 2 * k;
            let lap = WeylOp::laplacian(k);
            let q = WeylOp::mult(&q_form(k));
            let expect = &WeylOp::euler(n) + &WeylOp::constant(n, Rat::int(k as i64));
            assert_eq!(lap.commutator(&q), expect);
            assert_eq!(lap.apply(&q_form(k)), Poly::constant(n, Rat::int(k as i64)));
        }
    }

    #[test]
    fn euler_counts_degree() {
        let f = &(&Poly::var(4, 0) * &Poly::var(4, 0)) * &Poly::var(4, 3);
        assert_eq!(WeylOp::euler(4).apply(&f), f.scale(&Rat::int(3)));
        let x1sq = &Poly::var(4, 0) * &Poly::var(4, 0);
        assert!(WeylOp::laplacian(2).apply(&x1sq).is_zero());
    }

    #[test]
    fn dleft_examples() {
        let op = &WeylOp::var(4, 0) * &WeylOp::partial(4, 0);
        let form = op.dleft_normal_form();
        assert_eq!(form[&Monomial::unit(4, 0)], Poly::var(4, 0));
        assert_eq!(form[&Monomial::one(4)], -Poly::one(4));
        assert_eq!(WeylOp::from_dleft(4, &form), op);
        let q = WeylOp::mult(&q_form(2));
        assert_eq!(q.dleft_normal_form().len(), 1);
    }

    #[test]
    fn right_division_by_q() {
        let k = 2;
        let q = q_form(k);
        let qm = WeylOp::mult(&q);
        assert_eq!(qm.divide_right_by_mult(&q).unwrap(), WeylOp::one(4));
        let w = &WeylOp::laplacian(k) * &qm;
        let r = w.divide_right_by_mult(&q).unwrap();
        assert_eq!(&r * &qm, w);
        assert!(matches!(WeylOp::partial(4, 0).divide_right_by_mult(&q), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn right_division_by_laplacian() {
        let k = 2;
        let lap = WeylOp::laplacian(k);
        assert_eq!((&lap * &lap).divide_right_by_constcoef(&lap).unwrap(), lap);
        let e = &WeylOp::euler(4) + &WeylOp::constant(4, Rat::int(3));
        assert_eq!((&e * &lap).divide_right_by_constcoef(&lap).unwrap(), e);
        assert!(WeylOp::partial(4, 3).divide_right_by_constcoef(&lap).is_err());
    }

    #[test]
    fn principal_symbols() {
        let k = 2;
        let n = 2 * k;
        let lap = WeylOp::laplacian(k);
        // σ(Δ) = Q(v) on the fiber block
        let qv = crate::forms::q_form_at(2 * n, n, k);
        assert_eq!(lap.principal_symbol(), qv);
        let w = crate::forms::block(2 * n, 0, n);
        let v = crate::forms::block(2 * n, n, n);
        assert_eq!(WeylOp::euler(n).principal_symbol(), crate::forms::pair(&v, &w));
        assert_eq!(WeylOp::var(n, 0).principal_symbol(), Poly::var(2 * n, 0));
    }

    #[test]
    fn laurent_application() {
        let k = 2;
        let inv = QLaurent::q_pow(k, -1);
        // Δ(1/Q) for k=2 is 0: the fundamental solution in four variables
        assert!(WeylOp::laplacian(k).apply_laurent(&inv).is_zero());
        let e = WeylOp::euler(4);
        assert_eq!(e.apply_laurent(&inv), inv.scale(&Rat::int(-2)));
    }

    #[test]
    fn json_round_trip() {
        let op = &WeylOp::laplacian(2) + &WeylOp::euler(4).scale(&Rat::new(1, 3));
        let s = serde_json::to_string(&op).unwrap();
        assert_eq!(serde_json::from_str::<WeylOp>(&s).unwrap(), op);
        assert_eq!(op.to_string(), "dx1*dy2 + dx2*dy1 + 1/3*x1*dx1 + 1/3*x2*dx2 + 1/3*y1*dy1 + 1/3*y2*dy2");
    }
}
