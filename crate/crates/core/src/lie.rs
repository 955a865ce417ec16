//! The conformal Lie algebra in block coordinates `(α, µ, X, λ)` and its
//! group, realized as `(2k+2)`-square matrices preserving the anti-diagonal
//! form `J⁺`.
//!
//! The assembled matrix is
//!
//! ```text
//! [ α   -λᵀJ   0  ]
//! [ µ    X     λ  ]
//! [ 0   -µᵀJ  -α  ]
//! ```

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{bar, q_form};
use crate::linalg::RatMatrix;
use crate::poly::Poly;
use crate::qlaurent::{eval_poly_at, QLaurent};
use crate::rat::Rat;

/// Which summand of the decomposition a basis element lives in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum BlockType {
    Alpha,
    Mu,
    Levi,
    Lambda,
}

/// Label of a basis element; Levi indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum BasisLabel {
    Alpha,
    Mu(usize),
    Lambda(usize),
    D(usize, usize),
    B(usize, usize),
    C(usize, usize),
}

impl BasisLabel {
    pub fn block(&self) -> BlockType {
        match self {
            BasisLabel::Alpha => BlockType::Alpha,
            BasisLabel::Mu(_) => BlockType::Mu,
            BasisLabel::Lambda(_) => BlockType::Lambda,
            _ => BlockType::Levi,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Alpha => write!(f, "alpha"),
            BasisLabel::Mu(j) => write!(f, "mu{}", j + 1),
            BasisLabel::Lambda(j) => write!(f, "lambda{}", j + 1),
            BasisLabel::D(i, j) => write!(f, "D{i}{j}"),
            BasisLabel::B(i, j) => write!(f, "B{i}{j}"),
            BasisLabel::C(i, j) => write!(f, "C{i}{j}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieElt {
    pub k: usize,
    pub alpha: Rat,
    pub mu: Vec<Rat>,
    pub x: RatMatrix,
    pub lambda: Vec<Rat>,
}

fn flat_rat(v: &[Rat]) -> Vec<Rat> {
    v.iter().rev().cloned().collect()
}

fn outer(a: &[Rat], b: &[Rat]) -> RatMatrix {
    RatMatrix::from_rows(a.iter().map(|x| b.iter().map(|y| x * y).collect()).collect())
}

fn vadd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vscale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

fn pair(a: &[Rat], b: &[Rat]) -> Rat {
    crate::forms::pair_rat(a, b)
}

impl LieElt {
    pub fn zero(k: usize) -> Self {
        let n = 2 * k;
        LieElt {
            k,
            alpha: Rat::zero(),
            mu: vec![Rat::zero(); n],
            x: RatMatrix::zeros(n, n),
            lambda: vec![Rat::zero(); n],
        }
    }

    pub fn alpha(k: usize, a: Rat) -> Self {
        LieElt { alpha: a, ..LieElt::zero(k) }
    }

    pub fn mu(k: usize, v: Vec<Rat>) -> Self {
        assert_eq!(v.len(), 2 * k);
        LieElt { mu: v, ..LieElt::zero(k) }
    }

    pub fn lambda(k: usize, v: Vec<Rat>) -> Self {
        assert_eq!(v.len(), 2 * k);
        LieElt { lambda: v, ..LieElt::zero(k) }
    }

    pub fn levi(k: usize, x: RatMatrix) -> Self {
        LieElt { x, ..LieElt::zero(k) }
    }

    pub fn unit(k: usize, j: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); 2 * k];
        v[j] = Rat::one();
        v
    }

    pub fn dim(&self) -> usize {
        2 * self.k + 2
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero()
            && self.mu.iter().all(|x| x.is_zero())
            && self.lambda.iter().all(|x| x.is_zero())
            && self.x.is_zero()
    }

    /// `X ∈ o(Q)`, i.e. `XᵀJ + JX = 0`.
    pub fn levi_is_skew(x: &RatMatrix) -> bool {
        let n = x.rows();
        let j = RatMatrix::anti_diagonal(n);
        (&(&x.transpose() * &j) + &(&j * x)).is_zero()
    }

    pub fn is_valid(&self) -> bool {
        if !LieElt::levi_is_skew(&self.x) {
            return false;
        }
        let m = self.to_matrix();
        let jp = RatMatrix::anti_diagonal(self.dim());
        (&(&m.transpose() * &jp) + &(&jp * &m)).is_zero()
    }

    pub fn to_matrix(&self) -> RatMatrix {
        let n = 2 * self.k;
        let mut m = RatMatrix::zeros(n + 2, n + 2);
        m[(0, 0)] = self.alpha.clone();
        m[(n + 1, n + 1)] = -&self.alpha;
        for i in 0..n {
            m[(1 + i, 0)] = self.mu[i].clone();
            m[(1 + i, n + 1)] = self.lambda[i].clone();
            m[(0, 1 + i)] = -&self.lambda[bar(n, i)];
            m[(n + 1, 1 + i)] = -&self.mu[bar(n, i)];
            for j in 0..n {
                m[(1 + i, 1 + j)] = self.x[(i, j)].clone();
            }
        }
        m
    }

    pub fn from_matrix(m: &RatMatrix) -> Result<Self> {
        if m.rows() != m.cols() || m.rows() < 2 || m.rows() % 2 != 0 {
            return Err(Error::InvalidInput("matrix must be square of even size".into()));
        }
        let n = m.rows() - 2;
        let k = n / 2;
        let mut x = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                x[(i, j)] = m[(1 + i, 1 + j)].clone();
            }
        }
        let e = LieElt {
            k,
            alpha: m[(0, 0)].clone(),
            mu: (0..n).map(|i| m[(1 + i, 0)].clone()).collect(),
            x,
            lambda: (0..n).map(|i| m[(1 + i, n + 1)].clone()).collect(),
        };
        if &e.to_matrix() != m || !e.is_valid() {
            return Err(Error::InvalidInput("matrix is not in the orthogonal algebra".into()));
        }
        Ok(e)
    }

    pub fn add(&self, other: &LieElt) -> LieElt {
        LieElt {
            k: self.k,
            alpha: &self.alpha + &other.alpha,
            mu: vadd(&self.mu, &other.mu),
            x: &self.x + &other.x,
            lambda: vadd(&self.lambda, &other.lambda),
        }
    }

    pub fn scale(&self, c: &Rat) -> LieElt {
        LieElt {
            k: self.k,
            alpha: &self.alpha * c,
            mu: vscale(c, &self.mu),
            x: self.x.scale(c),
            lambda: vscale(c, &self.lambda),
        }
    }

    /// Bracket computed blockwise.
    pub fn bracket(&self, other: &LieElt) -> LieElt {
        let (a1, a2) = (&self.alpha, &other.alpha);
        let (m1, m2) = (&self.mu, &other.mu);
        let (l1, l2) = (&self.lambda, &other.lambda);
        let (x1, x2) = (&self.x, &other.x);
        let alpha = &pair(l2, m1) - &pair(l1, m2);
        let mu: Vec<Rat> = (0..m1.len())
            .map(|i| {
                &(&(a2 * &m1[i]) - &(a1 * &m2[i])) + &(&x1.mul_vec(m2)[i] - &x2.mul_vec(m1)[i])
            })
            .collect();
        let lambda: Vec<Rat> = (0..l1.len())
            .map(|i| {
                &(&(a1 * &l2[i]) - &(a2 * &l1[i])) + &(&x1.mul_vec(l2)[i] - &x2.mul_vec(l1)[i])
            })
            .collect();
        let comm = &(x1 * x2) - &(x2 * x1);
        let x = &(&(&comm - &outer(m1, &flat_rat(l2))) - &outer(l1, &flat_rat(m2)))
            + &(&outer(m2, &flat_rat(l1)) + &outer(l2, &flat_rat(m1)));
        LieElt { k: self.k, alpha, mu, x, lambda }
    }

    /// Bracket computed as a matrix commutator.
    pub fn bracket_matrix(&self, other: &LieElt) -> LieElt {
        let (a, b) = (self.to_matrix(), other.to_matrix());
        LieElt::from_matrix(&(&(&a * &b) - &(&b * &a))).expect("commutator stays in the algebra")
    }

    /// Conjugation by the Weyl element: swaps `µ` and `λ`, negates `α`.
    pub fn ad_w0(&self) -> LieElt {
        LieElt {
            k: self.k,
            alpha: -&self.alpha,
            mu: self.lambda.clone(),
            x: self.x.clone(),
            lambda: self.mu.clone(),
        }
    }
}

impl fmt::Debug for LieElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |v: &[Rat]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "(α={}, µ=[{}], X=", self.alpha, v(&self.mu))?;
        let rows: Vec<String> = (0..self.x.rows()).map(|i| format!("[{}]", v(self.x.row(i)))).collect();
        write!(f, "[{}], λ=[{}])", rows.join(","), v(&self.lambda))
    }
}

/// Levi matrix with `ρ̃(X) = Σ X_ab v_a ∂_b` equal to the named generator.
pub fn levi_matrix(k: usize, label: BasisLabel) -> RatMatrix {
    let n = 2 * k;
    let mut x = RatMatrix::zeros(n, n);
    match label {
        BasisLabel::D(i, j) => {
            x[(j - 1, i - 1)] += &Rat::one();
            x[(bar(n, i - 1), bar(n, j - 1))] -= &Rat::one();
        }
        BasisLabel::B(i, j) => {
            x[(bar(n, j - 1), i - 1)] = Rat::one();
            x[(bar(n, i - 1), j - 1)] = Rat::int(-1);
        }
        BasisLabel::C(i, j) => {
            x[(j - 1, bar(n, i - 1))] = Rat::one();
            x[(i - 1, bar(n, j - 1))] = Rat::int(-1);
        }
        _ => panic!("not a Levi label"),
    }
    x
}

pub fn basis_element(k: usize, label: BasisLabel) -> LieElt {
    match label {
        BasisLabel::Alpha => LieElt::alpha(k, Rat::one()),
        BasisLabel::Mu(j) => LieElt::mu(k, LieElt::unit(k, j)),
        BasisLabel::Lambda(j) => LieElt::lambda(k, LieElt::unit(k, j)),
        l => LieElt::levi(k, levi_matrix(k, l)),
    }
}

/// The standard basis: `α`, `µ = e_j`, the Levi generators `D_ij`, `B_ij`,
/// `C_ij`, and `λ = e_j`.
pub fn basis(k: usize) -> Vec<(BasisLabel, LieElt)> {
    let n = 2 * k;
    let mut labels = vec![BasisLabel::Alpha];
    labels.extend((0..n).map(BasisLabel::Mu));
    for i in 1..=k {
        for j in 1..=k {
            labels.push(BasisLabel::D(i, j));
        }
    }
    for i in 1..=k {
        for j in i + 1..=k {
            labels.push(BasisLabel::B(i, j));
            labels.push(BasisLabel::C(i, j));
        }
    }
    labels.extend((0..n).map(BasisLabel::Lambda));
    labels.into_iter().map(|l| (l, basis_element(k, l))).collect()
}

/// Element of the orthogonal group of `J⁺`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GroupElt {
    k: usize,
    g: RatMatrix,
}

impl GroupElt {
    pub fn new(g: RatMatrix) -> Result<Self> {
        let n = g.rows();
        if g.cols() != n || n < 4 || n % 2 != 0 {
            return Err(Error::InvalidInput("group element must be square of even size ≥ 4".into()));
        }
        let jp = RatMatrix::anti_diagonal(n);
        if &(&g.transpose() * &jp) * &g != jp {
            return Err(Error::InvalidInput("matrix does not preserve the form".into()));
        }
        Ok(GroupElt { k: (n - 2) / 2, g })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.g
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn identity(k: usize) -> Self {
        GroupElt { k, g: RatMatrix::identity(2 * k + 2) }
    }

    /// Weyl element exchanging the first and last basis vectors.
    pub fn w0(k: usize) -> Self {
        let n = 2 * k + 2;
        let mut g = RatMatrix::identity(n);
        g[(0, 0)] = Rat::zero();
        g[(n - 1, n - 1)] = Rat::zero();
        g[(0, n - 1)] = Rat::one();
        g[(n - 1, 0)] = Rat::one();
        GroupElt { k, g }
    }

    /// Lower unipotent `exp(µ-type element)`.
    pub fn u_op(mu: &[Rat]) -> Self {
        let n = mu.len();
        let k = n / 2;
        let mut g = RatMatrix::identity(n + 2);
        for i in 0..n {
            g[(1 + i, 0)] = mu[i].clone();
            g[(n + 1, 1 + i)] = -&mu[bar(n, i)];
        }
        g[(n + 1, 0)] = -&(pair(mu, mu) * Rat::new(1, 2));
        GroupElt { k, g }
    }

    /// Upper unipotent `exp(λ-type element)`.
    pub fn u(lambda: &[Rat]) -> Self {
        let n = lambda.len();
        let k = n / 2;
        let mut g = RatMatrix::identity(n + 2);
        for i in 0..n {
            g[(1 + i, n + 1)] = lambda[i].clone();
            g[(0, 1 + i)] = -&lambda[bar(n, i)];
        }
        g[(0, n + 1)] = -&(pair(lambda, lambda) * Rat::new(1, 2));
        GroupElt { k, g }
    }

    /// Levi element `diag(a, h, 1/a)` with `h ∈ O(Q)`.
    pub fn levi(a: &Rat, h: &RatMatrix) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidInput("Levi scalar must be nonzero".into()));
        }
        let n = h.rows();
        let mut g = RatMatrix::zeros(n + 2, n + 2);
        g[(0, 0)] = a.clone();
        g[(n + 1, n + 1)] = a.recip();
        for i in 0..n {
            for j in 0..n {
                g[(1 + i, 1 + j)] = h[(i, j)].clone();
            }
        }
        GroupElt::new(g)
    }

    pub fn mul(&self, other: &GroupElt) -> GroupElt {
        GroupElt { k: self.k, g: &self.g * &other.g }
    }

    pub fn inverse(&self) -> GroupElt {
        GroupElt { k: self.k, g: self.g.inverse().expect("group elements are invertible") }
    }

    /// Adjoint action on the Lie algebra.
    pub fn adjoint(&self, xi: &LieElt) -> LieElt {
        let inv = self.inverse();
        LieElt::from_matrix(&(&(&self.g * &xi.to_matrix()) * &inv.g)).expect("adjoint stays in the algebra")
    }
}

/// `g⁻¹ u_v^op = u_{v'}^op p`, with `χ₀(p)` the top-left entry of `p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BruhatFactor {
    pub v_prime: Vec<QLaurent>,
    pub chi0: QLaurent,
}

/// Writes `t` as `c·Q^m` if possible.
fn as_q_power(t: &Poly, k: usize) -> Option<(Rat, u32)> {
    let q = q_form(k);
    let mut t = t.clone();
    let mut m = 0;
    while !t.is_constant() {
        t = t.div_exact(&q)?;
        m += 1;
    }
    let c = t.constant_term();
    (!c.is_zero()).then_some((c, m))
}

/// First column of `g⁻¹ u_v^op` as polynomials in the symbolic point `v`.
fn first_column(g: &GroupElt) -> Vec<Poly> {
    let k = g.k;
    let n = 2 * k;
    let inv = g.g.inverse().expect("group elements are invertible");
    let mut col = vec![Poly::one(n)];
    col.extend((0..n).map(|i| Poly::var(n, i)));
    col.push(-q_form(k));
    (0..n + 2)
        .map(|i| {
            let mut acc = Poly::zero(n);
            for (j, c) in col.iter().enumerate() {
                let a = &inv[(i, j)];
                if !a.is_zero() {
                    acc = &acc + &c.scale(a);
                }
            }
            acc
        })
        .collect()
}

pub fn bruhat_factor(g: &GroupElt) -> Result<BruhatFactor> {
    let k = g.k;
    let n = 2 * k;
    let col = first_column(g);
    if col[0].is_zero() {
        return Err(Error::Degenerate("pivot vanishes identically".into()));
    }
    let (c, m) = as_q_power(&col[0], k)
        .ok_or_else(|| Error::NotQLaurent(format!("pivot {} is not a multiple of a power of Q", col[0])))?;
    let cinv = c.recip();
    let v_prime: Vec<QLaurent> = (0..n).map(|i| QLaurent::new(k, col[1 + i].scale(&cinv), m)).collect();
    let chi0 = QLaurent::from_poly(k, col[0].clone());
    let check = &eval_poly_at(&q_form(k), &v_prime) * &chi0;
    if check != QLaurent::from_poly(k, -&col[n + 1]) {
        return Err(Error::TheoryViolation("last entry of the first column is inconsistent".into()));
    }
    Ok(BruhatFactor { v_prime, chi0 })
}

/// `χ₀(p(g, v))` evaluated at a Q-Laurent point.
pub fn chi0_at(g: &GroupElt, point: &[QLaurent]) -> Result<QLaurent> {
    let f = bruhat_factor(g)?;
    Ok(eval_poly_at(f.chi0.numerator(), point))
}

/// Residual of the cocycle identity `χ₀(g₁g₂, v) = χ₀(g₂, v₁)·χ₀(g₁, v)`.
pub fn chi0_cocycle_defect(g1: &GroupElt, g2: &GroupElt) -> Result<QLaurent> {
    let f1 = bruhat_factor(g1)?;
    let f12 = bruhat_factor(&g1.mul(g2))?;
    let rhs = &chi0_at(g2, &f1.v_prime)? * &f1.chi0;
    Ok(&f12.chi0 - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes_and_validity() {
        assert_eq!(basis(2).len(), 15);
        assert_eq!(basis(3).len(), 28);
        for k in [2, 3] {
            for (_, e) in basis(k) {
                assert!(e.is_valid());
            }
        }
    }

    #[test]
    fn alpha_mu_bracket() {
        let k = 2;
        let a = LieElt::alpha(k, Rat::one());
        let m = LieElt::mu(k, LieElt::unit(k, 0));
        let b = a.bracket(&m);
        let mut e = LieElt::unit(k, 0);
        e[0] = Rat::int(-1);
        assert_eq!(b, LieElt::mu(k, e));
        assert!(a.bracket(&a).is_zero());
    }

    #[test]
    fn block_bracket_matches_matrix() {
        for k in [2, 3] {
            let b = basis(k);
            for (_, x) in &b {
                for (_, y) in &b {
                    assert_eq!(x.bracket(y), x.bracket_matrix(y));
                }
            }
        }
    }

    #[test]
    fn weyl_involution() {
        let k = 2;
        let w0 = GroupElt::w0(k);
        for (_, e) in basis(k) {
            assert_eq!(w0.adjoint(&e), e.ad_w0());
            assert_eq!(e.ad_w0().ad_w0(), e);
        }
        assert_eq!(LieElt::alpha(k, Rat::one()).ad_w0(), LieElt::alpha(k, Rat::int(-1)));
    }

    #[test]
    fn group_constructors_preserve_form() {
        let mu = vec![Rat::int(1), Rat::int(2), Rat::new(1, 3), Rat::int(-1)];
        for g in [GroupElt::w0(2), GroupElt::u_op(&mu), GroupElt::u(&mu)] {
            assert!(GroupElt::new(g.matrix().clone()).is_ok());
        }
    }

    #[test]
    fn bruhat_examples() {
        let k = 2;
        let n = 4;
        let q = QLaurent::from_poly(k, q_form(k));
        let v: Vec<QLaurent> = (0..n).map(|i| QLaurent::from_poly(k, Poly::var(n, i))).collect();

        let f = bruhat_factor(&GroupElt::w0(k)).unwrap();
        assert_eq!(f.chi0, -&q);
        let inv_q = QLaurent::q_pow(k, -1);
        for i in 0..n {
            assert_eq!(f.v_prime[i], -&(&v[i] * &inv_q));
        }

        let mu = vec![Rat::int(1), Rat::int(0), Rat::int(2), Rat::int(-3)];
        let f = bruhat_factor(&GroupElt::u_op(&mu)).unwrap();
        assert_eq!(f.chi0, QLaurent::one(k));
        for i in 0..n {
            let c = QLaurent::from_poly(k, Poly::constant(n, mu[i].clone()));
            assert_eq!(f.v_prime[i], &v[i] - &c);
        }

        let mut h = RatMatrix::identity(n);
        h[(0, 0)] = Rat::int(2);
        h[(3, 3)] = Rat::new(1, 2);
        let a = Rat::int(3);
        let g = GroupElt::levi(&a, &h).unwrap();
        let f = bruhat_factor(&g).unwrap();
        assert_eq!(f.chi0, QLaurent::from_poly(k, Poly::constant(n, a.recip())));
        let hinv = h.inverse().unwrap();
        for i in 0..n {
            let mut p = Poly::zero(n);
            for j in 0..n {
                p = &p + &Poly::var(n, j).scale(&(&a * &hinv[(i, j)]));
            }
            assert_eq!(f.v_prime[i], QLaurent::from_poly(k, p));
        }
    }

    #[test]
    fn cocycle() {
        let k = 2;
        let mu = vec![Rat::int(1), Rat::int(0), Rat::int(2), Rat::int(-3)];
        let nu = vec![Rat::int(0), Rat::new(1, 2), Rat::int(1), Rat::int(5)];
        let mut h = RatMatrix::identity(4);
        h[(1, 1)] = Rat::int(3);
        h[(2, 2)] = Rat::new(1, 3);
        let l = GroupElt::levi(&Rat::int(-2), &h).unwrap();
        let w0 = GroupElt::w0(k);
        let (u1, u2) = (GroupElt::u_op(&mu), GroupElt::u_op(&nu));
        for (g1, g2) in [(&w0, &w0), (&w0, &u1), (&u1, &u2), (&u1, &l), (&l, &w0), (&l, &u1)] {
            assert!(chi0_cocycle_defect(g1, g2).unwrap().is_zero());
        }
    }
}
