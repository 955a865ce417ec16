//! Functions and differential operators on the cone `Q* = 0`, the three
//! operator realizations of the conformal algebra, and the linear and
//! corrected Fourier transforms.
//!
//! Operators on the cone are normalizers of the ideal `(Q*)` modulo the
//! operators that act by zero on the quotient ring. Those are exactly the
//! operators whose x-left coefficients all lie in `(Q*)`, so the canonical
//! class reduces every x-left coefficient modulo `Q*`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::One;

use crate::error::{Error, Result};
use crate::forms::{bar, q_form};
use crate::lie::LieElt;
use crate::poly::{monomials_up_to, Monomial, Poly};
use crate::rat::Rat;
use crate::weyl::WeylOp;

fn k_of(op: &WeylOp) -> usize {
    op.nvars() / 2
}

/// `E + c`.
pub fn euler_shift(k: usize, c: i64) -> WeylOp {
    &WeylOp::euler(2 * k) + &WeylOp::constant(2 * k, Rat::int(c))
}

/// The linear function `Σ c_j v_j`.
pub fn linear_fn(k: usize, c: &[Rat]) -> Poly {
    let n = 2 * k;
    let mut p = Poly::zero(n);
    for (j, cj) in c.iter().enumerate() {
        p = &p + &Poly::var(n, j).scale(cj);
    }
    p
}

/// The constant vector field `Σ c_j ∂_j`.
pub fn vector_field(k: usize, c: &[Rat]) -> WeylOp {
    let n = 2 * k;
    let mut op = WeylOp::zero(n);
    for (j, cj) in c.iter().enumerate() {
        op.add_term(Monomial::one(n), Monomial::unit(n, j), cj.clone());
    }
    op
}

/// `∂_{λ♭}` where `λ♭ = B(λ, ·)`.
pub fn d_lambda_flat(k: usize, lambda: &[Rat]) -> WeylOp {
    let n = 2 * k;
    let mut op = WeylOp::zero(n);
    for (j, lj) in lambda.iter().enumerate() {
        op.add_term(Monomial::one(n), Monomial::unit(n, bar(n, j)), lj.clone());
    }
    op
}

/// `Σ X_ab v_a ∂_b`.
fn levi_field(xi: &LieElt) -> WeylOp {
    let n = 2 * xi.k;
    let mut op = WeylOp::zero(n);
    for a in 0..n {
        for b in 0..n {
            op.add_term(Monomial::unit(n, a), Monomial::unit(n, b), xi.x[(a, b)].clone());
        }
    }
    op
}

/// `−⟨Xv, ∇⟩ = −Σ X_ab v_b ∂_a`.
fn levi_field_phi(xi: &LieElt) -> WeylOp {
    let n = 2 * xi.k;
    let mut op = WeylOp::zero(n);
    for a in 0..n {
        for b in 0..n {
            op.add_term(Monomial::unit(n, b), Monomial::unit(n, a), -&xi.x[(a, b)]);
        }
    }
    op
}

/// Conformal action on functions on `V`:
/// `−∂_µ − ⟨Xv,∇⟩ + α(E+k−1) − B(λ,v)(E+k−1) + Q ∂_λ`.
pub fn phi(xi: &LieElt) -> WeylOp {
    let k = xi.k;
    let n = 2 * k;
    let e = euler_shift(k, k as i64 - 1);
    let b_lambda = linear_fn(k, &xi.lambda.iter().rev().cloned().collect::<Vec<_>>());
    let mut op = -&vector_field(k, &xi.mu);
    op = &op + &levi_field_phi(xi);
    op = &op + &e.scale(&xi.alpha);
    op = &op - &(&WeylOp::mult(&b_lambda) * &e);
    op = &op + &(&WeylOp::mult(&q_form(k)) * &vector_field(k, &xi.lambda));
    debug_assert_eq!(op.nvars(), n);
    op
}

fn rho_with_shift(xi: &LieElt, shift: i64) -> WeylOp {
    let k = xi.k;
    let e = euler_shift(k, k as i64 + shift);
    let mut op = WeylOp::mult(&linear_fn(k, &xi.mu));
    op = &op + &levi_field(xi);
    op = &op + &WeylOp::constant(2 * k, xi.x.trace());
    op = &op - &e.scale(&xi.alpha);
    op = &op + &(&e * &d_lambda_flat(k, &xi.lambda));
    op = &op - &(&WeylOp::mult(&linear_fn(k, &xi.lambda)) * &WeylOp::laplacian(k));
    op
}

/// Ambient realization on `V*`: `µ + ⟨X*ν,∇⟩ − α(E+k+1) + (E+k+1)∂_{λ♭} − λΔ`.
pub fn rho_amb(xi: &LieElt) -> WeylOp {
    rho_with_shift(xi, 1)
}

/// `A_ξ = 2(∂_{λ♭} − α)`.
pub fn correction(xi: &LieElt) -> WeylOp {
    let k = xi.k;
    (&d_lambda_flat(k, &xi.lambda) - &WeylOp::constant(2 * k, xi.alpha.clone())).scale(&Rat::int(2))
}

/// Ambient representative of the cone realization: `ρ_amb(ξ) − A_ξ`.
pub fn rho_tilde_rep(xi: &LieElt) -> WeylOp {
    rho_with_shift(xi, -1)
}

/// Cone realization. Panics if the representative fails to preserve the ideal.
pub fn rho_tilde(xi: &LieElt) -> ConeOp {
    let op = ConeOp::new(rho_tilde_rep(xi));
    assert!(op.preserves_ideal(), "cone realization must normalize the ideal");
    op
}

/// The linear Fourier transform `v ↦ ∂_v`, `∂_v ↦ −v`.
pub fn tau(a: &WeylOp) -> WeylOp {
    let n = a.nvars();
    let mut form: BTreeMap<Monomial, Poly> = BTreeMap::new();
    for (m, c) in a.terms() {
        let c = if m.d.degree() % 2 == 1 { -c } else { c.clone() };
        form.entry(m.x.clone()).or_insert_with(|| Poly::zero(n)).add_term(m.d.clone(), c);
    }
    WeylOp::from_dleft(n, &form)
}

/// True when `a(Q*·m) ∈ (Q*)` for every monomial `m` of degree at most the
/// order of `a`; by triangularity this decides whether `a` preserves `(Q*)`.
pub fn is_ideal_preserving(a: &WeylOp) -> bool {
    let k = k_of(a);
    let q = q_form(k);
    let r = a.order().unwrap_or(0);
    monomials_up_to(a.nvars(), r)
        .into_iter()
        .all(|m| a.apply(&q.mul_term(&m, &Rat::one())).reduce(&q).is_zero())
}

/// Same decision via the product `a·Q*`, whose x-left coefficients must all
/// lie in `(Q*)`.
pub fn is_ideal_preserving_algebraic(a: &WeylOp) -> bool {
    let q = q_form(k_of(a));
    let prod = a * &WeylOp::mult(&q);
    prod.xleft_coeffs().values().all(|c| c.reduce(&q).is_zero())
}

/// Reduces every x-left coefficient modulo `Q*`.
pub fn canonical_class(a: &WeylOp) -> WeylOp {
    let q = q_form(k_of(a));
    let mut coeffs = a.xleft_coeffs();
    for c in coeffs.values_mut() {
        *c = c.reduce(&q);
    }
    WeylOp::from_xleft_coeffs(a.nvars(), &coeffs)
}

/// An operator on the cone: an ambient representative together with its
/// canonical class.
#[derive(Clone)]
pub struct ConeOp {
    rep: WeylOp,
    class: WeylOp,
    preserves: OnceLock<bool>,
}

impl ConeOp {
    pub fn new(rep: WeylOp) -> Self {
        let class = canonical_class(&rep);
        ConeOp { rep, class, preserves: OnceLock::new() }
    }

    pub fn zero(k: usize) -> Self {
        ConeOp::new(WeylOp::zero(2 * k))
    }

    pub fn one(k: usize) -> Self {
        ConeOp::new(WeylOp::one(2 * k))
    }

    pub fn k(&self) -> usize {
        k_of(&self.rep)
    }

    pub fn rep(&self) -> &WeylOp {
        &self.rep
    }

    pub fn class(&self) -> &WeylOp {
        &self.class
    }

    pub fn is_zero(&self) -> bool {
        self.class.is_zero()
    }

    pub fn preserves_ideal(&self) -> bool {
        *self.preserves.get_or_init(|| is_ideal_preserving_algebraic(&self.rep))
    }

    pub fn add(&self, other: &ConeOp) -> ConeOp {
        ConeOp::new(&self.rep + &other.rep)
    }

    pub fn sub(&self, other: &ConeOp) -> ConeOp {
        ConeOp::new(&self.rep - &other.rep)
    }

    pub fn mul(&self, other: &ConeOp) -> ConeOp {
        ConeOp::new(&self.rep * &other.rep)
    }

    pub fn scale(&self, c: &Rat) -> ConeOp {
        ConeOp::new(self.rep.scale(c))
    }

    pub fn commutator(&self, other: &ConeOp) -> ConeOp {
        ConeOp::new(self.rep.commutator(&other.rep))
    }

    /// Action on a function on the cone, returned in canonical form.
    pub fn apply(&self, f: &Poly) -> Poly {
        self.class.apply(f).reduce(&q_form(self.k()))
    }
}

impl PartialEq for ConeOp {
    fn eq(&self, other: &Self) -> bool {
        self.class == other.class
    }
}

impl Eq for ConeOp {}

impl fmt::Display for ConeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.class, f)
    }
}

impl fmt::Debug for ConeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.class, f)
    }
}

/// A function on the cone, held by its canonical representative.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ConeFn {
    k: usize,
    rep: Poly,
}

impl ConeFn {
    pub fn new(k: usize, p: &Poly) -> Self {
        ConeFn { k, rep: p.reduce(&q_form(k)) }
    }

    pub fn canonical(&self) -> &Poly {
        &self.rep
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Corrected Fourier transform into cone operators: divides `Q*·τ(a)` on the
/// right by `Q*`.
pub fn tau_hat(a: &WeylOp) -> Result<ConeOp> {
    let k = k_of(a);
    let q = q_form(k);
    let w = &WeylOp::mult(&q) * &tau(a);
    let eta = w
        .divide_right_by_mult(&q)
        .map_err(|e| Error::NotNormalizing(e.to_string()))?;
    let op = ConeOp::new(eta);
    if !op.preserves_ideal() {
        return Err(Error::NotNormalizing("quotient does not preserve the ideal".into()));
    }
    Ok(op)
}

/// Degree under the Euler grading.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grading {
    Degree(i64),
    Mixed,
}

/// `d` with `[E, a] = d·a` in canonical class, or `Mixed`. The zero class
/// reports degree 0.
pub fn grading(a: &ConeOp) -> Grading {
    let Some((m, _)) = a.class.terms().next() else {
        return Grading::Degree(0);
    };
    let d = m.x.degree() as i64 - m.d.degree() as i64;
    let e = WeylOp::euler(a.rep.nvars());
    let comm = canonical_class(&e.commutator(&a.rep));
    if comm == a.class.scale(&Rat::int(d)) {
        Grading::Degree(d)
    } else {
        Grading::Mixed
    }
}

/// `Σ_i 𝔛_i 𝔜_{k+1−i}` built from the cone realization.
pub fn fundamental_relation(k: usize) -> ConeOp {
    let mut acc = ConeOp::zero(k);
    for i in 0..k {
        let xx = rho_tilde(&LieElt::lambda(k, LieElt::unit(k, i)));
        let yy = rho_tilde(&LieElt::lambda(k, LieElt::unit(k, k + (k - 1 - i))));
        acc = acc.add(&xx.mul(&yy));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{basis, BasisLabel};

    fn e_lambda(k: usize, j: usize) -> LieElt {
        LieElt::lambda(k, LieElt::unit(k, j))
    }

    #[test]
    fn phi_examples() {
        let k = 2;
        assert_eq!(phi(&LieElt::alpha(k, Rat::one())), euler_shift(k, 1));
        assert_eq!(phi(&LieElt::mu(k, LieElt::unit(k, 0))), -WeylOp::partial(4, 0));
        let one = Poly::one(4);
        assert_eq!(phi(&e_lambda(k, 0)).apply(&one), -Poly::var(4, 3));
    }

    #[test]
    fn rho_examples() {
        let k = 2;
        assert_eq!(rho_amb(&LieElt::alpha(k, Rat::one())), -euler_shift(k, 3));
        assert_eq!(rho_amb(&LieElt::mu(k, LieElt::unit(k, 0))), WeylOp::var(4, 0));
        let expect = &(&euler_shift(k, 3) * &WeylOp::partial(4, 3)) - &(&WeylOp::var(4, 0) * &WeylOp::laplacian(k));
        assert_eq!(rho_amb(&e_lambda(k, 0)), expect);
        let xx1 = &(&euler_shift(k, 1) * &WeylOp::partial(4, 3)) - &(&WeylOp::var(4, 0) * &WeylOp::laplacian(k));
        assert_eq!(rho_tilde(&e_lambda(k, 0)).rep(), &xx1);
        assert_eq!(rho_tilde(&LieElt::alpha(k, Rat::one())).rep(), &-euler_shift(k, 1));
    }

    #[test]
    fn tau_examples() {
        for k in [2usize, 3] {
            let n = 2 * k;
            assert_eq!(tau(&WeylOp::laplacian(k)), WeylOp::mult(&q_form(k)));
            assert_eq!(tau(&WeylOp::euler(n)), -euler_shift(k, 2 * k as i64));
            assert_eq!(tau(&WeylOp::var(n, 0)), WeylOp::partial(n, 0));
            assert_eq!(tau(&WeylOp::partial(n, 0)), -WeylOp::var(n, 0));
        }
    }

    #[test]
    fn tau_is_multiplicative() {
        let k = 2;
        let a = &WeylOp::var(4, 1) * &WeylOp::partial(4, 2);
        let b = &WeylOp::laplacian(k) + &WeylOp::var(4, 0);
        assert_eq!(tau(&(&a * &b)), &tau(&a) * &tau(&b));
    }

    #[test]
    fn levi_generators_match_named_operators() {
        let k = 3;
        let n = 6;
        let (x, y) = (|i: usize| i - 1, |i: usize| k + i - 1);
        let vd = |a: usize, b: usize| &WeylOp::var(n, a) * &WeylOp::partial(n, b);
        for (label, xi) in basis(k) {
            let expect = match label {
                BasisLabel::D(i, j) => &vd(x(j), x(i)) - &vd(y(k + 1 - i), y(k + 1 - j)),
                BasisLabel::B(i, j) => &vd(y(k + 1 - j), x(i)) - &vd(y(k + 1 - i), x(j)),
                BasisLabel::C(i, j) => &vd(x(j), y(k + 1 - i)) - &vd(x(i), y(k + 1 - j)),
                _ => continue,
            };
            assert_eq!(rho_tilde_rep(&xi), expect, "{label}");
        }
    }

    #[test]
    fn tau_hat_examples() {
        let k = 2;
        let xx1 = tau_hat(&phi(&e_lambda(k, 0))).unwrap();
        assert_eq!(xx1, rho_tilde(&e_lambda(k, 0)));
        assert_eq!(tau_hat(&WeylOp::one(4)).unwrap(), ConeOp::one(k));
        assert!(tau_hat(&WeylOp::laplacian(k)).unwrap().is_zero());
    }

    #[test]
    fn ideal_preservation() {
        for k in [2usize, 3] {
            for (label, xi) in basis(k) {
                let amb = rho_amb(&xi);
                let lam = matches!(label, BasisLabel::Lambda(_));
                assert_eq!(is_ideal_preserving(&amb), !lam, "{label}");
                assert_eq!(is_ideal_preserving_algebraic(&amb), !lam, "{label}");
                assert!(is_ideal_preserving(&rho_tilde_rep(&xi)));
            }
            assert!(is_ideal_preserving(&WeylOp::var(2 * k, 0)));
            assert!(!is_ideal_preserving(&WeylOp::partial(2 * k, 0)));
        }
    }

    #[test]
    fn relations_hold_only_in_the_left_multiple_quotient() {
        for k in [2usize, 3] {
            let q = q_form(k);
            for i in 0..k {
                for j in 0..k {
                    let xx = rho_tilde(&e_lambda(k, i));
                    let yy = rho_tilde(&e_lambda(k, k + j));
                    assert!(xx.commutator(&yy).is_zero());
                }
            }
            let rel = fundamental_relation(k);
            assert!(rel.is_zero());
            // reducing ∂-left coefficients instead does not kill the relation
            let dleft_zero = rel.rep().dleft_normal_form().values().all(|c| c.reduce(&q).is_zero());
            assert!(!dleft_zero);
        }
    }

    #[test]
    fn gradings() {
        let k = 2;
        assert_eq!(grading(&ConeOp::new(WeylOp::var(4, 0))), Grading::Degree(1));
        assert_eq!(grading(&rho_tilde(&e_lambda(k, 0))), Grading::Degree(-1));
        assert_eq!(grading(&ConeOp::new(WeylOp::euler(4))), Grading::Degree(0));
        let mixed = ConeOp::new(&WeylOp::var(4, 0) + &WeylOp::one(4));
        assert_eq!(grading(&mixed), Grading::Mixed);
    }
}
