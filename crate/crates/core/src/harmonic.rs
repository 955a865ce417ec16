//! Symmetries of the Laplacian, the Kelvin transform, spherical harmonics,
//! and the exact identities behind the exponential, Bessel and boundary
//! phase examples, plus the `n = 2` counterexample.

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::cone::ConeOp;
use crate::forms::{bar, block, pair, q_form, q_form_at, quad};
use crate::linalg::RatMatrix;
use crate::poly::{monomials_of_degree, Monomial, Poly};
use crate::qlaurent::{eval_poly_at, QLaurent};
use crate::rat::{binomial, Rat};
use crate::report::Check;
use crate::weyl::WeylOp;
use crate::words::Generator;

/// Witness that `Δ·xi = delta·Δ`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SymmetryCert {
    pub xi: WeylOp,
    pub delta: WeylOp,
}

impl SymmetryCert {
    pub fn verify(&self) -> bool {
        let lap = WeylOp::laplacian(self.xi.nvars() / 2);
        &lap * &self.xi == &self.delta * &lap
    }
}

/// Whether `a` lies in the left ideal generated by `Δ`.
pub fn in_laplacian_ideal(a: &WeylOp) -> bool {
    a.divide_right_by_constcoef(&WeylOp::laplacian(a.nvars() / 2)).is_ok()
}

/// Decides `Δ·xi ∈ D·Δ`; on success the certificate has been multiplied back.
pub fn is_higher_symmetry(xi: &WeylOp) -> Option<SymmetryCert> {
    let lap = WeylOp::laplacian(xi.nvars() / 2);
    let delta = (&lap * xi).divide_right_by_constcoef(&lap).ok()?;
    let cert = SymmetryCert { xi: xi.clone(), delta };
    cert.verify().then_some(cert)
}

/// `(Kf)(v) = (−Q(v))^{−(k−1)} f(−v/Q(v))`, term by term:
/// `K(v^α/Q^m) = (−1)^{|α|+k−1} v^α Q^{m−|α|−k+1}`.
pub fn kelvin(f: &QLaurent) -> QLaurent {
    let k = f.k();
    let m = f.qexp() as i32;
    let mut out = QLaurent::zero(k);
    for (mono, c) in f.numerator().terms() {
        let d = mono.degree() as i32;
        let sign = if (d + k as i32 - 1) % 2 == 0 { Rat::one() } else { Rat::int(-1) };
        let term = QLaurent::from_poly(k, Poly::term(mono.clone(), c * &sign));
        out = &out + &(&term * &QLaurent::q_pow(k, m - d - k as i32 + 1));
    }
    out
}

/// Kelvin transform by literal substitution `v ↦ −v/Q`, as an independent
/// route to the same value.
pub fn kelvin_by_substitution(f: &QLaurent) -> QLaurent {
    let k = f.k();
    let n = 2 * k;
    let inv_q = QLaurent::q_pow(k, -1);
    let vals: Vec<QLaurent> =
        (0..n).map(|j| &QLaurent::from_poly(k, -&Poly::var(n, j)) * &inv_q).collect();
    let num = eval_poly_at(f.numerator(), &vals);
    let den = eval_poly_at(&q_form(k), &vals).pow(f.qexp());
    let sign = if (k - 1) % 2 == 0 { Rat::one() } else { Rat::int(-1) };
    let pref = QLaurent::q_pow(k, 1 - k as i32).scale(&sign);
    let quotient = &num * &invert_q_power(&den);
    &pref * &quotient
}

/// Inverse of `c·Q^e` for an integer `e` of either sign.
fn invert_q_power(p: &QLaurent) -> QLaurent {
    let k = p.k();
    let q = q_form(k);
    let mut num = p.numerator().clone();
    let mut e = -(p.qexp() as i32);
    while !num.is_constant() {
        num = num.div_exact(&q).unwrap_or_else(|| panic!("not a power of Q: {p}"));
        e += 1;
    }
    assert!(!num.is_zero(), "inverting zero");
    QLaurent::q_pow(k, -e).scale(&num.constant_term().recip())
}

/// `Δ(Kf) − (−Q)^{−2} K(Δf)`.
pub fn kelvin_intertwine_check(f: &QLaurent) -> QLaurent {
    let k = f.k();
    let lap = WeylOp::laplacian(k);
    let lhs = lap.apply_laurent(&kelvin(f));
    let rhs = &QLaurent::q_pow(k, -2) * &kelvin(&lap.apply_laurent(f));
    &lhs - &rhs
}

/// `Sym^d = H_d ⊕ Q·Sym^{d−2}`.
#[derive(Clone, Debug)]
pub struct HarmonicDecomposition {
    pub harmonic: Vec<Poly>,
    pub q_multiples: Vec<Poly>,
}

/// The matrix of `Δ: Sym^d → Sym^{d−2}` in monomial bases.
fn laplacian_matrix(k: usize, d: u32) -> (RatMatrix, Vec<Monomial>) {
    let n = 2 * k;
    let src = monomials_of_degree(n, d);
    let dst = if d >= 2 { monomials_of_degree(n, d - 2) } else { Vec::new() };
    let lap = WeylOp::laplacian(k);
    let mut m = RatMatrix::zeros(dst.len(), src.len());
    for (j, s) in src.iter().enumerate() {
        let img = lap.apply(&Poly::term(s.clone(), Rat::one()));
        for (mono, c) in img.terms() {
            let i = dst.iter().position(|t| t == mono).expect("image lies in Sym^{d-2}");
            m[(i, j)] = c.clone();
        }
    }
    (m, src)
}

pub fn harmonic_decompose(d: u32, k: usize) -> HarmonicDecomposition {
    let n = 2 * k;
    let (m, src) = laplacian_matrix(k, d);
    let harmonic = if m.rows() == 0 {
        src.iter().map(|s| Poly::term(s.clone(), Rat::one())).collect()
    } else {
        m.nullspace()
            .into_iter()
            .map(|v| Poly::from_terms(n, src.iter().cloned().zip(v)))
            .collect()
    };
    let q = q_form(k);
    let q_multiples = if d >= 2 {
        monomials_of_degree(n, d - 2).into_iter().map(|s| &Poly::term(s, Rat::one()) * &q).collect()
    } else {
        Vec::new()
    };
    HarmonicDecomposition { harmonic, q_multiples }
}

/// `binom(d+2k−1, 2k−1) − binom(d+2k−3, 2k−1)`.
pub fn harmonic_dimension(d: u32, k: usize) -> i64 {
    let (d, n) = (d as i64, 2 * k as i64);
    let b = |a: i64| if a < n - 1 { 0 } else { binomial(a, n - 1).to_i64().expect("small binomial") };
    b(d + n - 1) - b(d + n - 3)
}

impl HarmonicDecomposition {
    /// Rank of the union of both bases in monomial coordinates.
    pub fn combined_rank(&self, d: u32, k: usize) -> usize {
        let src = monomials_of_degree(2 * k, d);
        let rows: Vec<Vec<Rat>> = self
            .harmonic
            .iter()
            .chain(&self.q_multiples)
            .map(|p| src.iter().map(|m| p.coeff(m)).collect())
            .collect();
        if rows.is_empty() {
            return 0;
        }
        RatMatrix::from_rows(rows).rank()
    }
}

/// `e^{−ℓ}Δ(p e^{ℓ})` for the linear form `ℓ = Σ c_j v_j` on the first `2k`
/// variables: `Δp + Σ_j c_j ∂_{bar j} p + Q(c)·p`.
pub fn twisted_laplacian(k: usize, p: &Poly, c: &[Poly]) -> Poly {
    let n = 2 * k;
    let nv = p.nvars();
    let lap = WeylOp::laplacian(k).embed(nv, 0);
    let mut out = lap.apply(p);
    for j in 0..n {
        if !c[j].is_zero() {
            out = &out + &(&c[j] * &p.derivative(bar(n, j)));
        }
    }
    &out + &(&quad(c) * p)
}

/// `ℓ = −B(x, v)` on `4k` variables, `v` first and `x` second; its gradient
/// in `v` is `−Jx`.
pub fn exp_gradient(k: usize) -> Vec<Poly> {
    let n = 2 * k;
    let x = block(2 * n, n, n);
    (0..n).map(|j| -&x[bar(n, j)]).collect()
}

/// `Δ_ℓ(1)` reduced modulo `Q(x)`; zero on the cone.
pub fn exp_harmonicity(k: usize) -> Poly {
    let n = 2 * k;
    let raw = twisted_laplacian(k, &Poly::one(2 * n), &exp_gradient(k));
    raw.reduce(&q_form_at(2 * n, n, k))
}

/// Truncated series `Σ_{m≤M} a_m t^m`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeriesInT {
    pub coeffs: Vec<Rat>,
}

impl SeriesInT {
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// The series as a polynomial in the given variable.
    pub fn to_poly(&self, nvars: usize, var: usize) -> Poly {
        Poly::from_terms(
            nvars,
            self.coeffs.iter().enumerate().map(|(m, c)| {
                let mut mono = Monomial::one(nvars);
                mono.set(var, m as u16);
                (mono, c.clone())
            }),
        )
    }
}

/// `a_0 = 1`, `a_{m+1}(m+1)(m+k−1) = a_m`.
pub fn bessel_series(k: usize, order: usize) -> SeriesInT {
    let mut coeffs = vec![Rat::one()];
    for m in 0..order {
        let den = Rat::int(((m + 1) * (m + k - 1)) as i64);
        let next = &coeffs[m] / &den;
        coeffs.push(next);
    }
    SeriesInT { coeffs }
}

/// `(𝔛₁ − 1)f`, `Δf` and `Ef − t f′` for the truncated Bessel series in
/// `t = y_k`.
pub fn bessel_check(k: usize, order: usize) -> Vec<Check> {
    let n = 2 * k;
    let t = n - 1;
    let s = bessel_series(k, order);
    let f = s.to_poly(n, t);
    let xx1 = ConeOp::new(Generator::XX(1).rep(k));
    let res = &xx1.apply(&f) - &f;
    let mut top = Monomial::one(n);
    top.set(t, order as u16);
    let expected = Poly::term(top, -&s.coeffs[order]);
    let mut out = vec![Check::expect(
        "bessel.residue",
        "(XX1 − 1)f = −a_M t^M",
        res == expected,
        || format!("{res}"),
    )];
    let lap = WeylOp::laplacian(k).apply(&f);
    out.push(Check::all_zero("bessel.harmonic", "Δf = 0", [&lap]));
    let ef = &WeylOp::euler(n).apply(&f) - &(&Poly::var(n, t) * &f.derivative(t));
    out.push(Check::all_zero("bessel.euler", "Ef = t f′", [&ef]));
    out
}

/// The boundary phase identities with `w = λx + εu`, on `4k + 2` variables
/// ordered `x, u, λ, ε`.
pub fn boundary_phase_check(k: usize) -> Vec<Check> {
    let n = 2 * k;
    let nv = 2 * n + 2;
    let x = block(nv, 0, n);
    let u = block(nv, n, n);
    let lam = Poly::var(nv, 2 * n);
    let eps = Poly::var(nv, 2 * n + 1);
    let w: Vec<Poly> = x.iter().zip(&u).map(|(a, b)| &(&lam * a) + &(&eps * b)).collect();
    let qx = q_form_at(nv, 0, k);
    let bxu = pair(&x, &u);
    let bxw = pair(&x, &w);
    let qw = quad(&w);
    let qu = quad(&u);

    let r1 = (&bxw - &(&eps * &bxu)).reduce(&qx);
    let r2 = (&(&qw - &(&(&lam * &eps) * &bxu)) - &(&eps.pow(2) * &qu)).reduce(&qx);
    let cleared = &(&bxw * &(&(&lam * &bxu) + &(&eps * &qu))) - &(&qw * &bxu);
    let r3 = cleared.reduce(&qx);
    let zero_eps: Vec<Poly> = (0..nv).map(|i| if i == 2 * n + 1 { Poly::zero(nv) } else { Poly::var(nv, i) }).collect();
    let r4 = (&(&bxw * &lam) - &qw).substitute(&zero_eps).reduce(&qx);
    vec![
        Check::all_zero("boundary.pairing", "B(x,w) = εB(x,u) on the cone", [&r1]),
        Check::all_zero("boundary.quadric", "Q(w) = λεB(x,u) + ε²Q(u) on the cone", [&r2]),
        Check::all_zero("boundary.phase", "φ_x(w)(λ + εQ(u)/B(x,u)) = 1", [&r3]),
        Check::all_zero("boundary.leading", "λB(x,w) = Q(w) at ε = 0", [&r4]),
    ]
}

/// `ξ = x^{−1}∂_x` for `n = 2`, `Q = xy`, acting on Q-Laurent functions.
fn n2_xi(f: &QLaurent) -> QLaurent {
    let x_inv = QLaurent::new(1, Poly::var(2, 1), 1);
    &x_inv * &f.partial(0)
}

fn n2_lap(f: &QLaurent) -> QLaurent {
    f.partial(0).partial(1)
}

/// `x^a y^b` with `a` of either sign.
pub fn n2_monomial(a: i32, b: u32) -> QLaurent {
    let y = Poly::var(2, 1);
    if a >= 0 {
        QLaurent::from_poly(1, &Poly::var(2, 0).pow(a as u32) * &y.pow(b))
    } else {
        let e = a.unsigned_abs();
        QLaurent::new(1, y.pow(e + b), e)
    }
}

/// `[Δ, x^{−1}∂_x] = −x^{−2}Δ` on `x^a y^b`, and the obstruction
/// `ξ(x) = x^{−1}` while `Δ(x) = 0`.
pub fn n2_counterexample() -> Vec<Check> {
    let x_inv2 = n2_monomial(-2, 0);
    let mut bad = None;
    for a in -3..=3 {
        for b in 0..=3 {
            let f = n2_monomial(a, b);
            let lhs = &n2_lap(&n2_xi(&f)) - &n2_xi(&n2_lap(&f));
            let rhs = -&(&x_inv2 * &n2_lap(&f));
            if lhs != rhs && bad.is_none() {
                bad = Some(format!("x^{a} y^{b}: {}", &lhs - &rhs));
            }
        }
    }
    let x = n2_monomial(1, 0);
    let xi_x = n2_xi(&x);
    vec![
        Check::expect("n2.commutator", "[Δ, x⁻¹∂x] = −x⁻²Δ", bad.is_none(), || bad.clone().unwrap()),
        Check::expect("n2.value", "ξ(x) = x⁻¹", xi_x == n2_monomial(-1, 0), || xi_x.to_string()),
        Check::expect("n2.not-polynomial", "ξ(x) is not a polynomial", !xi_x.is_poly(), || xi_x.to_string()),
        Check::expect("n2.lap-x", "Δ(x) = 0", n2_lap(&x).is_zero(), || n2_lap(&x).to_string()),
    ]
}

/// `𝔛_i(1) = 𝔜_i(1) = 0`, and the multiplications by `x_i, y_i` applied to
/// `1` span the linear forms.
pub fn dirac_mass_checks(k: usize) -> Vec<Check> {
    let n = 2 * k;
    let one = Poly::one(n);
    let mut out = Vec::new();
    for i in 1..=k {
        for g in [Generator::XX(i), Generator::YY(i)] {
            let v = ConeOp::new(g.rep(k)).apply(&one);
            out.push(Check::all_zero(format!("dirac.{}", g.token(k).to_lowercase()), format!("{}(1) = 0", g.token(k)), [&v]));
        }
    }
    let rows: Vec<Vec<Rat>> = (1..=k)
        .flat_map(|i| [Generator::X(i), Generator::Y(i)])
        .map(|g| {
            let v = ConeOp::new(g.rep(k)).apply(&one);
            (0..n).map(|j| v.coeff(&Monomial::unit(n, j))).collect()
        })
        .collect();
    let rank = RatMatrix::from_rows(rows).rank();
    out.push(Check::expect("dirac.span", "x_i·1, y_i·1 span V", rank == n, || format!("rank {rank}")));
    out
}

/// `Δ(−Q) = −k`.
pub fn non_example(k: usize) -> Rat {
    WeylOp::laplacian(k).apply(&-&q_form(k)).constant_term()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{euler_shift, phi};
    use crate::lie::basis;

    #[test]
    fn euler_is_a_symmetry() {
        for k in [2, 3] {
            let cert = is_higher_symmetry(&euler_shift(k, k as i64 - 1)).unwrap();
            assert_eq!(cert.delta, euler_shift(k, k as i64 + 1));
        }
    }

    #[test]
    fn phi_certificates() {
        let k = 2;
        for (label, xi) in basis(k) {
            let p = phi(&xi);
            let cert = is_higher_symmetry(&p).unwrap_or_else(|| panic!("{label}"));
            let lam: Vec<Rat> = xi.lambda.iter().rev().cloned().collect();
            let b = &WeylOp::mult(&crate::cone::linear_fn(k, &lam)) - &WeylOp::constant(4, xi.alpha.clone());
            assert_eq!(cert.delta, &p - &b.scale(&Rat::int(2)), "{label}");
        }
    }

    #[test]
    fn x1_is_not_a_symmetry() {
        assert!(is_higher_symmetry(&WeylOp::var(4, 0)).is_none());
        assert!(!in_laplacian_ideal(&WeylOp::partial(4, 3)));
    }

    #[test]
    fn kelvin_examples() {
        for k in [2, 3] {
            let one = QLaurent::one(k);
            let sign = if k % 2 == 0 { Rat::int(-1) } else { Rat::one() };
            assert_eq!(kelvin(&one), QLaurent::q_pow(k, 1 - k as i32).scale(&sign));
            let x1 = QLaurent::from_poly(k, Poly::var(2 * k, 0));
            assert_eq!(kelvin(&kelvin(&x1)), x1);
            assert!(WeylOp::laplacian(k).apply_laurent(&kelvin(&one)).is_zero());
            let f = QLaurent::new(k, &Poly::var(2 * k, 1).pow(2) + &Poly::var(2 * k, 0), 1);
            assert_eq!(kelvin(&f), kelvin_by_substitution(&f));
            for g in [one, x1, QLaurent::from_poly(k, q_form(k)), f] {
                assert!(kelvin_intertwine_check(&g).is_zero());
            }
        }
    }

    #[test]
    fn harmonic_dimensions() {
        assert_eq!(harmonic_decompose(2, 2).harmonic.len(), 9);
        assert_eq!(harmonic_decompose(0, 2).harmonic.len(), 1);
        assert_eq!(harmonic_decompose(1, 3).harmonic.len(), 6);
        for k in [2, 3] {
            for d in 0..=4 {
                let h = harmonic_decompose(d, k);
                assert_eq!(h.harmonic.len() as i64, harmonic_dimension(d, k));
                let total = monomials_of_degree(2 * k, d).len();
                assert_eq!(h.harmonic.len() + h.q_multiples.len(), total);
                assert_eq!(h.combined_rank(d, k), total);
            }
        }
    }

    #[test]
    fn exponential() {
        for k in [2, 3] {
            assert!(exp_harmonicity(k).is_zero());
        }
        let k = 2;
        let p = &Poly::var(4, 0) * &Poly::var(4, 2);
        let zero = vec![Poly::zero(4); 4];
        assert_eq!(twisted_laplacian(k, &p, &zero), WeylOp::laplacian(k).apply(&p));
    }

    #[test]
    fn twisted_laplacian_matches_truncated_exponential() {
        let k = 2;
        let n = 4;
        let c: Vec<Rat> = [2, -1, 3, 1].into_iter().map(Rat::int).collect();
        let ell = crate::cone::linear_fn(k, &c);
        let p = &(&Poly::var(n, 0) * &Poly::var(n, 3)) + &Poly::var(n, 1).pow(2);
        let trunc = 8;
        let mut exp = Poly::zero(n);
        for m in 0..=trunc {
            exp = &exp + &ell.pow(m).scale(&crate::rat::factorial(m).recip());
        }
        let lhs = WeylOp::laplacian(k).apply(&(&p * &exp));
        let cp: Vec<Poly> = c.iter().map(|r| Poly::constant(n, r.clone())).collect();
        let rhs = &twisted_laplacian(k, &p, &cp) * &exp;
        for d in 0..5 {
            assert_eq!(lhs.homogeneous_part(d), rhs.homogeneous_part(d), "degree {d}");
        }
    }

    #[test]
    fn bessel() {
        let s = bessel_series(2, 5);
        for m in 0..=5u32 {
            let f = crate::rat::factorial(m);
            assert_eq!(s.coeffs[m as usize], (&f * &f).recip());
        }
        assert_eq!(bessel_series(3, 1).coeffs[1], Rat::new(1, 2));
        for k in [2, 3] {
            assert!(bessel_check(k, 12).iter().all(|c| c.passed));
        }
    }

    #[test]
    fn boundary_and_n2_and_dirac() {
        for k in [2, 3] {
            assert!(boundary_phase_check(k).iter().all(|c| c.passed));
            assert!(dirac_mass_checks(k).iter().all(|c| c.passed));
            assert_eq!(non_example(k), Rat::int(-(k as i64)));
        }
        for c in n2_counterexample() {
            assert!(c.passed, "{} {}", c.id, c.residue);
        }
    }
}
