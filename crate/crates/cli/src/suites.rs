//! Named verification suites. Each suite is a list of exact checks; `all`
//! concatenates every suite with the suite name prefixed to the check ids.

use quadric_core::cone::{
    correction, fundamental_relation, grading, is_ideal_preserving, is_ideal_preserving_algebraic, linear_fn, phi,
    rho_amb, rho_tilde, rho_tilde_rep, tau, tau_hat, euler_shift,
};
use quadric_core::forms::q_form;
use quadric_core::harmonic::{
    bessel_check, boundary_phase_check, dirac_mass_checks, exp_harmonicity, harmonic_decompose, harmonic_dimension,
    in_laplacian_ideal, is_higher_symmetry, kelvin, kelvin_by_substitution, kelvin_intertwine_check,
    n2_counterexample, non_example,
};
use quadric_core::lie::{basis, bruhat_factor, chi0_cocycle_defect, BlockType, GroupElt, LieElt};
use quadric_core::moment::{
    check_descent, orbit_matrix_is_skew, phase_euler, poisson, q_star_q_bracket, symbol_pairs, symbol_table,
    verify_orbit_relations, canonical_pairs,
};
use quadric_core::poly::{monomials_of_degree, monomials_up_to};
use quadric_core::qlaurent::QLaurent;
use quadric_core::shapovalov::{fourier_euler, fourier_roots_bezout, scalar_on_graded, shapovalov_closed, shapovalov_expand};
use quadric_core::{Check, ConeOp, GenWord, Generator, Grading, Monomial, Poly, Rat, WeylOp};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::report::SuiteReport;

pub const SUITES: &[&str] = &[
    "algebra-core",
    "weyl",
    "lie-orthogonal",
    "lie-hom",
    "cone-ops",
    "fourier",
    "shapovalov",
    "moment-orbit",
    "symbol",
    "kelvin",
    "harmonic",
    "higher-symmetry",
    "examples",
];

/// Size of the random generator-word corpus of the `fourier` suite.
pub const WORD_CORPUS: usize = 500;
const SEED: u64 = 0x5eed_0f_c0de;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("unknown suite '{0}' (known: {known}, all)", known = SUITES.join(", "))]
pub struct UnknownSuite(pub String);

pub fn run_suite(name: &str, k: usize) -> Result<SuiteReport, UnknownSuite> {
    let checks = if name == "all" {
        SUITES
            .par_iter()
            .flat_map(|s| {
                suite_checks(s, k)
                    .expect("listed suites exist")
                    .into_par_iter()
                    .map(move |mut c| {
                        c.id = format!("{s}/{}", c.id);
                        c
                    })
            })
            .collect()
    } else {
        suite_checks(name, k)?
    };
    Ok(SuiteReport::new(name, k, checks))
}

pub fn suite_checks(name: &str, k: usize) -> Result<Vec<Check>, UnknownSuite> {
    Ok(match name {
        "algebra-core" => algebra_core(k),
        "weyl" => weyl(k),
        "lie-orthogonal" => lie_orthogonal(k),
        "lie-hom" => lie_hom(k),
        "cone-ops" => cone_ops(k),
        "fourier" => fourier(k),
        "shapovalov" => shapovalov(k),
        "moment-orbit" => moment_orbit(k),
        "symbol" => symbol(k),
        "kelvin" => kelvin_suite(k),
        "harmonic" => harmonic(k),
        "higher-symmetry" => higher_symmetry(k),
        "examples" => examples(k),
        other => return Err(UnknownSuite(other.to_string())),
    })
}

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

fn small_rat(r: &mut ChaCha8Rng) -> Rat {
    let num = r.gen_range(-5i64..=5);
    let den = r.gen_range(1i64..=3);
    Rat::new(if num == 0 { 1 } else { num }, den)
}

fn random_monomial(r: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Monomial {
    let d = r.gen_range(0..=max_deg);
    let mut m = Monomial::one(n);
    for _ in 0..d {
        let i = r.gen_range(0..n);
        m.set(i, m.get(i) + 1);
    }
    m
}

/// Sparse random polynomial with at most `terms` terms of degree at most `max_deg`.
pub fn random_poly(r: &mut ChaCha8Rng, n: usize, max_deg: u32, terms: usize) -> Poly {
    let t = r.gen_range(1..=terms);
    Poly::from_terms(n, (0..t).map(|_| (random_monomial(r, n, max_deg), small_rat(r))).collect::<Vec<_>>())
}

pub fn random_weyl(r: &mut ChaCha8Rng, n: usize, max_deg: u32, max_ord: u32, terms: usize) -> WeylOp {
    let mut op = WeylOp::zero(n);
    for _ in 0..r.gen_range(1..=terms) {
        let x = random_monomial(r, n, max_deg);
        let d = random_monomial(r, n, max_ord);
        op.add_term(x, d, small_rat(r));
    }
    op
}

/// Random combination of generator words of length at most four.
pub fn random_word(r: &mut ChaCha8Rng, k: usize) -> GenWord {
    let gens = Generator::all(k);
    let mut w = GenWord::zero(k);
    for _ in 0..r.gen_range(1..=3) {
        let len = r.gen_range(0..=4);
        let letters = (0..len).map(|_| gens[r.gen_range(0..gens.len())]).collect();
        w = w.add(&GenWord::word(k, letters, small_rat(r)));
    }
    w
}

/// One check over many cases, reporting the first failing case.
fn every<T: Sync, R: std::fmt::Display + Send>(
    id: &str,
    anchor: &str,
    cases: &[T],
    f: impl Fn(&T) -> Option<R> + Sync + Send,
) -> Check {
    match cases.par_iter().find_map_first(f) {
        None => Check::pass(id, anchor),
        Some(r) => Check::fail(id, anchor, r.to_string()),
    }
}

fn nonzero<T: std::fmt::Display>(label: impl std::fmt::Display, r: T, zero: bool) -> Option<String> {
    (!zero).then(|| format!("{label}: {r}"))
}

fn op_residue(id: String, anchor: &str, r: &WeylOp) -> Check {
    Check::expect(id, anchor, r.is_zero(), || r)
}

fn lambda_pairing(xi: &LieElt) -> WeylOp {
    let k = xi.k;
    let rev: Vec<Rat> = xi.lambda.iter().rev().cloned().collect();
    &WeylOp::mult(&linear_fn(k, &rev)) - &WeylOp::constant(2 * k, xi.alpha.clone())
}

fn algebra_core(k: usize) -> Vec<Check> {
    let n = 2 * k;
    let q = q_form(k);
    let mut r = rng(1);
    let polys: Vec<Poly> = (0..40).map(|_| random_poly(&mut r, n, 6, 5)).collect();
    let triples: Vec<(Poly, Poly, Poly)> = (0..30)
        .map(|_| (random_poly(&mut r, n, 4, 4), random_poly(&mut r, n, 4, 4), random_poly(&mut r, n, 4, 4)))
        .collect();

    let mut out = Vec::new();
    let half = Rat::new(6, -4);
    out.push(Check::expect("rat.normal-form", "6/(-4) = -3/2", half.to_string() == "-3/2", || half.to_string()));

    let lead = &Poly::var(n, 0) * &Poly::var(n, n - 1);
    let expect = (2..=k).fold(Poly::zero(n), |acc, i| acc - &Poly::var(n, i - 1) * &Poly::var(n, 2 * k - i));
    let got = lead.reduce(&q);
    out.push(Check::expect("reduce.leading-term", "x1*yk = -sum_{i>=2} x_i y_{k+1-i} mod Q", got == expect, || &got - &expect));

    out.push(every("reduce.idempotent", "nf(nf(p)) = nf(p)", &polys, |p| {
        let r1 = p.reduce(&q);
        let r2 = r1.reduce(&q);
        (r1 != r2).then(|| format!("{p}"))
    }));
    out.push(every("reduce.q-multiples", "Q*p = 0 mod Q and (Q*p)/Q = p", &polys, |p| {
        let qp = &q * p;
        let ok = qp.reduce(&q).is_zero() && qp.div_exact(&q).as_ref() == Some(p);
        (!ok).then(|| format!("{p}"))
    }));
    out.push(every("reduce.linear", "nf(p + c*r) = nf(p) + c*nf(r)", &triples, |(a, b, _)| {
        let c = Rat::new(-7, 3);
        let lhs = (a + &b.scale(&c)).reduce(&q);
        let rhs = &a.reduce(&q) + &b.reduce(&q).scale(&c);
        nonzero("residue", &lhs - &rhs, lhs == rhs)
    }));
    out.push(every("ring.associativity", "(ab)c = a(bc)", &triples, |(a, b, c)| {
        let r = &(&(a * b) * c) - &(a * &(b * c));
        nonzero("residue", &r, r.is_zero())
    }));
    out.push(every("ring.distributivity", "a(b+c) = ab + ac", &triples, |(a, b, c)| {
        let r = &(a * &(b + c)) - &(&(a * b) + &(a * c));
        nonzero("residue", &r, r.is_zero())
    }));
    out.push(every("ring.commutativity", "ab = ba", &triples, |(a, b, _)| {
        let r = &(a * b) - &(b * a);
        nonzero("residue", &r, r.is_zero())
    }));
    let e = WeylOp::euler(n);
    out.push(every("euler.eigenvalue", "E p = d p on degree-d pieces", &polys, |p| {
        (0..=6u32).find_map(|d| {
            let h = p.homogeneous_part(d);
            let r = &e.apply(&h) - &h.scale(&Rat::int(d as i64));
            nonzero(format!("degree {d}"), &r, r.is_zero())
        })
    }));
    let x1 = Poly::var(n, 0);
    let a = QLaurent::new(k, &q * &x1, 2);
    let b = QLaurent::new(k, x1.clone(), 1);
    out.push(Check::expect("qlaurent.unique", "Q x1 / Q^2 = x1 / Q", a == b, || format!("{a} vs {b}")));
    out
}

fn weyl(k: usize) -> Vec<Check> {
    let n = 2 * k;
    let lap = WeylOp::laplacian(k);
    let e = WeylOp::euler(n);
    let qm = WeylOp::mult(&q_form(k));
    let mut out = Vec::new();

    let mut ccr = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = WeylOp::partial(n, i).commutator(&WeylOp::var(n, j));
            let want = if i == j { WeylOp::one(n) } else { WeylOp::zero(n) };
            ccr.push(&c - &want);
        }
    }
    out.push(every("ccr", "[d_i, v_j] = delta_ij", &ccr, |r| nonzero("residue", r, r.is_zero())));
    out.push(op_residue("delta-q".into(), "[Delta, Q] = E + k", &(&lap.commutator(&qm) - &euler_shift(k, k as i64))));
    out.push(op_residue("delta-e".into(), "[Delta, E] = 2 Delta", &(&lap.commutator(&e) - &lap.scale(&Rat::int(2)))));
    out.push(op_residue("e-q".into(), "[E, Q] = 2 Q", &(&e.commutator(&qm) - &qm.scale(&Rat::int(2)))));
    let sl2 = &lap.commutator(&qm) - &euler_shift(k, k as i64);
    let ext = quadric_core::weyl::is_zero_extensional(&sl2, 2) && !quadric_core::weyl::is_zero_extensional(&e, 1);
    out.push(Check::expect(
        "extensional",
        "an order-r operator is zero iff it kills all monomials of degree <= r",
        ext,
        || "E was not detected on degree 1",
    ));

    let mut r = rng(2);
    let ops: Vec<(WeylOp, WeylOp, WeylOp, Poly)> = (0..25)
        .map(|_| {
            (
                random_weyl(&mut r, n, 3, 3, 3),
                random_weyl(&mut r, n, 3, 3, 3),
                random_weyl(&mut r, n, 3, 3, 3),
                random_poly(&mut r, n, 5, 4),
            )
        })
        .collect();
    out.push(every("associativity", "(ab)c = a(bc)", &ops, |(a, b, c, _)| {
        let r = &(&(a * b) * c) - &(a * &(b * c));
        nonzero("residue", &r, r.is_zero())
    }));
    out.push(every("module-action", "(ab)(f) = a(b(f))", &ops, |(a, b, _, f)| {
        let r = &(a * b).apply(f) - &a.apply(&b.apply(f));
        nonzero("residue", &r, r.is_zero())
    }));
    out.push(every("normal-form.round-trip", "x-left and d-left forms are inverse", &ops, |(a, _, _, _)| {
        let ok = WeylOp::from_dleft(n, &a.dleft_normal_form()) == *a && WeylOp::from_xleft_coeffs(n, &a.xleft_coeffs()) == *a;
        (!ok).then(|| a.to_string())
    }));
    out.push(every("division.multiply-back", "(aQ)/Q = a and (a Delta)/Delta = a", &ops, |(a, _, _, _)| {
        let by_q = (a * &qm).divide_right_by_mult(&q_form(k));
        let by_lap = (a * &lap).divide_right_by_constcoef(&lap);
        let ok = by_q.as_ref().ok() == Some(a) && by_lap.as_ref().ok() == Some(a);
        (!ok).then(|| a.to_string())
    }));
    out.push(every("symbol.multiplicative", "sigma(ab) = sigma(a) sigma(b)", &ops, |(a, b, _, _)| {
        let r = &(a * b).principal_symbol() - &(&a.principal_symbol() * &b.principal_symbol());
        nonzero("residue", &r, r.is_zero())
    }));
    out.push(Check::expect("division.rejects", "x1 is not a right multiple of Delta", WeylOp::var(n, 0).divide_right_by_constcoef(&lap).is_err(), || "quotient returned"));

    out.extend(basis(k).into_par_iter().map(|(label, xi)| {
        let p = phi(&xi);
        let r = &p.commutator(&lap) - &(&lambda_pairing(&xi).scale(&Rat::int(2)) * &lap);
        op_residue(format!("commutator-law.{label}"), "[phi(xi), Delta] = 2(B(lambda,v) - alpha) Delta", &r)
    }).collect::<Vec<_>>());
    out
}

fn levi_sample(k: usize) -> GroupElt {
    let n = 2 * k;
    let mut h = quadric_core::RatMatrix::identity(n);
    h[(0, 0)] = Rat::int(2);
    h[(n - 1, n - 1)] = Rat::new(1, 2);
    h[(1, 1)] = Rat::int(3);
    h[(n - 2, n - 2)] = Rat::new(1, 3);
    GroupElt::levi(&Rat::int(-2), &h).expect("diagonal Levi element preserves the form")
}

fn lie_orthogonal(k: usize) -> Vec<Check> {
    let n = 2 * k;
    let b = basis(k);
    let elts: Vec<LieElt> = b.iter().map(|(_, e)| e.clone()).collect();
    let mut out = Vec::new();
    let dim = (n + 2) * (n + 1) / 2;
    out.push(Check::expect("dimension", "dim so(n+2) = (n+2)(n+1)/2", b.len() == dim, || b.len()));
    out.push(every("validity", "basis elements lie in so(n+2)", &b, |(l, e)| (!e.is_valid()).then(|| l.to_string())));

    let pairs: Vec<(usize, usize)> = (0..b.len()).flat_map(|i| (i..b.len()).map(move |j| (i, j))).collect();
    out.push(every("bracket.blocks", "block bracket = matrix commutator", &pairs, |&(i, j)| {
        let ok = elts[i].bracket(&elts[j]) == elts[i].bracket_matrix(&elts[j]);
        (!ok).then(|| format!("{} {}", b[i].0, b[j].0))
    }));
    out.push(every("bracket.antisymmetry", "[a,b] = -[b,a]", &pairs, |&(i, j)| {
        let ok = elts[i].bracket(&elts[j]) == elts[j].bracket(&elts[i]).scale(&Rat::int(-1));
        (!ok).then(|| format!("{} {}", b[i].0, b[j].0))
    }));
    let m = b.len();
    let triples: Vec<(usize, usize, usize)> =
        (0..m).flat_map(|i| (i + 1..m).flat_map(move |j| (j + 1..m).map(move |l| (i, j, l)))).collect();
    out.push(every("jacobi", "[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0", &triples, |&(i, j, l)| {
        let (x, y, z) = (&elts[i], &elts[j], &elts[l]);
        let s = x.bracket(&y.bracket(z)).add(&y.bracket(&z.bracket(x))).add(&z.bracket(&x.bracket(y)));
        (!s.is_zero()).then(|| format!("{} {} {}", b[i].0, b[j].0, b[l].0))
    }));
    let w0 = GroupElt::w0(k);
    out.push(every("weyl-involution", "Ad(w0) matches the block formula and squares to 1", &b, |(l, e)| {
        let ok = w0.adjoint(e) == e.ad_w0() && e.ad_w0().ad_w0() == *e;
        (!ok).then(|| l.to_string())
    }));

    let q = QLaurent::from_poly(k, q_form(k));
    let v: Vec<QLaurent> = (0..n).map(|i| QLaurent::from_poly(k, Poly::var(n, i))).collect();
    let inv_q = QLaurent::q_pow(k, -1);
    out.push(match bruhat_factor(&w0) {
        Ok(f) => {
            let ok = f.chi0 == -&q && (0..n).all(|i| f.v_prime[i] == -&(&v[i] * &inv_q));
            Check::expect("bruhat.w0", "w0: v' = -v/Q(v), chi0 = -Q(v)", ok, || format!("chi0 = {}", f.chi0))
        }
        Err(e) => Check::fail("bruhat.w0", "w0: v' = -v/Q(v), chi0 = -Q(v)", e.to_string()),
    });
    let mu: Vec<Rat> = (0..n).map(|i| Rat::new(i as i64 * 2 - 3, i as i64 + 1)).collect();
    out.push(match bruhat_factor(&GroupElt::u_op(&mu)) {
        Ok(f) => {
            let ok = f.chi0 == QLaurent::one(k)
                && (0..n).all(|i| f.v_prime[i] == &v[i] - &QLaurent::from_poly(k, Poly::constant(n, mu[i].clone())));
            Check::expect("bruhat.translation", "u_op(mu): v' = v - mu, chi0 = 1", ok, || format!("chi0 = {}", f.chi0))
        }
        Err(e) => Check::fail("bruhat.translation", "u_op(mu): v' = v - mu, chi0 = 1", e.to_string()),
    });

    let nu: Vec<Rat> = (0..n).map(|i| Rat::new(1 - i as i64, 2)).collect();
    let l = levi_sample(k);
    let (u1, u2) = (GroupElt::u_op(&mu), GroupElt::u_op(&nu));
    let gpairs = [(&w0, &w0), (&w0, &u1), (&u1, &u2), (&u1, &l), (&l, &w0), (&l, &u1), (&w0, &l)];
    let outside = bruhat_factor(&GroupElt::u(&nu));
    out.push(Check::expect(
        "bruhat.outside-class",
        "u(lambda) has a pivot that is not a power of Q and is rejected",
        outside.is_err(),
        || format!("{outside:?}"),
    ));
    out.push(every("chi0.cocycle", "chi0(g1 g2, v) = chi0(g2, v1) chi0(g1, v)", &gpairs, |(g1, g2)| {
        match chi0_cocycle_defect(g1, g2) {
            Ok(d) if d.is_zero() => None,
            Ok(d) => Some(d.to_string()),
            Err(e) => Some(e.to_string()),
        }
    }));
    out
}

fn lie_hom(k: usize) -> Vec<Check> {
    let b = basis(k);
    let reps: Vec<ConeOp> = b.par_iter().map(|(_, xi)| rho_tilde(xi)).collect();
    let pairs: Vec<(usize, usize)> = (0..b.len()).flat_map(|i| (i + 1..b.len()).map(move |j| (i, j))).collect();
    pairs
        .into_par_iter()
        .map(|(i, j)| {
            let lhs = rho_tilde(&b[i].1.bracket(&b[j].1));
            let rhs = reps[i].commutator(&reps[j]);
            let r = lhs.sub(&rhs);
            Check::expect(
                format!("hom.{}.{}", b[i].0, b[j].0),
                "rho~([a,b]) = [rho~(a), rho~(b)] in the cone quotient",
                r.is_zero(),
                || r.class().clone(),
            )
        })
        .collect()
}

fn cone_ops(k: usize) -> Vec<Check> {
    let n = 2 * k;
    let qm = WeylOp::mult(&q_form(k));
    let mut out: Vec<Check> = basis(k)
        .into_par_iter()
        .flat_map_iter(|(label, xi)| {
            let amb = rho_amb(&xi);
            let tp = &tau(&phi(&xi)) - &amb;
            let conj = &(&qm * &amb) - &(&(&amb - &correction(&xi)) * &qm);
            let lam = label.block() == BlockType::Lambda;
            let pres = is_ideal_preserving(&amb);
            let alg = is_ideal_preserving_algebraic(&amb);
            let th = tau_hat(&phi(&xi)).map(|c| c == rho_tilde(&xi));
            vec![
                op_residue(format!("tau-phi.{label}"), "tau(phi(xi)) = rho_amb(xi)", &tp),
                op_residue(format!("conjugation.{label}"), "Q* rho_amb(xi) = (rho_amb(xi) - A_xi) Q*", &conj),
                Check::expect(
                    format!("ideal.{label}"),
                    "rho_amb preserves the ideal iff xi has no lambda part; rho~ always does",
                    pres == !lam && alg == pres && is_ideal_preserving(&rho_tilde_rep(&xi)),
                    || format!("ambient preserving = {pres}, algebraic test = {alg}"),
                ),
                Check::expect(format!("tau-hat.{label}"), "tau^(phi(xi)) = rho~(xi)", th == Ok(true), || format!("{th:?}")),
            ]
        })
        .collect();
    out.push(op_residue("tau.laplacian".into(), "tau(Delta) = Q*", &(&tau(&WeylOp::laplacian(k)) - &qm)));
    out.push(op_residue("tau.euler".into(), "tau(E) = -E - 2k", &(&tau(&WeylOp::euler(n)) + &euler_shift(k, 2 * k as i64))));
    let gens = Generator::all(k);
    out.push(every("grading", "[E, g] = deg(g) g in the cone quotient", &gens, |g| {
        let got = grading(&ConeOp::new(g.rep(k)));
        (got != Grading::Degree(g.degree())).then(|| format!("{g:?}: {got:?}"))
    }));
    out
}

fn fourier(k: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let xx: Vec<ConeOp> = (1..=k).map(|i| GenWord::letter(k, Generator::XX(i)).eval()).collect();
    let yy: Vec<ConeOp> = (1..=k).map(|i| GenWord::letter(k, Generator::YY(i)).eval()).collect();
    for i in 0..k {
        for j in 0..k {
            let c = xx[i].commutator(&yy[j]);
            out.push(Check::expect(
                format!("commute.XX{}.YY{}", i + 1, j + 1),
                "[XX_i, YY_j] = 0 in the cone quotient",
                c.is_zero(),
                || c.class().clone(),
            ));
        }
    }
    let rel = fundamental_relation(k);
    out.push(Check::expect("fundamental-relation", "sum_i XX_i YY_{k+1-i} = 0", rel.is_zero(), || rel.class().clone()));

    let mut r = rng(4);
    let corpus: Vec<GenWord> = (0..WORD_CORPUS).map(|_| random_word(&mut r, k)).collect();
    out.push(every("involution.corpus", "F(F(w)) = w on random words", &corpus, |w| {
        (w.fourier().fourier() != *w).then(|| w.to_string())
    }));
    out.push(every("degree-negation.corpus", "deg F(w) = -deg w on homogeneous words", &corpus, |w| {
        let d = w.degree()?;
        (w.fourier().degree() != Some(-d)).then(|| w.to_string())
    }));
    out.push(every("involution.letters", "F(F(g)) = g, and F is defined on every generator", &Generator::all(k), |g| {
        let w = GenWord::letter(k, *g);
        (w.fourier().fourier() != w).then(|| format!("{g:?}"))
    }));

    let letter = |g| GenWord::letter(k, g);
    let comm = |a: GenWord, b: GenWord| a.mul(&b).sub(&b.mul(&a));
    let mut relations: Vec<(String, GenWord)> = Vec::new();
    for i in 1..=k {
        for j in 1..=k {
            if i < j {
                relations.push((format!("x{i}.x{j}"), comm(letter(Generator::X(i)), letter(Generator::X(j)))));
            }
            relations.push((format!("x{i}.y{j}"), comm(letter(Generator::X(i)), letter(Generator::Y(j)))));
        }
        relations.push((
            format!("euler.x{i}"),
            comm(letter(Generator::ETilde), letter(Generator::X(i))).sub(&letter(Generator::X(i))),
        ));
    }
    let qword = (1..=k).fold(GenWord::zero(k), |acc, i| {
        acc.add(&GenWord::word(k, vec![Generator::X(i), Generator::Y(k + 1 - i)], Rat::int(1)))
    });
    relations.push(("quadric".into(), qword));
    out.extend(relations.into_par_iter().map(|(name, w)| {
        let a = w.eval();
        let b = w.fourier().eval();
        Check::expect(
            format!("relation.{name}"),
            "r = 0 implies F(r) = 0 in the cone quotient",
            a.is_zero() && b.is_zero(),
            || format!("r = {}, F(r) = {}", a.class(), b.class()),
        )
    }).collect::<Vec<_>>());
    out
}

fn shapovalov(k: usize) -> Vec<Check> {
    let levi: Vec<Generator> =
        Generator::all(k).into_iter().filter(|g| matches!(g, Generator::D(..) | Generator::B(..) | Generator::C(..))).collect();
    let e = ConeOp::new(WeylOp::euler(2 * k));
    (1..=3u32)
        .into_par_iter()
        .flat_map_iter(|d| {
            let op = shapovalov_expand(k, d);
            let closed = shapovalov_closed(d, k);
            let class = op.sub(&ConeOp::new(closed.to_weyl(k)));
            let mut out = vec![Check::expect(
                format!("closed-form.d{d}"),
                "B_d = prod_j (E - j + 1)(E + k - j - 1) in the cone quotient",
                class.is_zero(),
                || class.class().clone(),
            )];
            let bad = (0..=2 * d + 1).find_map(|r| match scalar_on_graded(&op, r) {
                Ok(s) if s == closed.eval(&Rat::int(r as i64)) => None,
                Ok(s) => Some(format!("E = {r}: {s}")),
                Err(e) => Some(e.to_string()),
            });
            out.push(match bad {
                None => Check::pass(format!("scalars.d{d}"), "B_d acts on degree r by its closed form at E = r"),
                Some(r) => Check::fail(format!("scalars.d{d}"), "B_d acts on degree r by its closed form at E = r", r),
            });
            out.push(match fourier_roots_bezout(d, k) {
                Ok((a, b)) => {
                    let s = a.mul(&closed).add(&b.mul(&fourier_euler(&closed, k)));
                    Check::expect(format!("bezout.d{d}"), "a B_d + b F(B_d) = 1 in Q[E]", s.is_one(), || s)
                }
                Err(e) => Check::fail(format!("bezout.d{d}"), "a B_d + b F(B_d) = 1 in Q[E]", e.to_string()),
            });
            let mut inv = vec![e.clone()];
            inv.extend(levi.iter().map(|g| GenWord::letter(k, *g).eval()));
            let bad = inv.iter().find_map(|g| {
                let c = g.commutator(&op);
                (!c.is_zero()).then(|| c.class().to_string())
            });
            out.push(match bad {
                None => Check::pass(format!("invariance.d{d}"), "B_d commutes with E and the Levi generators"),
                Some(r) => Check::fail(format!("invariance.d{d}"), "B_d commutes with E and the Levi generators", r),
            });
            out
        })
        .collect()
}

fn moment_orbit(k: usize) -> Vec<Check> {
    let mut out: Vec<Check> = basis(k)
        .into_par_iter()
        .map(|(label, xi)| {
            let r = check_descent(&xi);
            Check::expect(format!("descent.{label}"), "moment map descends mod Q(x)", r.is_zero(), || r)
        })
        .collect();
    out.extend(verify_orbit_relations(k));
    out.push(Check::expect("orbit.skew", "orbit matrix lies in so(n+2)", orbit_matrix_is_skew(k), || "not skew"));

    let n = 4 * k;
    let pairs = canonical_pairs(2 * k);
    let mut r = rng(8);
    let triples: Vec<(Poly, Poly, Poly)> =
        (0..20).map(|_| (random_poly(&mut r, n, 3, 3), random_poly(&mut r, n, 3, 3), random_poly(&mut r, n, 3, 3))).collect();
    let pb = |a: &Poly, b: &Poly| poisson(a, b, &pairs);
    out.push(every("poisson.antisymmetry", "{a,b} = -{b,a}", &triples, |(a, b, _)| {
        let s = &pb(a, b) + &pb(b, a);
        nonzero("residue", &s, s.is_zero())
    }));
    out.push(every("poisson.jacobi", "{a,{b,c}} + cyclic = 0", &triples, |(a, b, c)| {
        let s = &(&pb(a, &pb(b, c)) + &pb(b, &pb(c, a))) + &pb(c, &pb(a, b));
        nonzero("residue", &s, s.is_zero())
    }));
    out.push(every("poisson.leibniz", "{a, bc} = {a,b}c + b{a,c}", &triples, |(a, b, c)| {
        let s = &pb(a, &(b * c)) - &(&(&pb(a, b) * c) + &(b * &pb(a, c)));
        nonzero("residue", &s, s.is_zero())
    }));
    out
}

fn symbol(k: usize) -> Vec<Check> {
    let n = 2 * k;
    let b = basis(k);
    let reps: Vec<WeylOp> = b.par_iter().map(|(_, xi)| rho_tilde_rep(xi)).collect();
    let mut out: Vec<Check> = b
        .par_iter()
        .zip(reps.par_iter())
        .map(|((label, xi), rep)| {
            let r = &rep.principal_symbol() - &symbol_table(xi);
            Check::expect(format!("table.{label}"), "sigma(rho~(xi)) matches the invariant table", r.is_zero(), || r)
        })
        .collect();
    let qq = &q_star_q_bracket(k) - &phase_euler(n);
    out.push(Check::expect("q-star-q", "{Q*, Q} = sum_j q_j p_j", qq.is_zero(), || qq));

    let pairs: Vec<(usize, usize)> = (0..b.len()).flat_map(|i| (i + 1..b.len()).map(move |j| (i, j))).collect();
    let sp = symbol_pairs(n);
    out.push(every("poisson-commutator", "sigma([a,b]) = {sigma(a), sigma(b)} at order ord a + ord b - 1", &pairs, |&(i, j)| {
        let (a, c) = (&reps[i], &reps[j]);
        let (Some(oa), Some(oc)) = (a.order(), c.order()) else { return None };
        let top = (oa + oc).checked_sub(1)?;
        let bracket = poisson(&a.principal_symbol(), &c.principal_symbol(), &sp);
        let comm = a.commutator(c);
        let lhs = if comm.order() == Some(top) { comm.principal_symbol() } else { Poly::zero(2 * n) };
        let r = &lhs - &bracket;
        nonzero(format!("{} {}", b[i].0, b[j].0), &r, r.is_zero())
    }));
    out
}

fn kelvin_suite(k: usize) -> Vec<Check> {
    let n = 2 * k;
    let mut cases: Vec<QLaurent> =
        monomials_up_to(n, 6).into_iter().map(|m| QLaurent::from_poly(k, Poly::term(m, Rat::int(1)))).collect();
    cases.push(QLaurent::q_pow(k, -1));
    let mut out = Vec::new();
    out.push(every("involution", "K(K(f)) = f on monomials of degree <= 6 and 1/Q", &cases, |f| {
        (kelvin(&kelvin(f)) != *f).then(|| f.to_string())
    }));
    out.push(every("intertwining", "Delta K - (-Q)^(-2) K Delta = 0 on monomials of degree <= 6 and 1/Q", &cases, |f| {
        let r = kelvin_intertwine_check(f);
        nonzero(f, r.clone(), r.is_zero())
    }));
    let k1 = WeylOp::laplacian(k).apply_laurent(&kelvin(&QLaurent::one(k)));
    out.push(Check::expect("harmonic-one", "Delta K(1) = 0", k1.is_zero(), || k1));
    let sub_cases: Vec<QLaurent> = cases.iter().filter(|f| f.numerator().degree().unwrap_or(0) <= 3).cloned().collect();
    out.push(every("substitution", "term formula agrees with substituting v -> -v/Q", &sub_cases, |f| {
        (kelvin(f) != kelvin_by_substitution(f)).then(|| f.to_string())
    }));
    let harmonics: Vec<Poly> = (0..=3).flat_map(|d| harmonic_decompose(d, k).harmonic).collect();
    let lap = WeylOp::laplacian(k);
    out.push(every("harmonic-images", "Delta K(h) = 0 for harmonic h of degree <= 3", &harmonics, |h| {
        let r = lap.apply_laurent(&kelvin(&QLaurent::from_poly(k, h.clone())));
        nonzero(h, r.clone(), r.is_zero())
    }));
    out
}

/// Independent dimension count `binom(d+2k-1, 2k-1) - binom(d+2k-3, 2k-1)`.
fn expected_harmonic_dimension(d: u32, k: usize) -> i64 {
    let n = 2 * k as i64;
    let d = d as i64;
    let b = |a: i64| if a < n - 1 { 0 } else { (0..n - 1).fold(1i64, |acc, i| acc * (a - i) / (i + 1)) };
    b(d + n - 1) - b(d + n - 3)
}

fn harmonic(k: usize) -> Vec<Check> {
    (0..=5u32)
        .into_par_iter()
        .flat_map_iter(|d| {
            let h = harmonic_decompose(d, k);
            let want = expected_harmonic_dimension(d, k);
            let got = h.harmonic.len() as i64;
            let total = monomials_of_degree(2 * k, d).len();
            let rank = h.combined_rank(d, k);
            vec![
                Check::expect(
                    format!("dimension.d{d}"),
                    "dim ker(Delta on Sym^d) = binom(d+2k-1,2k-1) - binom(d+2k-3,2k-1)",
                    got == want && harmonic_dimension(d, k) == want,
                    || format!("nullspace {got}, formula {want}"),
                ),
                Check::expect(
                    format!("decomposition.d{d}"),
                    "Sym^d = H_d + Q Sym^(d-2)",
                    rank == total && got as usize + h.q_multiples.len() == total,
                    || format!("rank {rank} of {total}"),
                ),
            ]
        })
        .collect()
}

fn higher_symmetry(k: usize) -> Vec<Check> {
    let n = 2 * k;
    let mut out: Vec<Check> = basis(k)
        .into_par_iter()
        .map(|(label, xi)| {
            let p = phi(&xi);
            let id = format!("phi.{label}");
            let anchor = "Delta phi(xi) = delta Delta with delta = phi(xi) - 2(B(lambda,v) - alpha)";
            match is_higher_symmetry(&p) {
                None => Check::fail(id, anchor, "no certificate"),
                Some(cert) => {
                    let r = &(&cert.delta - &p) + &lambda_pairing(&xi).scale(&Rat::int(2));
                    Check::expect(id, anchor, cert.verify() && r.is_zero(), || r)
                }
            }
        })
        .collect();
    let euler = is_higher_symmetry(&euler_shift(k, k as i64 - 1));
    out.push(Check::expect(
        "euler",
        "Delta (E + k - 1) = (E + k + 1) Delta",
        euler.as_ref().is_some_and(|c| c.verify() && c.delta == euler_shift(k, k as i64 + 1)),
        || format!("{euler:?}"),
    ));
    let x1 = is_higher_symmetry(&WeylOp::var(n, 0));
    out.push(Check::expect("reject.x1", "x1 is not a higher symmetry", x1.is_none(), || format!("{x1:?}")));
    out.push(Check::expect(
        "reject.dyk",
        "d/dy_k is not in the left ideal generated by Delta",
        !in_laplacian_ideal(&WeylOp::partial(n, n - 1)),
        || "quotient returned",
    ));
    let trivial = &WeylOp::var(n, 0) * &WeylOp::laplacian(k);
    out.push(Check::expect("accept.x1-delta", "x1 Delta lies in the left ideal generated by Delta", in_laplacian_ideal(&trivial), || "rejected"));
    out
}

fn examples(k: usize) -> Vec<Check> {
    let mut out = dirac_mass_checks(k);
    out.extend(bessel_check(k, 12));
    let e = exp_harmonicity(k);
    out.push(Check::expect("exp.harmonic", "Delta exp(-B(x,v)) = 0 mod Q(x)", e.is_zero(), || e));
    out.extend(boundary_phase_check(k));
    let ne = non_example(k);
    out.push(Check::expect("non-example", "Delta(-Q) = -k, nonzero", ne == Rat::int(-(k as i64)), || ne));
    out.extend(n2_counterexample());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(run_suite("nope", 2), Err(UnknownSuite("nope".into())));
    }

    #[test]
    fn suites_pass_for_k2() {
        for s in ["algebra-core", "weyl", "lie-orthogonal", "fourier", "higher-symmetry"] {
            let r = run_suite(s, 2).unwrap();
            let bad: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
            assert!(bad.is_empty(), "{s}: {bad:?}");
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let mut a = rng(4);
        let mut b = rng(4);
        for _ in 0..20 {
            assert_eq!(random_word(&mut a, 3), random_word(&mut b, 3));
        }
    }
}
