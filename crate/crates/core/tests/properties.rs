use proptest::prelude::*;
use quadric_core::forms::q_form;
use quadric_core::harmonic::kelvin;
use quadric_core::moment::{canonical_pairs, poisson};
use quadric_core::{EulerPoly, GenWord, Generator, Monomial, Poly, QLaurent, Rat, WeylOp};

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| Rat::new(a, b))
}

fn monomial(n: usize, max_deg: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..n, 0..=max_deg as usize).prop_map(move |vars| {
        let mut m = Monomial::one(n);
        for i in vars {
            m.set(i, m.get(i) + 1);
        }
        m
    })
}

fn poly(n: usize, max_deg: u16) -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(n, max_deg), rat()), 0..5).prop_map(move |t| Poly::from_terms(n, t))
}

fn weyl(n: usize) -> impl Strategy<Value = WeylOp> {
    prop::collection::vec((monomial(n, 2), monomial(n, 2), rat()), 0..4).prop_map(move |terms| {
        let mut op = WeylOp::zero(n);
        for (x, d, c) in terms {
            op.add_term(x, d, c);
        }
        op
    })
}

fn word(k: usize) -> impl Strategy<Value = GenWord> {
    let gens = Generator::all(k);
    let letter = prop::sample::select(gens);
    prop::collection::vec((prop::collection::vec(letter, 0..5), rat()), 1..4).prop_map(move |ws| {
        ws.into_iter().fold(GenWord::zero(k), |acc, (l, c)| acc.add(&GenWord::word(k, l, c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rat_field_laws(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        let shown: Rat = a.to_string().parse().unwrap();
        prop_assert_eq!(shown, a);
    }

    #[test]
    fn poly_ring_laws(a in poly(4, 4), b in poly(4, 4), c in poly(4, 4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn poly_ring_laws_k3(a in poly(6, 3), b in poly(6, 3), c in poly(6, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn reduction_is_idempotent_and_kills_q_multiples(p in poly(6, 6)) {
        let q = q_form(3);
        let r = p.reduce(&q);
        prop_assert_eq!(r.reduce(&q), r.clone());
        prop_assert!((&q * &p).reduce(&q).is_zero());
        let (quot, rem) = p.normal_form_mod(&q).unwrap();
        prop_assert_eq!(&(&quot * &q) + &rem, p);
    }

    #[test]
    fn weyl_associativity_and_action(a in weyl(4), b in weyl(4), c in weyl(4), f in poly(4, 4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn weyl_normal_forms_round_trip(a in weyl(6)) {
        prop_assert_eq!(WeylOp::from_dleft(6, &a.dleft_normal_form()), a.clone());
        prop_assert_eq!(WeylOp::from_xleft_coeffs(6, &a.xleft_coeffs()), a);
    }

    #[test]
    fn weyl_divisions_multiply_back(a in weyl(4)) {
        let q = q_form(2);
        let lap = WeylOp::laplacian(2);
        prop_assert_eq!((&a * &WeylOp::mult(&q)).divide_right_by_mult(&q).unwrap(), a.clone());
        prop_assert_eq!((&a * &lap).divide_right_by_constcoef(&lap).unwrap(), a);
    }

    #[test]
    fn poisson_bracket_laws(a in poly(8, 3), b in poly(8, 3), c in poly(8, 2)) {
        let pairs = canonical_pairs(4);
        let pb = |x: &Poly, y: &Poly| poisson(x, y, &pairs);
        prop_assert!((&pb(&a, &b) + &pb(&b, &a)).is_zero());
        let jac = &(&pb(&a, &pb(&b, &c)) + &pb(&b, &pb(&c, &a))) + &pb(&c, &pb(&a, &b));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn fourier_is_an_involution_negating_degree(w in word(3)) {
        prop_assert_eq!(w.fourier().fourier(), w.clone());
        if let Some(d) = w.degree() {
            prop_assert_eq!(w.fourier().degree(), Some(-d));
        }
    }

    #[test]
    fn qlaurent_normalization_is_unique(p in poly(4, 3), m in 0u32..3, extra in 0u32..3) {
        let q = q_form(2);
        let a = QLaurent::new(2, p.clone(), m);
        let b = QLaurent::new(2, &p * &q.pow(extra), m + extra);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn kelvin_is_an_involution(p in poly(4, 4), m in 0u32..3) {
        let f = QLaurent::new(2, p, m);
        prop_assert_eq!(kelvin(&kelvin(&f)), f);
    }

    #[test]
    fn euler_bezout(r1 in prop::collection::vec(-4i64..4, 1..4), r2 in prop::collection::vec(5i64..9, 1..4)) {
        let prod = |roots: &[i64]| roots.iter().fold(EulerPoly::one(), |acc, r| acc.mul(&EulerPoly::linear(Rat::int(-r))));
        let (a, b) = (prod(&r1), prod(&r2));
        let (g, s, t) = a.ext_gcd(&b);
        prop_assert!(g.is_one());
        prop_assert!(s.mul(&a).add(&t.mul(&b)).is_one());
    }
}
