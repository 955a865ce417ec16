//! Phase-space side: the Poisson bracket, the moment map of the conformal
//! action and its descent to the cone, and the relations cutting out the
//! minimal nilpotent orbit through the invariant matrix `M(v, w)`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::forms::{bar, block, flat, pair, q_form_at, quad, scale_vec, sub_vec};
use crate::lie::LieElt;
use crate::linalg::RatMatrix;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::report::Check;

/// Poisson bracket `Σ ∂a/∂p ∂b/∂q − ∂a/∂q ∂b/∂p` over the conjugate pairs
/// `(q, p)`.
pub fn poisson(a: &Poly, b: &Poly, pairs: &[(usize, usize)]) -> Poly {
    let mut out = Poly::zero(a.nvars());
    for &(q, p) in pairs {
        let t1 = &a.derivative(p) * &b.derivative(q);
        let t2 = &a.derivative(q) * &b.derivative(p);
        out = &(&out + &t1) - &t2;
    }
    out
}

/// Pairs `(j, n + j)` on `2n` variables: positions first, momenta second.
pub fn canonical_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|j| (j, n + j)).collect()
}

/// Pairs matching the principal-symbol convention: `∂_j ↦ v_{bar(j)}`, so
/// the momentum of base coordinate `j` sits at `n + bar(j)`.
pub fn symbol_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|j| (j, n + bar(n, j))).collect()
}

/// `Σ_j q_j p_j` on `2n` variables.
pub fn phase_euler(n: usize) -> Poly {
    let mut out = Poly::zero(2 * n);
    for j in 0..n {
        out = &out + &(&Poly::var(2 * n, j) * &Poly::var(2 * n, n + j));
    }
    out
}

fn rat_vec(nvars: usize, v: &[Rat]) -> Vec<Poly> {
    v.iter().map(|c| Poly::constant(nvars, c.clone())).collect()
}

fn mat_vec(m: &RatMatrix, v: &[Poly]) -> Vec<Poly> {
    let nvars = v[0].nvars();
    (0..m.rows())
        .map(|a| {
            let mut acc = Poly::zero(nvars);
            for (b, vb) in v.iter().enumerate() {
                if !m[(a, b)].is_zero() {
                    acc = &acc + &vb.scale(&m[(a, b)]);
                }
            }
            acc
        })
        .collect()
}

/// `B(x,µ) + B(x,Xv) − αB(x,v) + B(λ,v)B(x,v) − Q(v)B(x,λ)` with base `v`
/// and fiber `x` taken from the given variable blocks.
pub fn moment_in(xi: &LieElt, nvars: usize, v_off: usize, x_off: usize) -> Poly {
    let n = 2 * xi.k;
    let v = block(nvars, v_off, n);
    let x = block(nvars, x_off, n);
    let mu = rat_vec(nvars, &xi.mu);
    let lambda = rat_vec(nvars, &xi.lambda);
    let bxv = pair(&x, &v);
    let mut out = pair(&x, &mu);
    out = &out + &pair(&x, &mat_vec(&xi.x, &v));
    out = &out - &bxv.scale(&xi.alpha);
    out = &out + &(&pair(&lambda, &v) * &bxv);
    out = &out - &(&quad(&v) * &pair(&x, &lambda));
    out
}

/// The moment map on `4k` variables, base `v` then fiber `x`.
pub fn moment(xi: &LieElt) -> Poly {
    let n = 2 * xi.k;
    moment_in(xi, 2 * n, 0, n)
}

/// `Φ(v + t x, x) − Φ(v, x)` reduced modulo `Q(x)`, on `4k + 1` variables
/// with `t` last.
pub fn check_descent(xi: &LieElt) -> Poly {
    let n = 2 * xi.k;
    let nv = 2 * n + 1;
    let phi = moment_in(xi, nv, 0, n);
    let t = Poly::var(nv, 2 * n);
    let mut subst: Vec<Poly> = (0..nv).map(|i| Poly::var(nv, i)).collect();
    for j in 0..n {
        subst[j] = &subst[j] + &(&t * &Poly::var(nv, n + j));
    }
    let shifted = phi.substitute(&subst);
    (&shifted - &phi).reduce(&q_form_at(nv, n, xi.k))
}

/// The invariant function attached to each block of `ξ` on `T*C`, in the
/// symbol ring (base `w` first, fiber `v` last): `−a·B(v,w)`, `B(µ,w)`,
/// `½tr((v∧w)Xᵀ)` and `B(v,w)B(λ,v) − Q(v)B(λ,w)`. Vector parameters enter
/// through `J`, matching the coordinate convention of the realization.
pub fn symbol_table(xi: &LieElt) -> Poly {
    let n = 2 * xi.k;
    let nv = 2 * n;
    let w = block(nv, 0, n);
    let v = block(nv, n, n);
    let mu = flat(&rat_vec(nv, &xi.mu));
    let lambda = flat(&rat_vec(nv, &xi.lambda));
    let bvw = pair(&v, &w);
    let mut out = bvw.scale(&-&xi.alpha);
    out = &out + &pair(&mu, &w);
    let wedge = wedge_matrix(&v, &w);
    let mut tr = Poly::zero(nv);
    for a in 0..n {
        for b in 0..n {
            if !xi.x[(a, b)].is_zero() {
                tr = &tr + &wedge[a][b].scale(&xi.x[(a, b)]);
            }
        }
    }
    out = &out + &tr.scale(&Rat::new(1, 2));
    out = &out + &(&bvw * &pair(&lambda, &v));
    out = &out - &(&quad(&v) * &pair(&lambda, &w));
    out
}

/// `(v∧w)_{ab} = w_a v_{bar b} − v_a w_{bar b}`, the matrix of
/// `z ↦ B(v,z)w − B(w,z)v`.
pub fn wedge_matrix(v: &[Poly], w: &[Poly]) -> Vec<Vec<Poly>> {
    let n = v.len();
    (0..n)
        .map(|a| (0..n).map(|b| &(&w[a] * &v[bar(n, b)]) - &(&v[a] * &w[bar(n, b)])).collect())
        .collect()
}

/// Square matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    pub entries: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let s = self.size();
        let nv = self.entries[0][0].nvars();
        let entries = (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| {
                        let mut acc = Poly::zero(nv);
                        for l in 0..s {
                            let (a, b) = (&self.entries[i][l], &other.entries[l][j]);
                            if !a.is_zero() && !b.is_zero() {
                                acc = &acc + &(a * b);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { entries }
    }

    /// All `3×3` minors, rows and columns in lexicographic order.
    pub fn minors3(&self) -> Vec<Poly> {
        let s = self.size();
        let mut triples = Vec::new();
        for a in 0..s {
            for b in a + 1..s {
                for c in b + 1..s {
                    triples.push([a, b, c]);
                }
            }
        }
        let pairs: Vec<([usize; 3], [usize; 3])> =
            triples.iter().flat_map(|r| triples.iter().map(move |c| (*r, *c))).collect();
        pairs.par_iter().map(|(r, c)| self.det3(r, c)).collect()
    }

    fn det3(&self, r: &[usize; 3], c: &[usize; 3]) -> Poly {
        let e = |i: usize, j: usize| &self.entries[r[i]][c[j]];
        let nv = self.entries[0][0].nvars();
        let mut acc = Poly::zero(nv);
        for (p, sign) in [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)] {
            let (a, b, d) = (e(0, p[0]), e(1, p[1]), e(2, p[2]));
            if a.is_zero() || b.is_zero() || d.is_zero() {
                continue;
            }
            let t = &(a * b) * d;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }
}

/// Blocks of `M(v, w)` on `4k` variables (`v` first, `w` last).
pub struct OrbitBlocks {
    pub k: usize,
    pub v: Vec<Poly>,
    pub w: Vec<Poly>,
    pub alpha: Poly,
    pub mu: Vec<Poly>,
    pub x: Vec<Vec<Poly>>,
}

impl OrbitBlocks {
    pub fn new(k: usize) -> Self {
        let n = 2 * k;
        let v = block(2 * n, 0, n);
        let w = block(2 * n, n, n);
        let alpha = pair(&v, &w);
        let mu = sub_vec(&scale_vec(&alpha, &v), &scale_vec(&quad(&v), &w));
        let x = wedge_matrix(&v, &w);
        OrbitBlocks { k, v, w, alpha, mu, x }
    }

    pub fn nvars(&self) -> usize {
        4 * self.k
    }

    /// `Q(w)`, the modulus for every relation.
    pub fn modulus(&self) -> Poly {
        q_form_at(4 * self.k, 2 * self.k, self.k)
    }

    /// `[[α, −w♭, 0], [µ, v∧w, w], [0, −µ♭, −α]]`.
    pub fn matrix(&self) -> PolyMatrix {
        let n = 2 * self.k;
        let nv = self.nvars();
        let s = n + 2;
        let mut m = vec![vec![Poly::zero(nv); s]; s];
        m[0][0] = self.alpha.clone();
        m[n + 1][n + 1] = -&self.alpha;
        for a in 0..n {
            m[0][1 + a] = -&self.w[bar(n, a)];
            m[1 + a][0] = self.mu[a].clone();
            m[1 + a][n + 1] = self.w[a].clone();
            m[n + 1][1 + a] = -&self.mu[bar(n, a)];
            for b in 0..n {
                m[1 + a][1 + b] = self.x[a][b].clone();
            }
        }
        PolyMatrix { entries: m }
    }
}

pub fn orbit_matrix(k: usize) -> PolyMatrix {
    OrbitBlocks::new(k).matrix()
}

fn outer_flat(a: &[Poly], b: &[Poly]) -> Vec<Vec<Poly>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| &a[i] * &b[bar(n, j)]).collect()).collect()
}

fn mat_sq(x: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    PolyMatrix { entries: x.to_vec() }.mul(&PolyMatrix { entries: x.to_vec() }).entries
}

fn mat_apply(x: &[Vec<Poly>], v: &[Poly]) -> Vec<Poly> {
    x.iter()
        .map(|row| row.iter().zip(v).fold(Poly::zero(v[0].nvars()), |acc, (a, b)| &acc + &(a * b)))
        .collect()
}

/// Every relation of the minimal orbit closure, each reduced modulo `Q(w)`.
pub fn verify_orbit_relations(k: usize) -> Vec<Check> {
    let ob = OrbitBlocks::new(k);
    let n = 2 * k;
    let q = ob.modulus();
    let red = |p: &Poly| p.reduce(&q);
    let reduce_all = |ps: Vec<Poly>| -> Vec<Poly> { ps.par_iter().map(red).collect() };
    let flatten = |m: Vec<Vec<Poly>>| -> Vec<Poly> { m.into_iter().flatten().collect() };
    let mut out = Vec::new();

    let qmu = red(&quad(&ob.mu));
    out.push(Check::all_zero("orbit.q-mu", "Q(µ) = 0", [&qmu]));

    let bmw = red(&(&pair(&ob.mu, &ob.w) - &ob.alpha.pow(2)));
    out.push(Check::all_zero("orbit.b-mu-w", "B(µ,w) = α²", [&bmw]));

    let xw = reduce_all(sub_vec(&mat_apply(&ob.x, &ob.w), &scale_vec(&ob.alpha, &ob.w)));
    out.push(Check::all_zero("orbit.x-w", "Xw = αw", &xw));

    let xmu = reduce_all(
        mat_apply(&ob.x, &ob.mu).iter().zip(&ob.mu).map(|(a, b)| a + &(&ob.alpha * b)).collect(),
    );
    out.push(Check::all_zero("orbit.x-mu", "Xµ = −αµ", &xmu));

    let wm = outer_flat(&ob.w, &ob.mu);
    let mw = outer_flat(&ob.mu, &ob.w);
    let x2 = mat_sq(&ob.x);
    let mut sq = Vec::new();
    let mut outer = Vec::new();
    for a in 0..n {
        for b in 0..n {
            sq.push(&x2[a][b] - &(&wm[a][b] + &mw[a][b]));
            outer.push(&(&ob.alpha * &ob.x[a][b]) - &(&wm[a][b] - &mw[a][b]));
        }
    }
    out.push(Check::all_zero("orbit.x-squared", "X² = wµ♭ + µw♭", &reduce_all(sq)));
    out.push(Check::all_zero("orbit.alpha-x", "αX = wµ♭ − µw♭", &reduce_all(outer)));

    let p = |i: usize, j: usize| &ob.x[i][bar(n, j)];
    let mut pl = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                for m in l + 1..n {
                    let t = &(&(p(i, j) * p(l, m)) - &(p(i, l) * p(j, m))) + &(p(i, m) * p(j, l));
                    pl.push(t);
                }
            }
        }
    }
    out.push(Check::all_zero("orbit.plucker", "X_{ij̄}X_{lm̄} − X_{il̄}X_{jm̄} + X_{im̄}X_{jl̄} = 0", &reduce_all(pl)));

    let m = ob.matrix();
    let m2 = flatten(m.mul(&m).entries);
    out.push(Check::all_zero("orbit.m-squared", "M² = 0", &reduce_all(m2)));
    out.push(Check::all_zero("orbit.minors", "all 3×3 minors of M vanish", &reduce_all(m.minors3())));

    let nil = nilpotent_corner(k);
    out.push(Check::all_zero("orbit.nilpotent-corner", "(n_w)² corner = −2Q(w)", [&red(&nil)]));
    out
}

/// Corner of the square of the nilpotent matrix attached to `w`, plus
/// `2Q(w)`; zero as a polynomial.
fn nilpotent_corner(k: usize) -> Poly {
    let n = 2 * k;
    let nv = 4 * k;
    let w = block(nv, n, n);
    let s = n + 2;
    let mut m = vec![vec![Poly::zero(nv); s]; s];
    for a in 0..n {
        m[0][1 + a] = -&w[bar(n, a)];
        m[1 + a][n + 1] = w[a].clone();
    }
    let pm = PolyMatrix { entries: m };
    let corner = pm.mul(&pm).entries[0][n + 1].clone();
    &corner + &quad(&w).scale(&Rat::int(2))
}

/// The `M²`-vanishing check at a numeric point of the cone.
pub fn orbit_square_at(k: usize, v: &[Rat], w: &[Rat]) -> Vec<Rat> {
    let m = orbit_matrix(k);
    let point: Vec<Rat> = v.iter().chain(w).cloned().collect();
    let s = m.size();
    let num: Vec<Vec<Rat>> = (0..s).map(|i| (0..s).map(|j| m.get(i, j).eval(&point)).collect()).collect();
    let nm = RatMatrix::from_rows(num);
    let sq = &nm * &nm;
    (0..s).flat_map(|i| (0..s).map(move |j| (i, j))).map(|(i, j)| sq[(i, j)].clone()).collect()
}

/// Whether `M(v,w)` lies in the orthogonal algebra of `Q⁺`.
pub fn orbit_matrix_is_skew(k: usize) -> bool {
    let m = orbit_matrix(k);
    let s = m.size();
    let j = RatMatrix::anti_diagonal(s);
    for a in 0..s {
        for b in 0..s {
            let mut acc = Poly::zero(m.get(0, 0).nvars());
            for c in 0..s {
                if !j[(c, b)].is_zero() {
                    acc = &acc + &m.get(c, a).scale(&j[(c, b)]);
                }
                if !j[(a, c)].is_zero() {
                    acc = &acc + &m.get(c, b).scale(&j[(a, c)]);
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// `{Q*, Q}` on canonical phase space with `Q*` in the momenta.
pub fn q_star_q_bracket(k: usize) -> Poly {
    let n = 2 * k;
    let qs = q_form_at(2 * n, n, k);
    let q = q_form_at(2 * n, 0, k);
    poisson(&qs, &q, &canonical_pairs(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::cone::rho_tilde_rep;
    use crate::lie::basis;

    #[test]
    fn moment_examples() {
        let k = 2;
        let n = 2 * k;
        let x = block(2 * n, n, n);
        let v = block(2 * n, 0, n);
        let e1 = LieElt::unit(k, 0);
        assert_eq!(moment(&LieElt::mu(k, e1.clone())), pair(&x, &rat_vec(2 * n, &e1)));
        assert_eq!(moment(&LieElt::alpha(k, Rat::one())), -&pair(&x, &v));
        let l = rat_vec(2 * n, &e1);
        let expect = &(&pair(&l, &v) * &pair(&x, &v)) - &(&quad(&v) * &pair(&x, &l));
        assert_eq!(moment(&LieElt::lambda(k, e1)), expect);
    }

    #[test]
    fn descent_for_all_basis_elements() {
        for k in [2, 3] {
            for (label, xi) in basis(k) {
                assert!(check_descent(&xi).is_zero(), "{label}");
            }
        }
    }

    #[test]
    fn mu_descent_is_exact_before_reduction() {
        let k = 2;
        let n = 4;
        let nv = 2 * n + 1;
        let xi = LieElt::mu(k, LieElt::unit(k, 1));
        let phi = moment_in(&xi, nv, 0, n);
        let t = Poly::var(nv, 2 * n);
        let subst: Vec<Poly> =
            (0..nv).map(|i| if i < n { &Poly::var(nv, i) + &(&t * &Poly::var(nv, n + i)) } else { Poly::var(nv, i) }).collect();
        assert_eq!(phi.substitute(&subst), phi);
    }

    #[test]
    fn symbol_table_matches_principal_symbols() {
        for k in [2, 3] {
            for (label, xi) in basis(k) {
                assert_eq!(rho_tilde_rep(&xi).principal_symbol(), symbol_table(&xi), "{label}");
            }
        }
    }

    #[test]
    fn q_star_q_is_phase_euler() {
        for k in [2, 3] {
            assert_eq!(q_star_q_bracket(k), phase_euler(2 * k));
        }
    }

    #[test]
    fn orbit_matrix_shape() {
        let k = 2;
        let m = orbit_matrix(k);
        let n = 2 * k;
        assert!(m.get(0, n + 1).is_zero());
        for a in 0..n {
            assert_eq!(m.get(1 + a, n + 1), &Poly::var(2 * n, n + a));
        }
        assert_eq!(m.get(n + 1, n + 1), &-&pair(&block(2 * n, 0, n), &block(2 * n, n, n)));
        assert!(orbit_matrix_is_skew(k));
    }

    #[test]
    fn numeric_square_vanishes_on_the_cone() {
        let w: Vec<Rat> = [1, 0, 0, 0].into_iter().map(Rat::int).collect();
        let v: Vec<Rat> = [2, -1, 3, 5].into_iter().map(Rat::int).collect();
        assert!(orbit_square_at(2, &v, &w).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn relations_k2() {
        for c in verify_orbit_relations(2) {
            assert!(c.passed, "{} {}", c.id, c.residue);
        }
    }
}
