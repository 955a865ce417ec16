//! The split quadratic form and its polarization on symbolic vectors.
//!
//! Vectors have `2k` coordinates ordered `x1..xk, y1..yk`; the Gram matrix of
//! `B` is the anti-diagonal permutation, so `B(a, b) = Σ_j a_j b_{bar(j)}`
//! with `bar(j) = 2k-1-j`, and `Q(a) = B(a, a)/2`.

use crate::poly::Poly;
use crate::rat::Rat;

/// Index paired with `j` by the form.
pub fn bar(n: usize, j: usize) -> usize {
    n - 1 - j
}

/// `Q` on `2k` variables.
pub fn q_form(k: usize) -> Poly {
    q_form_at(2 * k, 0, k)
}

/// `Q` evaluated on the block of `2k` variables starting at `offset`.
pub fn q_form_at(nvars: usize, offset: usize, k: usize) -> Poly {
    quad(&block(nvars, offset, 2 * k))
}

/// Coordinate functions of a block of variables.
pub fn block(nvars: usize, offset: usize, len: usize) -> Vec<Poly> {
    (offset..offset + len).map(|i| Poly::var(nvars, i)).collect()
}

/// A constant vector as polynomials in `nvars` variables.
pub fn constant_vector(nvars: usize, v: &[Rat]) -> Vec<Poly> {
    v.iter().map(|c| Poly::constant(nvars, c.clone())).collect()
}

pub fn pair(a: &[Poly], b: &[Poly]) -> Poly {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    let n = a.len();
    let nvars = a.first().map(|p| p.nvars()).unwrap_or(0);
    let mut acc = Poly::zero(nvars);
    for j in 0..n {
        if a[j].is_zero() || b[bar(n, j)].is_zero() {
            continue;
        }
        acc = &acc + &(&a[j] * &b[bar(n, j)]);
    }
    acc
}

pub fn quad(a: &[Poly]) -> Poly {
    let n = a.len();
    let nvars = a.first().map(|p| p.nvars()).unwrap_or(0);
    let mut acc = Poly::zero(nvars);
    for j in 0..n / 2 {
        acc = &acc + &(&a[j] * &a[bar(n, j)]);
    }
    acc
}

pub fn pair_rat(a: &[Rat], b: &[Rat]) -> Rat {
    let n = a.len();
    (0..n).map(|j| &a[j] * &b[bar(n, j)]).sum()
}

/// `J a`: reverses the coordinates.
pub fn flat<T: Clone>(a: &[T]) -> Vec<T> {
    a.iter().rev().cloned().collect()
}

pub fn scale_vec(c: &Poly, a: &[Poly]) -> Vec<Poly> {
    a.iter().map(|p| c * p).collect()
}

pub fn add_vec(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().zip(b).map(|(p, q)| p + q).collect()
}

pub fn sub_vec(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().zip(b).map(|(p, q)| p - q).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polarization() {
        let k = 3;
        let v = block(2 * k, 0, 2 * k);
        assert_eq!(pair(&v, &v), q_form(k).scale(&Rat::int(2)));
        assert_eq!(quad(&v), q_form(k));
    }

    #[test]
    fn form_is_invariant_under_flat() {
        let v = block(4, 0, 4);
        assert_eq!(quad(&flat(&v)), quad(&v));
    }
}
