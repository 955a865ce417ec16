//! Words in the standard generators of the cone operator algebra and the
//! quadric Fourier transform acting on them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::{rho_tilde_rep, ConeOp};
use crate::error::{Error, Result};
use crate::lie::{levi_matrix, BasisLabel, LieElt};
use crate::rat::Rat;
use crate::weyl::WeylOp;

/// A tagged generator; all indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Generator {
    /// Coordinate function `x_i`.
    X(usize),
    /// Coordinate function `y_i`.
    Y(usize),
    /// `𝔛_i`, the Fourier image of `x_i`.
    XX(usize),
    /// `𝔜_i`, the Fourier image of `y_i`.
    YY(usize),
    /// `E + k − 1`.
    ETilde,
    D(usize, usize),
    B(usize, usize),
    C(usize, usize),
}

impl Generator {
    pub fn all(k: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for i in 1..=k {
            out.extend([Generator::X(i), Generator::Y(i), Generator::XX(i), Generator::YY(i)]);
        }
        out.push(Generator::ETilde);
        for i in 1..=k {
            for j in 1..=k {
                out.push(Generator::D(i, j));
                if i < j {
                    out.push(Generator::B(i, j));
                    out.push(Generator::C(i, j));
                }
            }
        }
        out
    }

    pub fn is_valid(&self, k: usize) -> bool {
        let ok = |i: usize| (1..=k).contains(&i);
        match *self {
            Generator::X(i) | Generator::Y(i) | Generator::XX(i) | Generator::YY(i) => ok(i),
            Generator::ETilde => true,
            Generator::D(i, j) => ok(i) && ok(j),
            Generator::B(i, j) | Generator::C(i, j) => ok(i) && ok(j) && i < j,
        }
    }

    /// Lie algebra element realizing this generator.
    pub fn preimage(&self, k: usize) -> LieElt {
        assert!(self.is_valid(k), "generator {self:?} out of range for k={k}");
        match *self {
            Generator::X(i) => LieElt::mu(k, LieElt::unit(k, i - 1)),
            Generator::Y(i) => LieElt::mu(k, LieElt::unit(k, k + i - 1)),
            Generator::XX(i) => LieElt::lambda(k, LieElt::unit(k, i - 1)),
            Generator::YY(i) => LieElt::lambda(k, LieElt::unit(k, k + i - 1)),
            Generator::ETilde => LieElt::alpha(k, Rat::int(-1)),
            Generator::D(i, j) => LieElt::levi(k, levi_matrix(k, BasisLabel::D(i, j))),
            Generator::B(i, j) => LieElt::levi(k, levi_matrix(k, BasisLabel::B(i, j))),
            Generator::C(i, j) => LieElt::levi(k, levi_matrix(k, BasisLabel::C(i, j))),
        }
    }

    pub fn rep(&self, k: usize) -> WeylOp {
        rho_tilde_rep(&self.preimage(k))
    }

    /// Euler degree.
    pub fn degree(&self) -> i64 {
        match self {
            Generator::X(_) | Generator::Y(_) => 1,
            Generator::XX(_) | Generator::YY(_) => -1,
            _ => 0,
        }
    }

    /// The generator proportional to `xi`, if any.
    pub fn from_lie(k: usize, xi: &LieElt) -> Option<(Rat, Generator)> {
        for g in Generator::all(k) {
            let p = g.preimage(k);
            let (pm, xm) = (p.to_matrix(), xi.to_matrix());
            let mut ratio: Option<Rat> = None;
            let mut ok = true;
            for i in 0..pm.rows() {
                for j in 0..pm.cols() {
                    let (a, b) = (&pm[(i, j)], &xm[(i, j)]);
                    if a.is_zero() {
                        if !b.is_zero() {
                            ok = false;
                        }
                        continue;
                    }
                    let r = b / a;
                    match &ratio {
                        None => ratio = Some(r),
                        Some(r0) if *r0 != r => ok = false,
                        _ => {}
                    }
                }
            }
            if let (true, Some(r)) = (ok, ratio) {
                if !r.is_zero() {
                    return Some((r, g));
                }
            }
        }
        None
    }

    /// Fourier image `ρ(Ad_{w0} ξ)` as a scalar multiple of a generator.
    pub fn fourier(&self, k: usize) -> (Rat, Generator) {
        Generator::from_lie(k, &self.preimage(k).ad_w0()).expect("generators are closed under the Weyl involution")
    }

    /// Token in the expression grammar.
    pub fn token(&self, k: usize) -> String {
        match self {
            Generator::X(i) => format!("x{i}"),
            Generator::Y(i) => format!("y{i}"),
            Generator::XX(i) => format!("XX{i}"),
            Generator::YY(i) => format!("YY{i}"),
            Generator::ETilde => format!("(E + {})", k - 1),
            Generator::D(i, j) => format!("Dop{i}{j}"),
            Generator::B(i, j) => format!("Bop{i}{j}"),
            Generator::C(i, j) => format!("Cop{i}{j}"),
        }
    }
}

/// Formal linear combination of generator words.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GenWord {
    k: usize,
    terms: BTreeMap<Vec<Generator>, Rat>,
}

impl GenWord {
    pub fn zero(k: usize) -> Self {
        GenWord { k, terms: BTreeMap::new() }
    }

    pub fn scalar(k: usize, c: Rat) -> Self {
        GenWord::word(k, Vec::new(), c)
    }

    pub fn letter(k: usize, g: Generator) -> Self {
        GenWord::word(k, vec![g], Rat::one())
    }

    pub fn word(k: usize, letters: Vec<Generator>, c: Rat) -> Self {
        assert!(letters.iter().all(|g| g.is_valid(k)), "generator index out of range");
        let mut w = GenWord::zero(k);
        crate::weyl::add_into(&mut w.terms, letters, c);
        w
    }

    pub fn try_word(k: usize, letters: Vec<Generator>, c: Rat) -> Result<Self> {
        if let Some(g) = letters.iter().find(|g| !g.is_valid(k)) {
            return Err(Error::InvalidInput(format!("generator {g:?} out of range for k={k}")));
        }
        Ok(GenWord::word(k, letters, c))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Generator>, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GenWord) -> GenWord {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            crate::weyl::add_into(&mut out.terms, w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GenWord) -> GenWord {
        self.add(&other.scale(&Rat::int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> GenWord {
        let mut out = GenWord::zero(self.k);
        for (w, a) in &self.terms {
            crate::weyl::add_into(&mut out.terms, w.clone(), a * c);
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &GenWord) -> GenWord {
        let mut out = GenWord::zero(self.k);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                crate::weyl::add_into(&mut out.terms, w, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> GenWord {
        let mut acc = GenWord::scalar(self.k, Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The quadric Fourier transform, letter by letter.
    pub fn fourier(&self) -> GenWord {
        let k = self.k;
        let mut images: HashMap<Generator, (Rat, Generator)> = HashMap::new();
        let mut out = GenWord::zero(k);
        for (w, c) in &self.terms {
            let mut coef = c.clone();
            let mut letters = Vec::with_capacity(w.len());
            for g in w {
                let (s, h) = images.entry(*g).or_insert_with(|| g.fourier(k)).clone();
                coef *= &s;
                letters.push(h);
            }
            crate::weyl::add_into(&mut out.terms, letters, coef);
        }
        out
    }

    /// Euler degree when all words share one; `None` otherwise (or for zero).
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|w| w.iter().map(|g| g.degree()).sum::<i64>());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Ambient representative of the evaluated operator.
    pub fn eval_rep(&self) -> WeylOp {
        let k = self.k;
        let n = 2 * k;
        let mut reps: HashMap<Generator, WeylOp> = HashMap::new();
        let mut acc = WeylOp::zero(n);
        for (w, c) in &self.terms {
            let mut op = WeylOp::constant(n, c.clone());
            for g in w {
                let r = reps.entry(*g).or_insert_with(|| g.rep(k));
                op = &op * &*r;
            }
            acc = &acc + &op;
        }
        acc
    }

    pub fn eval(&self) -> ConeOp {
        ConeOp::new(self.eval_rep())
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let letters: Vec<String> = w.iter().map(|g| g.token(self.k)).collect();
            match (letters.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", letters.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", letters.join("*"))?,
            }
        }
        Ok(())
    }
}
