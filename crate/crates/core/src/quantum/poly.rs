use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::scalar::RationalFn;

use super::matrix::MatrixRF;

/// A monoid of words: the empty word and concatenation.
pub trait Word: Clone + Ord {
    fn empty() -> Self;
    fn concat(&self, other: &Self) -> Self;
}

impl<G: Clone + Ord> Word for Vec<G> {
    fn empty() -> Self {
        Vec::new()
    }
    fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        w.extend(other.iter().cloned());
        w
    }
}

impl<A: Word, B: Word> Word for (A, B) {
    fn empty() -> Self {
        (A::empty(), B::empty())
    }
    fn concat(&self, other: &Self) -> Self {
        (self.0.concat(&other.0), self.1.concat(&other.1))
    }
}

/// Noncommutative polynomial: a finite linear combination of words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NcPoly<W: Word> {
    terms: BTreeMap<W, RationalFn>,
}

/// Polynomial in the free algebra on `G`.
pub type Expr<G> = NcPoly<Vec<G>>;

/// Polynomial in the tensor product of two free algebras.
pub type TensorExpr<A, B> = NcPoly<(Vec<A>, Vec<B>)>;

impl<W: Word> NcPoly<W> {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::word(W::empty())
    }

    pub fn word(w: W) -> Self {
        Self::monomial(w, RationalFn::one())
    }

    pub fn monomial(w: W, c: RationalFn) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn scalar(c: RationalFn) -> Self {
        Self::monomial(W::empty(), c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&W, &RationalFn)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: W, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.get(&w) {
            Some(old) => old + &c,
            None => c,
        };
        if v.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, v);
        }
    }

    pub fn scale(&self, c: &RationalFn) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `xy - q yx`.
    pub fn q_commutator(&self, other: &Self, q: &RationalFn) -> Self {
        &(self * other) - &(other * self).scale(q)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// Linear extension of a word map.
    pub fn eval<F>(&self, n: usize, mut image: F) -> Result<MatrixRF>
    where
        F: FnMut(&W) -> Result<MatrixRF>,
    {
        let mut acc = MatrixRF::zero(n);
        for (w, c) in &self.terms {
            acc = &acc + &image(w)?.scale(c);
        }
        Ok(acc)
    }
}

impl<G: Clone + Ord> NcPoly<Vec<G>> {
    pub fn gen(g: G) -> Self {
        Self::word(vec![g])
    }

    /// Applies an algebra map given on generators.
    pub fn substitute<H: Word, F>(&self, mut f: F) -> Result<NcPoly<H>>
    where
        F: FnMut(&G) -> Result<NcPoly<H>>,
    {
        let mut out = NcPoly::<H>::zero();
        for (w, c) in &self.terms {
            let mut prod = NcPoly::<H>::one();
            for g in w {
                prod = &prod * &f(g)?;
            }
            out = &out + &prod.scale(c);
        }
        Ok(out)
    }
}

impl<A: Clone + Ord, B: Clone + Ord> NcPoly<(Vec<A>, Vec<B>)> {
    /// `x (x) y` for single-leg polynomials.
    pub fn outer(x: &Expr<A>, y: &Expr<B>) -> Self {
        let mut out = Self::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out.add_term((a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }
}

impl<G: Clone + Ord> NcPoly<(Vec<G>, Vec<G>)> {
    /// Swaps the two tensor legs.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in self.terms() {
            out.add_term((b.clone(), a.clone()), c.clone());
        }
        out
    }
}

/// Image of a word under a multiplicative map, memoizing generator images.
pub fn word_image<G, F>(w: &[G], n: usize, memo: &mut BTreeMap<G, MatrixRF>, mut f: F) -> Result<MatrixRF>
where
    G: Clone + Ord,
    F: FnMut(&G) -> Result<MatrixRF>,
{
    let mut acc = MatrixRF::identity(n);
    for g in w {
        if !memo.contains_key(g) {
            let m = f(g)?;
            memo.insert(g.clone(), m);
        }
        acc = &acc * &memo[g];
    }
    Ok(acc)
}

impl<W: Word> Add for &NcPoly<W> {
    type Output = NcPoly<W>;
    fn add(self, rhs: &NcPoly<W>) -> NcPoly<W> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<W: Word> Sub for &NcPoly<W> {
    type Output = NcPoly<W>;
    fn sub(self, rhs: &NcPoly<W>) -> NcPoly<W> {
        self + &(-rhs)
    }
}

impl<W: Word> Neg for &NcPoly<W> {
    type Output = NcPoly<W>;
    fn neg(self) -> NcPoly<W> {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl<W: Word> Mul for &NcPoly<W> {
    type Output = NcPoly<W>;
    fn mul(self, rhs: &NcPoly<W>) -> NcPoly<W> {
        let mut out = NcPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }
}

impl<W: Word> Add for NcPoly<W> {
    type Output = NcPoly<W>;
    fn add(self, rhs: NcPoly<W>) -> NcPoly<W> {
        &self + &rhs
    }
}

impl<W: Word> Sub for NcPoly<W> {
    type Output = NcPoly<W>;
    fn sub(self, rhs: NcPoly<W>) -> NcPoly<W> {
        &self - &rhs
    }
}

impl<W: Word> Mul for NcPoly<W> {
    type Output = NcPoly<W>;
    fn mul(self, rhs: NcPoly<W>) -> NcPoly<W> {
        &self * &rhs
    }
}
