use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lie::{bracket_basis, render_terms, AlgebraId, BasisVector, Component, LieElement};
use crate::scalar::{q, RationalFn};
use crate::twist::TwistId;

/// Element of `g (x) g` in the basis of `g`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    algebra: AlgebraId,
    terms: BTreeMap<(BasisVector, BasisVector), RationalFn>,
}

impl TensorElement {
    pub fn zero(algebra: AlgebraId) -> Self {
        TensorElement { algebra, terms: BTreeMap::new() }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisVector, BasisVector), &RationalFn)> {
        self.terms.iter()
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

    pub fn coeff(&self, a: &BasisVector, b: &BasisVector) -> RationalFn {
        self.terms.get(&(*a, *b)).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, a: BasisVector, b: BasisVector, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let v = match self.terms.get(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if v.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    /// `x (x) y`.
    pub fn outer(x: &LieElement, y: &LieElement) -> Result<Self> {
        if x.algebra() != y.algebra() {
            return Err(Error::AlgebraMismatch { expected: x.algebra().name().into(), found: y.algebra().name().into() });
        }
        let mut t = TensorElement::zero(x.algebra());
        t.add_outer(x, y, &RationalFn::one());
        Ok(t)
    }

    pub(crate) fn add_outer(&mut self, x: &LieElement, y: &LieElement, c: &RationalFn) {
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                self.add_term(*a, *b, &(ca * cb) * c);
            }
        }
    }

    /// `x (x) y - y (x) x`.
    pub fn wedge(x: &LieElement, y: &LieElement) -> Result<Self> {
        Ok(&Self::outer(x, y)? - &Self::outer(y, x)?)
    }

    pub fn flip(&self) -> Self {
        TensorElement {
            algebra: self.algebra,
            terms: self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFn) -> Self {
        let mut out = TensorElement::zero(self.algebra);
        for ((a, b), v) in &self.terms {
            out.add_term(*a, *b, v * c);
        }
        out
    }

    pub fn is_skew(&self) -> bool {
        self.flip() == -self
    }

    /// Adjoint action `z.(u (x) v) = [z,u] (x) v + u (x) [z,v]`.
    pub fn act(&self, z: &LieElement) -> Result<Self> {
        if z.algebra() != self.algebra {
            return Err(Error::AlgebraMismatch { expected: self.algebra.name().into(), found: z.algebra().name().into() });
        }
        let mut out = TensorElement::zero(self.algebra);
        for ((a, b), c) in &self.terms {
            for (zb, zc) in z.terms() {
                let zc = zc * c;
                if let Some((k, v)) = bracket_basis(zb, a) {
                    out.add_term(v, *b, zc.scale(&q(k)));
                }
                if let Some((k, v)) = bracket_basis(zb, b) {
                    out.add_term(*a, v, zc.scale(&q(k)));
                }
            }
        }
        Ok(out)
    }

    /// Applies the twist to the chosen legs.
    pub fn twist_legs(&self, t: TwistId, left: bool, right: bool) -> Self {
        let mut out = TensorElement::zero(self.algebra);
        for ((a, b), c) in &self.terms {
            let (sa, ia) = if left { t.apply_basis(a) } else { (1, *a) };
            let (sb, ib) = if right { t.apply_basis(b) } else { (1, *b) };
            out.add_term(ia, ib, c.scale(&q(sa * sb)));
        }
        out
    }

    /// Rows `sum_b T(a, b) b` for each first-leg basis vector `a`.
    pub fn second_leg_slices(&self) -> Vec<LieElement> {
        self.slices(|(a, b)| (*a, *b))
    }

    /// Columns `sum_a T(a, b) a` for each second-leg basis vector `b`.
    pub fn first_leg_slices(&self) -> Vec<LieElement> {
        self.slices(|(a, b)| (*b, *a))
    }

    fn slices<F: Fn(&(BasisVector, BasisVector)) -> (BasisVector, BasisVector)>(&self, key: F) -> Vec<LieElement> {
        let mut rows: BTreeMap<BasisVector, Vec<(BasisVector, RationalFn)>> = BTreeMap::new();
        for (k, c) in &self.terms {
            let (outer, inner) = key(k);
            rows.entry(outer).or_default().push((inner, c.clone()));
        }
        rows.into_values()
            .map(|t| LieElement::from_terms(self.algebra, t).expect("legal legs"))
            .collect()
    }

    /// Places a loop-algebra tensor into `target` by embedding both legs.
    pub fn embed(&self, target: AlgebraId) -> Result<Self> {
        let mut out = TensorElement::zero(target);
        for ((a, b), c) in &self.terms {
            let ea = LieElement::basis(self.algebra, *a)?.embed(target)?;
            let eb = LieElement::basis(self.algebra, *b)?.embed(target)?;
            out.add_outer(&ea, &eb, c);
        }
        Ok(out)
    }

    /// Keeps only terms whose legs both lie in the left component, viewed in
    /// the loop algebra. Injective on `D+ (x) D+` and `A+ (x) A+`.
    pub fn left_part(&self) -> Self {
        let algebra = match self.algebra {
            AlgebraId::HalfLoop => AlgebraId::HalfLoop,
            _ => AlgebraId::Loop,
        };
        TensorElement {
            algebra,
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| a.component == Component::Left && b.component == Component::Left)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|((a, b), c)| (format!("{}⊗{}", leg(self.algebra, a), leg(self.algebra, b)), c)))
    }
}

fn leg(alg: AlgebraId, b: &BasisVector) -> String {
    let name = b.loop_name();
    match (alg, b.component) {
        (AlgebraId::Double | AlgebraId::LoopPlusH, Component::Left) => format!("left({name})"),
        (_, Component::Right) => format!("right({name})"),
        (_, Component::Aux) => format!("aux({name})"),
        _ => name,
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({})", self.render())
    }
}

impl std::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, c.clone());
        }
        out
    }
}

impl std::ops::Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement {
            algebra: self.algebra,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl std::ops::Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self + &(-rhs)
    }
}

impl std::ops::Add for TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: TensorElement) -> TensorElement {
        &self + &rhs
    }
}
