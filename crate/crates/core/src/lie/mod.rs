//! Graded loop-type Lie algebras over sl2: the loop algebra, its positive
//! half, the double `L + L` and `L + h`.

mod named;
mod presentation;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{RationalFn, Q};

pub use named::{named_element, Symbol};
pub use presentation::{verify_presentation, RelationSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Component {
    Left,
    Right,
    Aux,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    E,
    F,
    H,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::E, Kind::F, Kind::H];

    pub fn letter(self) -> &'static str {
        match self {
            Kind::E => "e",
            Kind::F => "f",
            Kind::H => "h",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisVector {
    pub component: Component,
    pub kind: Kind,
    pub mode: i32,
}

impl BasisVector {
    pub const fn new(component: Component, kind: Kind, mode: i32) -> Self {
        BasisVector { component, kind, mode }
    }

    pub const fn left(kind: Kind, mode: i32) -> Self {
        Self::new(Component::Left, kind, mode)
    }

    pub const fn right(kind: Kind, mode: i32) -> Self {
        Self::new(Component::Right, kind, mode)
    }

    pub const fn e(mode: i32) -> Self {
        Self::left(Kind::E, mode)
    }

    pub const fn f(mode: i32) -> Self {
        Self::left(Kind::F, mode)
    }

    pub const fn h(mode: i32) -> Self {
        Self::left(Kind::H, mode)
    }

    pub const AUX_H0: BasisVector = BasisVector::new(Component::Aux, Kind::H, 0);

    pub fn with_component(self, component: Component) -> Self {
        BasisVector { component, ..self }
    }

    pub fn with_mode(self, mode: i32) -> Self {
        BasisVector { mode, ..self }
    }

    /// Renders the loop-algebra name without component decoration.
    pub fn loop_name(&self) -> String {
        format!("{}[{}]", self.kind.letter(), self.mode)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraId {
    Loop,
    HalfLoop,
    Double,
    LoopPlusH,
}

impl AlgebraId {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::Loop => "L",
            AlgebraId::HalfLoop => "L+",
            AlgebraId::Double => "D",
            AlgebraId::LoopPlusH => "A",
        }
    }

    pub fn is_legal(self, b: &BasisVector) -> bool {
        match (self, b.component) {
            (AlgebraId::Loop, Component::Left) => true,
            (AlgebraId::HalfLoop, Component::Left) => b.mode >= 0,
            (AlgebraId::Double, Component::Left | Component::Right) => true,
            (AlgebraId::LoopPlusH, Component::Left) => true,
            (AlgebraId::LoopPlusH, Component::Aux) => b.kind == Kind::H && b.mode == 0,
            _ => false,
        }
    }

    pub fn components(self) -> &'static [Component] {
        match self {
            AlgebraId::Loop | AlgebraId::HalfLoop => &[Component::Left],
            AlgebraId::Double => &[Component::Left, Component::Right],
            AlgebraId::LoopPlusH => &[Component::Left, Component::Aux],
        }
    }

    /// All legal basis vectors with `|mode| <= window`.
    pub fn basis(self, window: i32) -> Vec<BasisVector> {
        let mut out = Vec::new();
        for &c in self.components() {
            if c == Component::Aux {
                out.push(BasisVector::AUX_H0);
                continue;
            }
            for kind in Kind::ALL {
                for mode in -window..=window {
                    let b = BasisVector::new(c, kind, mode);
                    if self.is_legal(&b) {
                        out.push(b);
                    }
                }
            }
        }
        out
    }

    pub fn check(self, b: &BasisVector) -> Result<()> {
        if self.is_legal(b) {
            Ok(())
        } else {
            Err(Error::ModeOutOfAlgebra(format!("{b:?}"), self.name().into()))
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bracket of two basis vectors of the same component, as a (coefficient,
/// basis vector) pair or nothing.
pub fn bracket_basis(a: &BasisVector, b: &BasisVector) -> Option<(i64, BasisVector)> {
    if a.component != b.component || a.component == Component::Aux {
        return None;
    }
    let n = a.mode + b.mode;
    let c = a.component;
    use Kind::*;
    match (a.kind, b.kind) {
        (H, E) => Some((2, BasisVector::new(c, E, n))),
        (E, H) => Some((-2, BasisVector::new(c, E, n))),
        (H, F) => Some((-2, BasisVector::new(c, F, n))),
        (F, H) => Some((2, BasisVector::new(c, F, n))),
        (E, F) => Some((1, BasisVector::new(c, H, n))),
        (F, E) => Some((-1, BasisVector::new(c, H, n))),
        _ => None,
    }
}

/// Finite linear combination of basis vectors of one algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct LieElement {
    algebra: AlgebraId,
    terms: BTreeMap<BasisVector, RationalFn>,
}

impl LieElement {
    pub fn zero(algebra: AlgebraId) -> Self {
        LieElement { algebra, terms: BTreeMap::new() }
    }

    pub fn basis(algebra: AlgebraId, b: BasisVector) -> Result<Self> {
        algebra.check(&b)?;
        let mut terms = BTreeMap::new();
        terms.insert(b, RationalFn::one());
        Ok(LieElement { algebra, terms })
    }

    pub fn from_terms<I>(algebra: AlgebraId, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisVector, RationalFn)>,
    {
        let mut out = Self::zero(algebra);
        for (b, c) in terms {
            algebra.check(&b)?;
            out.add_term(b, c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, b: BasisVector, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisVector, &RationalFn)> {
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

    pub fn coeff(&self, b: &BasisVector) -> RationalFn {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn max_abs_mode(&self) -> i32 {
        self.terms.keys().map(|b| b.mode.abs()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &RationalFn) -> Self {
        if c.is_zero() {
            return Self::zero(self.algebra);
        }
        LieElement {
            algebra: self.algebra,
            terms: self.terms.iter().map(|(b, v)| (*b, v * c)).collect(),
        }
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        self.scale(&RationalFn::constant(c.clone()))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&RationalFn::int(n))
    }

    fn same_algebra(&self, other: &LieElement) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                expected: self.algebra.name().into(),
                found: other.algebra.name().into(),
            })
        }
    }

    pub fn try_add(&self, other: &LieElement) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    /// Lie bracket, extended bilinearly from the basis.
    pub fn bracket(&self, other: &LieElement) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = Self::zero(self.algebra);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((k, v)) = bracket_basis(a, b) {
                    self.algebra.check(&v)?;
                    out.add_term(v, (ca * cb).scale(&crate::scalar::q(k)));
                }
            }
        }
        Ok(out)
    }

    /// Applies `f` to every basis vector, collecting images linearly.
    pub fn map_basis<F>(&self, algebra: AlgebraId, mut f: F) -> Result<LieElement>
    where
        F: FnMut(&BasisVector) -> Result<LieElement>,
    {
        let mut out = LieElement::zero(algebra);
        for (b, c) in &self.terms {
            let img = f(b)?;
            for (b2, c2) in img.terms {
                out.add_term(b2, c * &c2);
            }
        }
        Ok(out)
    }

    /// Reinterprets a loop-algebra element in `target`: the diagonal embedding
    /// `x -> (x, x)` for the double, `h0 -> (h0, h0)` and `x -> (x, 0)`
    /// otherwise for `L + h`, and the identity for the loop algebras.
    pub fn embed(&self, target: AlgebraId) -> Result<LieElement> {
        match target {
            AlgebraId::Loop | AlgebraId::HalfLoop => {
                LieElement::from_terms(target, self.terms.iter().map(|(b, c)| (*b, c.clone())))
            }
            AlgebraId::Double => self.map_basis(target, |b| {
                LieElement::from_terms(
                    target,
                    [
                        (b.with_component(Component::Left), RationalFn::one()),
                        (b.with_component(Component::Right), RationalFn::one()),
                    ],
                )
            }),
            AlgebraId::LoopPlusH => self.map_basis(target, |b| {
                let mut t = vec![(b.with_component(Component::Left), RationalFn::one())];
                if b.kind == Kind::H && b.mode == 0 {
                    t.push((BasisVector::AUX_H0, RationalFn::one()));
                }
                LieElement::from_terms(target, t)
            }),
        }
    }

    /// Places a loop-algebra element into one component of the ambient algebra.
    pub fn inject(&self, target: AlgebraId, component: Component) -> Result<LieElement> {
        LieElement::from_terms(
            target,
            self.terms.iter().map(|(b, c)| (b.with_component(component), c.clone())),
        )
    }

    /// Inverse of the positive-part embeddings: keeps the left component.
    pub fn left_part(&self) -> LieElement {
        let algebra = match self.algebra {
            AlgebraId::HalfLoop => AlgebraId::HalfLoop,
            _ => AlgebraId::Loop,
        };
        LieElement {
            algebra,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.component == Component::Left)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Canonical DSL rendering. Basis vectors of the double and of `L + h`
    /// carry explicit `left(..)`, `right(..)` or `aux(..)` wrappers.
    pub fn render(&self) -> String {
        let decorate = matches!(self.algebra, AlgebraId::Double | AlgebraId::LoopPlusH);
        render_terms(self.terms.iter().map(|(b, c)| {
            let name = b.loop_name();
            let name = if decorate {
                match b.component {
                    Component::Left => format!("left({name})"),
                    Component::Right => format!("right({name})"),
                    Component::Aux => format!("aux({name})"),
                }
            } else {
                name
            };
            (name, c)
        }))
    }
}

/// Joins `coefficient * name` terms using the DSL conventions.
pub fn render_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a RationalFn)>,
{
    let mut out = String::new();
    for (name, c) in terms {
        let (neg, abs) = split_sign(c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !abs.is_one() {
            out.push_str(&render_scalar(&abs));
            out.push('*');
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn split_sign(c: &RationalFn) -> (bool, RationalFn) {
    use num_traits::Signed;
    match c.as_constant() {
        Some(v) if v.is_negative() => (true, RationalFn::constant(-v)),
        _ => (false, c.clone()),
    }
}

/// Scalar in DSL form: bare rational literals, otherwise parenthesized.
pub fn render_scalar(c: &RationalFn) -> String {
    match c.as_constant() {
        Some(v) => crate::scalar::poly::fmt_rational(&v),
        None => format!("({c})"),
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement[{}]({})", self.algebra, self.render())
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        self.try_add(rhs).expect("adding elements of different algebras")
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement {
            algebra: self.algebra,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(b: BasisVector) -> LieElement {
        LieElement::basis(AlgebraId::Loop, b).unwrap()
    }

    #[test]
    fn structure_constants() {
        assert_eq!(l(BasisVector::h(0)).bracket(&l(BasisVector::e(1))).unwrap(), l(BasisVector::e(1)).scale_int(2));
        assert!(l(BasisVector::e(2)).bracket(&l(BasisVector::e(5))).unwrap().is_zero());
        assert_eq!(l(BasisVector::e(2)).bracket(&l(BasisVector::f(-3))).unwrap(), l(BasisVector::h(-1)));
    }

    #[test]
    fn half_loop_rejects_negative_modes() {
        assert!(LieElement::basis(AlgebraId::HalfLoop, BasisVector::e(-1)).is_err());
        assert!(LieElement::basis(AlgebraId::HalfLoop, BasisVector::e(0)).is_ok());
    }

    #[test]
    fn aux_is_central() {
        let a = AlgebraId::LoopPlusH;
        let z = LieElement::basis(a, BasisVector::AUX_H0).unwrap();
        for b in a.basis(3) {
            assert!(z.bracket(&LieElement::basis(a, b).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let x = l(BasisVector::e(0));
        let y = LieElement::basis(AlgebraId::HalfLoop, BasisVector::e(0)).unwrap();
        assert!(matches!(x.bracket(&y), Err(Error::AlgebraMismatch { .. })));
    }

    #[test]
    fn rendering() {
        let x = &l(BasisVector::e(1)).scale_int(2) - &l(BasisVector::f(-1)).scale(&RationalFn::frac(1, 2));
        assert_eq!(x.render(), "2*e[1] - 1/2*f[-1]");
        let d = x.embed(AlgebraId::Double).unwrap();
        assert_eq!(d.render(), "2*left(e[1]) - 1/2*left(f[-1]) + 2*right(e[1]) - 1/2*right(f[-1])");
    }
}
