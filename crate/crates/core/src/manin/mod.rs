//! Invariant forms, Manin triples and the subspace families they induce.

mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{AlgebraId, BasisVector, Component, Kind, LieElement};
use crate::linalg;
use crate::scalar::{q, RationalFn};
use crate::twist::TwistId;

pub use verify::verify_triple;

/// Default truncation window.
pub const DEFAULT_WINDOW: i32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairingId {
    LoopForm,
    HalfLoopForm,
    DoubleForm,
    AForm,
}

impl PairingId {
    pub fn algebra(self) -> AlgebraId {
        match self {
            PairingId::LoopForm | PairingId::HalfLoopForm => AlgebraId::Loop,
            PairingId::DoubleForm => AlgebraId::Double,
            PairingId::AForm => AlgebraId::LoopPlusH,
        }
    }
}

fn loop_form(a: &BasisVector, b: &BasisVector) -> i64 {
    use Kind::*;
    match (a.kind, b.kind) {
        (E, F) | (F, E) if a.mode + b.mode == 0 => -1,
        (H, H) if a.mode + b.mode == 0 => -2,
        _ => 0,
    }
}

fn half_loop_form(a: &BasisVector, b: &BasisVector) -> i64 {
    use Kind::*;
    match (a.kind, b.kind) {
        (E, F) | (F, E) if a.mode + b.mode == -1 => -1,
        (H, H) if a.mode + b.mode == -1 => -2,
        _ => 0,
    }
}

/// Value of the form on two basis vectors.
pub fn pair_basis(p: PairingId, a: &BasisVector, b: &BasisVector) -> i64 {
    match p {
        PairingId::LoopForm => loop_form(a, b),
        PairingId::HalfLoopForm => half_loop_form(a, b),
        PairingId::DoubleForm => match (a.component, b.component) {
            (Component::Left, Component::Left) => loop_form(a, b),
            (Component::Right, Component::Right) => -loop_form(a, b),
            _ => 0,
        },
        PairingId::AForm => match (a.component, b.component) {
            (Component::Left, Component::Left) => loop_form(a, b),
            (Component::Aux, Component::Aux) => -loop_form(a, b),
            _ => 0,
        },
    }
}

/// Bilinear extension of [`pair_basis`].
pub fn pair(p: PairingId, x: &LieElement, y: &LieElement) -> Result<RationalFn> {
    for z in [x, y] {
        if z.algebra() != p.algebra() {
            return Err(Error::AlgebraMismatch {
                expected: p.algebra().name().into(),
                found: z.algebra().name().into(),
            });
        }
    }
    Ok(pair_unchecked(p, x, y))
}

pub(crate) fn pair_unchecked(p: PairingId, x: &LieElement, y: &LieElement) -> RationalFn {
    let mut acc = RationalFn::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let v = pair_basis(p, a, b);
            if v != 0 {
                acc = &acc + &(ca * cb).scale(&q(v));
            }
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TripleId {
    D,
    L,
    A,
}

impl TripleId {
    pub fn algebra(self) -> AlgebraId {
        match self {
            TripleId::D => AlgebraId::Double,
            TripleId::L => AlgebraId::Loop,
            TripleId::A => AlgebraId::LoopPlusH,
        }
    }

    pub fn standard_form(self) -> PairingId {
        match self {
            TripleId::D => PairingId::DoubleForm,
            TripleId::L => PairingId::HalfLoopForm,
            TripleId::A => PairingId::AForm,
        }
    }
}

impl FromStr for TripleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D" => Ok(TripleId::D),
            "L" => Ok(TripleId::L),
            "A" => Ok(TripleId::A),
            _ => Err(Error::UnknownSymbol(format!("{s} (expected one of D, L, A)"))),
        }
    }
}

impl fmt::Display for TripleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TripleId::D => "D",
            TripleId::L => "L",
            TripleId::A => "A",
        };
        f.write_str(s)
    }
}

/// A candidate Manin triple: ambient algebra, its two subalgebras (fixed by
/// the id) and a pairing. Non-standard pairings give negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub id: TripleId,
    pub form: PairingId,
}

impl Triple {
    pub fn new(id: TripleId) -> Self {
        Triple { id, form: id.standard_form() }
    }

    pub fn with_form(id: TripleId, form: PairingId) -> Self {
        Triple { id, form }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.id.algebra()
    }

    pub fn name(&self) -> String {
        if self.form == self.id.standard_form() {
            self.id.to_string()
        } else {
            format!("{} with {:?}", self.id, self.form)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubspaceId {
    PPlus,
    PMinus,
    KPlus,
    KMinus,
    MPlus,
    MMinus,
    OnsagerSub,
    AugOnsagerSub,
    T1Sub,
    T2Sub,
}

impl SubspaceId {
    fn base(self) -> SubspaceId {
        match self {
            SubspaceId::OnsagerSub | SubspaceId::AugOnsagerSub | SubspaceId::T1Sub | SubspaceId::T2Sub => {
                SubspaceId::KPlus
            }
            s => s,
        }
    }

    /// The context a named fixed-point subalgebra lives in.
    fn required_context(self) -> Option<(TripleId, TwistId)> {
        match self {
            SubspaceId::OnsagerSub => Some((TripleId::D, TwistId::Phi1)),
            SubspaceId::AugOnsagerSub => Some((TripleId::D, TwistId::Phi2)),
            SubspaceId::T1Sub => Some((TripleId::L, TwistId::SignOdd)),
            SubspaceId::T2Sub => Some((TripleId::L, TwistId::SignEven)),
            _ => None,
        }
    }
}

/// A triple, optionally with a twist; fixes the meaning of every subspace id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Context {
    pub triple: Triple,
    pub twist: Option<TwistId>,
}

impl Context {
    pub fn new(triple: Triple, twist: Option<TwistId>) -> Self {
        Context { triple, twist }
    }

    pub fn of(id: TripleId) -> Self {
        Context { triple: Triple::new(id), twist: None }
    }

    pub fn twisted(id: TripleId, twist: TwistId) -> Self {
        Context { triple: Triple::new(id), twist: Some(twist) }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.triple.algebra()
    }

    pub fn form(&self) -> PairingId {
        self.triple.form
    }

    fn twist_or_err(&self) -> Result<TwistId> {
        self.twist
            .ok_or_else(|| Error::ContextMismatch(format!("{} has no twist", self.triple.name())))
    }

    fn check_named(&self, sub: SubspaceId) -> Result<()> {
        if let Some((t, tw)) = sub.required_context() {
            if self.triple.id != t || self.twist != Some(tw) {
                return Err(Error::ContextMismatch(format!("{sub:?} lives in ({t}, {tw:?})")));
            }
        }
        Ok(())
    }

    /// Spanning family of `sub` generated from seeds with `|mode| <= window`.
    /// Members are pairwise distinct and have leading coefficient 1.
    pub fn family(&self, sub: SubspaceId, window: i32) -> Result<Vec<LieElement>> {
        self.check_named(sub)?;
        let sub = sub.base();
        match sub {
            SubspaceId::PPlus => Ok(self.p_family(true, window)),
            SubspaceId::PMinus => Ok(self.p_family(false, window)),
            _ => {
                let tw = self.twist_or_err()?;
                let plus = matches!(sub, SubspaceId::KPlus | SubspaceId::MPlus);
                let fixed = matches!(sub, SubspaceId::KPlus | SubspaceId::KMinus);
                let seeds = self.p_family(plus, window);
                let mut seen = BTreeSet::new();
                let mut out = Vec::new();
                for v in seeds {
                    let img = tw.apply(&v)?;
                    let w = if fixed { &v + &img } else { &v - &img };
                    if w.is_zero() {
                        continue;
                    }
                    let w = normalize(&w);
                    if seen.insert(w.render()) {
                        out.push(w);
                    }
                }
                Ok(out)
            }
        }
    }

    fn p_family(&self, plus: bool, w: i32) -> Vec<LieElement> {
        let alg = self.algebra();
        let basis = |b: BasisVector| LieElement::basis(alg, b).expect("legal basis vector");
        let mut out = Vec::new();
        match self.triple.id {
            TripleId::L => {
                for kind in Kind::ALL {
                    for n in -w..=w {
                        if (n >= 0) == plus {
                            out.push(basis(BasisVector::left(kind, n)));
                        }
                    }
                }
            }
            TripleId::D => {
                if plus {
                    for kind in Kind::ALL {
                        for n in -w..=w {
                            let b = BasisVector::left(kind, n);
                            out.push(&basis(b) + &basis(b.with_component(Component::Right)));
                        }
                    }
                } else {
                    for n in -w..=w {
                        let (l, r) = (Component::Left, Component::Right);
                        let mut push = |c: Component, k: Kind| out.push(basis(BasisVector::new(c, k, n)));
                        if n > 0 {
                            push(l, Kind::E);
                            push(l, Kind::H);
                        }
                        if n >= 0 {
                            push(l, Kind::F);
                        }
                        if n < 0 {
                            push(r, Kind::F);
                            push(r, Kind::H);
                        }
                        if n <= 0 {
                            push(r, Kind::E);
                        }
                    }
                    let h0 = BasisVector::h(0);
                    out.push(&basis(h0) - &basis(h0.with_component(Component::Right)));
                }
            }
            TripleId::A => {
                let h0 = &basis(BasisVector::h(0));
                let aux = &basis(BasisVector::AUX_H0);
                out.push(if plus { h0 + aux } else { h0 - aux });
                for n in -w..=w {
                    let keep = |k: Kind| match (plus, k) {
                        (true, Kind::E) => n >= 0,
                        (true, _) => n > 0,
                        (false, Kind::F) => n <= 0,
                        (false, _) => n < 0,
                    };
                    for kind in Kind::ALL {
                        if keep(kind) {
                            out.push(basis(BasisVector::left(kind, n)));
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether `x` lies in `sub`.
    pub fn member(&self, sub: SubspaceId, x: &LieElement) -> Result<bool> {
        if x.algebra() != self.algebra() {
            return Err(Error::ContextMismatch(format!(
                "element of {} in a {} context",
                x.algebra(),
                self.algebra()
            )));
        }
        self.check_named(sub)?;
        let sub = sub.base();
        if x.is_zero() {
            return Ok(true);
        }
        match sub {
            SubspaceId::PPlus | SubspaceId::PMinus => {
                let fam = self.family(sub, x.max_abs_mode() + 2)?;
                Ok(in_span(&fam, x))
            }
            _ => {
                let tw = self.twist_or_err()?;
                let plus = matches!(sub, SubspaceId::KPlus | SubspaceId::MPlus);
                let p = if plus { SubspaceId::PPlus } else { SubspaceId::PMinus };
                let img = tw.apply(x)?;
                let eigen = if matches!(sub, SubspaceId::KPlus | SubspaceId::KMinus) {
                    img == *x
                } else {
                    img == -x
                };
                Ok(eigen && self.member(p, x)?)
            }
        }
    }

    /// The unique element of `partners` pairing nontrivially with `b`,
    /// together with the pairing value.
    pub fn dual_partner(&self, b: &LieElement, partners: SubspaceId) -> Result<(LieElement, RationalFn)> {
        let fam = self.family(partners, b.max_abs_mode() + 2)?;
        PartnerIndex::new(self.form(), &fam).partner(b)
    }
}

/// Family indexed by support, for repeated partner lookups.
pub struct PartnerIndex<'a> {
    form: PairingId,
    family: &'a [LieElement],
    by_basis: BTreeMap<BasisVector, Vec<usize>>,
}

impl<'a> PartnerIndex<'a> {
    pub fn new(form: PairingId, family: &'a [LieElement]) -> Self {
        let mut by_basis: BTreeMap<BasisVector, Vec<usize>> = BTreeMap::new();
        for (i, v) in family.iter().enumerate() {
            for (b, _) in v.terms() {
                by_basis.entry(*b).or_default().push(i);
            }
        }
        PartnerIndex { form, family, by_basis }
    }

    pub fn partner(&self, b: &LieElement) -> Result<(LieElement, RationalFn)> {
        let mut candidates = BTreeSet::new();
        for (a, _) in b.terms() {
            for z in dual_support(self.form, a) {
                if let Some(ix) = self.by_basis.get(&z) {
                    candidates.extend(ix.iter().copied());
                }
            }
        }
        let hits: Vec<(LieElement, RationalFn)> = candidates
            .into_iter()
            .filter_map(|i| {
                let v = &self.family[i];
                let p = pair_unchecked(self.form, b, v);
                (!p.is_zero()).then(|| (v.clone(), p))
            })
            .collect();
        match hits.len() {
            1 => Ok(hits.into_iter().next().unwrap()),
            n => Err(Error::NotBasisDiagonal(b.render(), n)),
        }
    }
}

/// Basis vectors pairing nontrivially with `a`.
pub fn dual_support(form: PairingId, a: &BasisVector) -> Vec<BasisVector> {
    let shift = if form == PairingId::HalfLoopForm { -1 } else { 0 };
    let other = match a.kind {
        Kind::E => Kind::F,
        Kind::F => Kind::E,
        Kind::H => Kind::H,
    };
    let z = BasisVector::new(a.component, other, shift - a.mode);
    match (form, a.component) {
        (PairingId::LoopForm | PairingId::HalfLoopForm, Component::Left) => vec![z],
        (PairingId::DoubleForm, Component::Left | Component::Right) => vec![z],
        (PairingId::AForm, Component::Left | Component::Aux) => vec![z],
        _ => vec![],
    }
}

/// Scales `x` so that its first term has coefficient 1.
pub fn normalize(x: &LieElement) -> LieElement {
    match x.terms().next() {
        Some((_, c)) if !c.is_one() => x.scale(&c.inv().expect("nonzero coefficient")),
        _ => x.clone(),
    }
}

/// Exact span membership. Only family members connected to the support of
/// `x` through shared basis vectors take part in the elimination.
pub fn in_span(family: &[LieElement], x: &LieElement) -> bool {
    let mut support: BTreeSet<BasisVector> = x.terms().map(|(b, _)| *b).collect();
    let mut used = vec![false; family.len()];
    loop {
        let mut grew = false;
        for (i, v) in family.iter().enumerate() {
            if used[i] || !v.terms().any(|(b, _)| support.contains(b)) {
                continue;
            }
            used[i] = true;
            grew = true;
            support.extend(v.terms().map(|(b, _)| *b));
        }
        if !grew {
            break;
        }
    }
    let coords: BTreeMap<BasisVector, usize> = support.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let row = |v: &LieElement| {
        let mut r = vec![RationalFn::zero(); coords.len()];
        for (b, c) in v.terms() {
            r[coords[b]] = c.clone();
        }
        r
    };
    let mut rows: Vec<Vec<RationalFn>> = family.iter().zip(&used).filter(|(_, u)| **u).map(|(v, _)| row(v)).collect();
    let r0 = linalg::rank(&rows, coords.len());
    rows.push(row(x));
    linalg::rank(&rows, coords.len()) == r0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(alg: AlgebraId, terms: &[(i64, BasisVector)]) -> LieElement {
        LieElement::from_terms(alg, terms.iter().map(|(c, b)| (*b, RationalFn::int(*c)))).unwrap()
    }

    #[test]
    fn form_values() {
        let l = AlgebraId::Loop;
        let e3 = el(l, &[(1, BasisVector::e(3))]);
        let fm3 = el(l, &[(1, BasisVector::f(-3))]);
        assert_eq!(pair(PairingId::LoopForm, &e3, &fm3).unwrap(), RationalFn::int(-1));
        let h2 = el(l, &[(1, BasisVector::h(2))]);
        let hm3 = el(l, &[(1, BasisVector::h(-3))]);
        assert_eq!(pair(PairingId::HalfLoopForm, &h2, &hm3).unwrap(), RationalFn::int(-2));
        let d = AlgebraId::Double;
        let r = BasisVector::right(Kind::H, 0);
        let plus = el(d, &[(1, BasisVector::h(0)), (1, r)]);
        let minus = el(d, &[(1, BasisVector::h(0)), (-1, r)]);
        assert_eq!(pair(PairingId::DoubleForm, &plus, &minus).unwrap(), RationalFn::int(-4));
        assert!(pair(PairingId::DoubleForm, &plus, &e3).is_err());
    }

    #[test]
    fn partners() {
        let ctx = Context::of(TripleId::L);
        let b = el(AlgebraId::Loop, &[(1, BasisVector::f(-1))]);
        let (p, v) = ctx.dual_partner(&b, SubspaceId::PPlus).unwrap();
        assert_eq!(p, el(AlgebraId::Loop, &[(1, BasisVector::e(0))]));
        assert_eq!(v, RationalFn::int(-1));

        let ctx = Context::of(TripleId::D);
        let d = AlgebraId::Double;
        let b = el(d, &[(1, BasisVector::e(1))]);
        let (p, v) = ctx.dual_partner(&b, SubspaceId::PPlus).unwrap();
        assert_eq!(p, el(d, &[(1, BasisVector::f(-1)), (1, BasisVector::right(Kind::F, -1))]));
        assert_eq!(v, RationalFn::int(-1));
    }

    #[test]
    fn membership() {
        let d = AlgebraId::Double;
        let ctx = Context::of(TripleId::D);
        let r = BasisVector::right(Kind::H, 0);
        assert!(ctx.member(SubspaceId::PMinus, &el(d, &[(1, BasisVector::h(0)), (-1, r)])).unwrap());
        assert!(!ctx.member(SubspaceId::PPlus, &el(d, &[(1, BasisVector::e(1))])).unwrap());
        let ctx = Context::twisted(TripleId::D, TwistId::Phi1);
        let x = el(
            d,
            &[
                (1, BasisVector::e(1)),
                (1, BasisVector::f(-1)),
                (1, BasisVector::right(Kind::E, 1)),
                (1, BasisVector::right(Kind::F, -1)),
            ],
        );
        assert!(ctx.member(SubspaceId::KPlus, &x).unwrap());
        assert!(ctx.member(SubspaceId::OnsagerSub, &x).unwrap());
        assert!(Context::of(TripleId::D).member(SubspaceId::OnsagerSub, &x).is_err());
    }
}
