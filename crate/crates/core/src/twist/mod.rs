//! Involutive automorphisms of the loop algebras and the symmetric-space
//! splitting they induce on a Manin triple.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{AlgebraId, BasisVector, Component, Kind, LieElement};
use crate::manin::{in_span, pair_basis, pair_unchecked, Context, SubspaceId, Triple, TripleId};
use crate::report::Report;
use crate::scalar::RationalFn;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TwistId {
    Identity,
    Eta1,
    Eta2,
    Phi1,
    Phi2,
    SignOdd,
    SignEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Invariant,
    AntiInvariant,
    Neither,
}

impl TwistId {
    pub const ALL: [TwistId; 7] = [
        TwistId::Identity,
        TwistId::Eta1,
        TwistId::Eta2,
        TwistId::Phi1,
        TwistId::Phi2,
        TwistId::SignOdd,
        TwistId::SignEven,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            TwistId::Identity => "identity",
            TwistId::Eta1 => "eta1",
            TwistId::Eta2 => "eta2",
            TwistId::Phi1 => "phi1",
            TwistId::Phi2 => "phi2",
            TwistId::SignOdd => "sign-odd",
            TwistId::SignEven => "sign-even",
        }
    }

    /// Whether the twist acts on `alg`. `SignOdd` is also defined on `L + h`,
    /// where it fixes the extra Cartan direction.
    pub fn acts_on(self, alg: AlgebraId) -> bool {
        match self {
            TwistId::Identity => true,
            TwistId::Eta1 | TwistId::Eta2 | TwistId::SignEven => alg == AlgebraId::Loop,
            TwistId::Phi1 | TwistId::Phi2 => alg == AlgebraId::Double,
            TwistId::SignOdd => matches!(alg, AlgebraId::Loop | AlgebraId::HalfLoop | AlgebraId::LoopPlusH),
        }
    }

    /// Primary domain of the twist.
    pub fn domain(self) -> AlgebraId {
        match self {
            TwistId::Phi1 | TwistId::Phi2 => AlgebraId::Double,
            _ => AlgebraId::Loop,
        }
    }

    /// Image of a basis vector; every twist here is a signed permutation.
    pub fn apply_basis(self, b: &BasisVector) -> (i64, BasisVector) {
        let n = b.mode;
        let parity = |k: i32| if k.rem_euclid(2) == 0 { 1 } else { -1 };
        match self {
            TwistId::Identity => (1, *b),
            TwistId::Eta1 => eta1(b),
            TwistId::Eta2 => eta2(b),
            TwistId::Phi1 | TwistId::Phi2 => {
                let (s, img) = if self == TwistId::Phi1 { eta1(b) } else { eta2(b) };
                let c = match b.component {
                    Component::Left => Component::Right,
                    _ => Component::Left,
                };
                (s, img.with_component(c))
            }
            TwistId::SignOdd => {
                if b.component == Component::Aux {
                    return (1, *b);
                }
                match b.kind {
                    Kind::H => (parity(n), *b),
                    _ => (parity(n + 1), *b),
                }
            }
            TwistId::SignEven => (parity(n), *b),
        }
    }

    pub fn apply(self, x: &LieElement) -> Result<LieElement> {
        let alg = x.algebra();
        if !self.acts_on(alg) {
            return Err(Error::AlgebraMismatch { expected: self.domain().name().into(), found: alg.name().into() });
        }
        x.map_basis(alg, |b| {
            let (s, img) = self.apply_basis(b);
            Ok(LieElement::basis(alg, img)?.scale_int(s))
        })
    }
}

fn eta1(b: &BasisVector) -> (i64, BasisVector) {
    let n = b.mode;
    match b.kind {
        Kind::E => (1, BasisVector::new(b.component, Kind::F, -n)),
        Kind::F => (1, BasisVector::new(b.component, Kind::E, -n)),
        Kind::H => (-1, BasisVector::new(b.component, Kind::H, -n)),
    }
}

fn eta2(b: &BasisVector) -> (i64, BasisVector) {
    let n = b.mode;
    match b.kind {
        Kind::E => (1, BasisVector::new(b.component, Kind::E, 1 - n)),
        Kind::F => (1, BasisVector::new(b.component, Kind::F, -1 - n)),
        Kind::H => (1, BasisVector::new(b.component, Kind::H, -n)),
    }
}

impl FromStr for TwistId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TwistId::ALL
            .into_iter()
            .find(|t| t.cli_name() == s)
            .ok_or_else(|| Error::UnknownSymbol(format!("{s} (expected one of {})", TwistId::ALL.map(|t| t.cli_name()).join(", "))))
    }
}

impl fmt::Display for TwistId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

/// `(x + t(x))/2` and `(x - t(x))/2`.
pub fn decompose(t: TwistId, x: &LieElement) -> Result<(LieElement, LieElement)> {
    let img = t.apply(x)?;
    let half = RationalFn::frac(1, 2);
    Ok(((x + &img).scale(&half), (x - &img).scale(&half)))
}

/// Classifies `t` relative to `triple`; the report holds the evidence.
pub fn classify(t: TwistId, triple: Triple, w: i32) -> (Classification, Report) {
    let alg = triple.algebra();
    let mut rep = Report::new(format!("verify twist --id {t} --triple {} --window {w}", triple.id))
        .with_context("twist", t)
        .with_context("triple", triple.name())
        .with_context("window", w);
    if !t.acts_on(alg) {
        rep.record("domain", "twist acts on the ambient algebra", false, || {
            format!("{t} is not defined on {alg}")
        });
        return (Classification::Neither, rep);
    }
    let basis = alg.basis(w);

    let bad = basis.iter().find(|b| {
        let (s1, b1) = t.apply_basis(b);
        let (s2, b2) = t.apply_basis(&b1);
        s1 * s2 != 1 || b2 != **b
    });
    let involution = rep.record("involution", "phi^2 = id", bad.is_none(), || format!("fails on {:?}", bad.unwrap()));

    let mut bad = None;
    'auto: for a in &basis {
        for b in &basis {
            let (sa, ia) = t.apply_basis(a);
            let (sb, ib) = t.apply_basis(b);
            let lhs = crate::lie::bracket_basis(a, b).map(|(k, v)| {
                let (s, iv) = t.apply_basis(&v);
                (k * s, iv)
            });
            let rhs = crate::lie::bracket_basis(&ia, &ib).map(|(k, v)| (k * sa * sb, v));
            if lhs != rhs {
                bad = Some(format!("phi([{a:?}, {b:?}])"));
                break 'auto;
            }
        }
    }
    let automorphism =
        rep.record("automorphism", "phi([x,y]) = [phi(x), phi(y)]", bad.is_none(), || bad.unwrap());

    let ctx = Context::new(triple, None);
    let mut preserved = true;
    for (label, sub) in [("p+", SubspaceId::PPlus), ("p-", SubspaceId::PMinus)] {
        let fam = ctx.family(sub, w).expect("family");
        let big = ctx.family(sub, w + 2).expect("family");
        let bad = fam.iter().find(|v| !in_span(&big, &t.apply(v).expect("domain checked")));
        preserved &= rep.record(format!("phi({label}) = {label}"), "phi(p) = p", bad.is_none(), || {
            format!("phi({}) leaves {label}", bad.unwrap())
        });
    }

    let (mut plus_ok, mut minus_ok, mut seen) = (true, true, false);
    let mut witness = String::new();
    for a in &basis {
        for b in &basis {
            let (sa, ia) = t.apply_basis(a);
            let (sb, ib) = t.apply_basis(b);
            let lhs = sa * pair_basis(triple.form, &ia, b);
            let rhs = sb * pair_basis(triple.form, a, &ib);
            if lhs == 0 && rhs == 0 {
                continue;
            }
            seen = true;
            if lhs != rhs && plus_ok {
                plus_ok = false;
                witness.push_str(&format!("<phi {a:?}, {b:?}> = {lhs} but <{a:?}, phi {b:?}> = {rhs}\n"));
            }
            if lhs != -rhs && minus_ok {
                minus_ok = false;
                witness.push_str(&format!("<phi {a:?}, {b:?}> = {lhs} and <{a:?}, phi {b:?}> = {rhs}\n"));
            }
        }
    }
    let sign = match (seen, plus_ok, minus_ok) {
        (true, true, false) => Some(Classification::Invariant),
        (true, false, true) => Some(Classification::AntiInvariant),
        _ => None,
    };
    let adjoint = rep.record(
        "adjointness sign",
        "<phi(x), y> = +/- <x, phi(y)> with one sign",
        sign.is_some(),
        || witness.trim_end().to_string(),
    );
    let class = match sign {
        Some(c) if involution && automorphism && preserved && adjoint => c,
        _ => Classification::Neither,
    };
    rep.set_context("classification", format!("{class:?}"));
    (class, rep)
}

/// Checks `[k,k] in k`, `[k,m] in m`, `[m,m] in k` on the ambient algebra and
/// on both halves of the triple, plus the orthogonality pattern matching the
/// classification.
pub fn verify_symmetric_space(t: TwistId, triple: Triple, w: i32) -> Result<Report> {
    let (class, mut rep) = classify(t, triple, w);
    if class == Classification::Neither {
        return Err(Error::PrerequisiteFailed(format!("{t} is not a twist of {}", triple.name())));
    }
    let alg = triple.algebra();
    let ctx = Context::new(triple, Some(t));

    let ambient: Vec<LieElement> =
        alg.basis(w).into_iter().map(|b| LieElement::basis(alg, b).expect("legal")).collect();
    let split = |fam: &[LieElement], fixed: bool| -> Vec<LieElement> {
        fam.iter()
            .filter_map(|v| {
                let img = t.apply(v).expect("domain checked");
                let z = if fixed { v + &img } else { v - &img };
                (!z.is_zero()).then_some(z)
            })
            .collect()
    };
    let parts = [
        ("g", ambient.clone()),
        ("p+", ctx.family(SubspaceId::PPlus, w)?),
        ("p-", ctx.family(SubspaceId::PMinus, w)?),
    ];
    for (label, fam) in parts {
        let k = split(&fam, true);
        let m = split(&fam, false);
        for (name, xs, ys, want_fixed) in [("[k,k] in k", &k, &k, true), ("[k,m] in m", &k, &m, false), ("[m,m] in k", &m, &m, true)] {
            let mut bad = None;
            'pairs: for x in xs.iter() {
                for y in ys.iter() {
                    let z = x.bracket(y)?;
                    let img = t.apply(&z)?;
                    let ok = if want_fixed { img == z } else { img == -&z };
                    if !ok {
                        bad = Some(format!("[{x}, {y}] = {z}"));
                        break 'pairs;
                    }
                }
            }
            rep.record(format!("{label}: {name}"), name, bad.is_none(), || bad.unwrap());
        }
    }

    let (first, second, anchor) = match class {
        Classification::AntiInvariant => (
            [(SubspaceId::KPlus, SubspaceId::KMinus), (SubspaceId::MPlus, SubspaceId::MMinus)],
            "<k+, k-> = <m+, m-> = 0",
            "anti-invariant orthogonality",
        ),
        _ => (
            [(SubspaceId::KPlus, SubspaceId::MMinus), (SubspaceId::MPlus, SubspaceId::KMinus)],
            "<k+, m-> = <m+, k-> = 0",
            "invariant orthogonality",
        ),
    };
    let mut bad = None;
    'orth: for (a, b) in first {
        let fa = ctx.family(a, w)?;
        let fb = ctx.family(b, w + 1)?;
        for x in &fa {
            for y in &fb {
                let v = pair_unchecked(triple.form, x, y);
                if !v.is_zero() {
                    bad = Some(format!("<{x}, {y}> = {v}"));
                    break 'orth;
                }
            }
        }
    }
    rep.record(anchor, second, bad.is_none(), || bad.unwrap());
    Ok(rep)
}

/// The twists that make sense for a triple, with their expected classes.
pub fn known_twists(id: TripleId) -> &'static [TwistId] {
    match id {
        TripleId::D => &[TwistId::Phi1, TwistId::Phi2],
        TripleId::L => &[TwistId::SignOdd, TwistId::SignEven],
        TripleId::A => &[TwistId::SignOdd],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(alg: AlgebraId, terms: &[(i64, BasisVector)]) -> LieElement {
        LieElement::from_terms(alg, terms.iter().map(|(c, b)| (*b, RationalFn::int(*c)))).unwrap()
    }

    #[test]
    fn images() {
        let l = AlgebraId::Loop;
        let h3 = el(l, &[(1, BasisVector::h(3))]);
        assert_eq!(TwistId::Eta1.apply(&h3).unwrap(), el(l, &[(-1, BasisVector::h(-3))]));
        let d = AlgebraId::Double;
        let x = el(d, &[(1, BasisVector::e(2)), (1, BasisVector::right(Kind::F, 5))]);
        let want = el(d, &[(1, BasisVector::e(-5)), (1, BasisVector::right(Kind::F, -2))]);
        assert_eq!(TwistId::Phi1.apply(&x).unwrap(), want);
        let h4 = el(l, &[(1, BasisVector::h(4))]);
        assert_eq!(TwistId::SignEven.apply(&h4).unwrap(), h4);
        assert!(TwistId::Phi1.apply(&h4).is_err());
    }

    #[test]
    fn decompositions() {
        let l = AlgebraId::Loop;
        let e1 = el(l, &[(1, BasisVector::e(1))]);
        let (k, m) = decompose(TwistId::Eta1, &e1).unwrap();
        let fm1 = el(l, &[(1, BasisVector::f(-1))]);
        let half = RationalFn::frac(1, 2);
        assert_eq!(k, (&e1 + &fm1).scale(&half));
        assert_eq!(m, (&e1 - &fm1).scale(&half));
        let e2 = el(l, &[(1, BasisVector::e(2))]);
        assert_eq!(decompose(TwistId::SignEven, &e2).unwrap(), (e2.clone(), LieElement::zero(l)));
        let e3 = el(l, &[(1, BasisVector::e(3))]);
        assert_eq!(decompose(TwistId::SignEven, &e3).unwrap(), (LieElement::zero(l), e3.clone()));
    }

    #[test]
    fn classifications() {
        use Classification::*;
        let cases = [
            (TwistId::Phi1, TripleId::D, AntiInvariant),
            (TwistId::Phi2, TripleId::D, AntiInvariant),
            (TwistId::Identity, TripleId::D, Invariant),
            (TwistId::SignOdd, TripleId::A, Invariant),
            (TwistId::SignOdd, TripleId::L, AntiInvariant),
            (TwistId::SignEven, TripleId::L, AntiInvariant),
            (TwistId::Eta1, TripleId::L, Neither),
        ];
        for (t, id, want) in cases {
            let (c, r) = classify(t, Triple::new(id), 3);
            assert_eq!(c, want, "{t} on {id}\n{}", r.to_text());
        }
    }

    #[test]
    fn symmetric_spaces() {
        for (t, id) in [(TwistId::Phi1, TripleId::D), (TwistId::SignOdd, TripleId::A), (TwistId::SignEven, TripleId::L)] {
            let r = verify_symmetric_space(t, Triple::new(id), 3).unwrap();
            assert!(r.passed(), "{}", r.to_text());
        }
        assert!(verify_symmetric_space(TwistId::Eta1, Triple::new(TripleId::L), 3).is_err());
    }
}
