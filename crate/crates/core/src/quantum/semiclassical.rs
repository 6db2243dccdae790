//! First-order expansions in hbar compared against the classical costructures.

use std::collections::{BTreeMap, BTreeSet};

use crate::costructure::{bi_ideal_left, cocommutator, TensorElement};
use crate::error::{Error, Result};
use crate::lie::{named_element, AlgebraId, BasisVector, Kind, LieElement, Symbol};
use crate::linalg::nullspace;
use crate::manin::{Context, TripleId};
use crate::report::Report;
use crate::scalar::{RationalFn, Var};

use super::matrix::{mismatch_witness, MatrixRF};
use super::model::{MGen, ModelId};
use super::poly::word_image;
use super::rep::{classical_image, coproduct, rep_matrix, tensor_image, Family, RepId, UGen};

fn alpha() -> RationalFn {
    RationalFn::var(Var::Alpha)
}

fn family_of(g: &UGen) -> Result<Family> {
    match g {
        UGen::Xp(0 | 1) | UGen::Xm(0 | 1) | UGen::H(0 | 1) => Ok(Family::UhL),
        UGen::Sl(_) | UGen::J(_) => Ok(Family::Yangian),
        _ => Err(Error::UnknownGenerator(format!("{g} has no classical counterpart"))),
    }
}

fn symbol_of(g: &UGen) -> (Symbol, Option<i32>) {
    match g {
        UGen::Xp(0) => (Symbol::Xp0, None),
        UGen::Xp(_) => (Symbol::Xp1, None),
        UGen::Xm(0) => (Symbol::Xm0, None),
        UGen::Xm(_) => (Symbol::Xm1, None),
        UGen::H(0) => (Symbol::H0, None),
        UGen::H(_) => (Symbol::H1, None),
        UGen::Sl(Kind::E) => (Symbol::E, Some(0)),
        UGen::Sl(Kind::F) => (Symbol::F, Some(0)),
        UGen::Sl(Kind::H) => (Symbol::H, Some(0)),
        UGen::J(k) => (Symbol::J(*k), None),
        _ => unreachable!("filtered by family_of"),
    }
}

fn basis_image(family: Family, spectral: Var, b: &BasisVector) -> Result<MatrixRF> {
    classical_image(family, spectral, &alpha(), &LieElement::basis(AlgebraId::Loop, *b)?)
}

/// `sum c rho_u(a) (x) rho_v(b)` for a loop-algebra tensor.
fn represent(family: Family, t: &TensorElement) -> Result<MatrixRF> {
    let mut acc = MatrixRF::zero(4);
    for ((a, b), c) in t.terms() {
        let m = basis_image(family, Var::U, a)?.kron(&basis_image(family, Var::V, b)?);
        acc = &acc + &m.scale(c);
    }
    Ok(acc)
}

/// Compares the hbar expansion of the coproduct of `g` with the classical
/// cocommutator: order 0 is the primitive coproduct, order 1 of
/// `Delta - Delta^op` is `delta`.
pub fn semiclassical_coproduct(g: &UGen, w: i32) -> Result<Report> {
    let family = family_of(g)?;
    let r1 = RepId::of(family, Var::U, alpha());
    let r2 = r1.at(Var::V);
    let (sym, idx) = symbol_of(g);
    let (ctx, alg) = match family {
        Family::UhL => (Context::of(TripleId::D), AlgebraId::Double),
        Family::Yangian => (Context::of(TripleId::L), AlgebraId::Loop),
    };
    let x = named_element(sym, idx, AlgebraId::Loop)?;
    let delta = cocommutator(&ctx, &x.embed(alg)?, w)?.left_part();

    let dq = coproduct(g)?;
    let quantum = tensor_image(&r1, &r2, &dq)?;
    let opposite = tensor_image(&r1, &r2, &dq.flip())?;

    let mut rep = Report::new(format!("semiclassical --target {g}"))
        .with_context("rep", family.name())
        .with_context("window", w);
    let id = MatrixRF::identity(2);
    let order0 = quantum.hbar_coefficient(0)?;
    let primitive = &classical_image(family, Var::U, &alpha(), &x)?.kron(&id)
        + &id.kron(&classical_image(family, Var::V, &alpha(), &x)?);
    rep.record(format!("Delta({g}) = {x} (x) 1 + 1 (x) {x} mod hbar"), "classical limit of the coproduct", order0 == primitive, || {
        mismatch_witness(&order0, &primitive)
    });
    let order1 = (&quantum - &opposite).hbar_coefficient(1)?;
    let classical = represent(family, &delta)?;
    rep.record(
        format!("(Delta - Delta^op)({g}) / hbar = delta({x}) mod hbar"),
        "Delta - Delta^op = hbar delta mod hbar^2",
        order1 == classical,
        || format!("delta = {delta}; {}", mismatch_witness(&order1, &classical)),
    );
    Ok(rep)
}

/// Coefficients expressing `target` in the span of `basis`, if it lies there.
fn express(target: &LieElement, basis: &[LieElement]) -> Option<Vec<RationalFn>> {
    let support: BTreeSet<BasisVector> =
        basis.iter().chain(std::iter::once(target)).flat_map(|x| x.terms().map(|(b, _)| *b)).collect();
    let rows: Vec<Vec<RationalFn>> = support
        .iter()
        .map(|b| basis.iter().map(|x| x.coeff(b)).chain(std::iter::once(-&target.coeff(b))).collect())
        .collect();
    let n = basis.len();
    for v in nullspace(&rows, n + 1) {
        if !v[n].is_zero() {
            let inv = v[n].inv().ok()?;
            return Some(v[..n].iter().map(|x| x * &inv).collect());
        }
    }
    None
}

/// Groups `T(g) - 1 (x) g` to first order by its second leg. The key `None`
/// collects the terms with second leg `1`; exponentials `exp(k hbar K / 8)`
/// in the second leg are expanded as `1 + (k hbar / 8) K`.
fn linearized_coaction(m: ModelId, r: &RepId, g: &MGen) -> Result<BTreeMap<Option<MGen>, MatrixRF>> {
    let mut memo = BTreeMap::new();
    let mut groups: BTreeMap<Option<MGen>, MatrixRF> = BTreeMap::new();
    let mut add = |key: Option<MGen>, m: MatrixRF| {
        let e = groups.entry(key).or_insert_with(|| MatrixRF::zero(2));
        *e = &*e + &m;
    };
    for ((a, b), c) in m.coaction(g)?.terms() {
        let first = word_image(a, 2, &mut memo, |x| rep_matrix(r, x))?.scale(c);
        match b.as_slice() {
            [] => add(None, first),
            [MGen::ExpK(k)] => {
                let step = &RationalFn::var(Var::Hbar) * &RationalFn::frac(*k as i64, 8);
                add(Some(MGen::K), first.scale(&step));
                add(None, first);
            }
            [x] => add(Some(*x), first),
            _ => {
                return Err(Error::PrerequisiteFailed(format!(
                    "coaction of {g} has a second leg of degree {} and no first-order truncation",
                    b.len()
                )))
            }
        }
    }
    let own = groups.entry(Some(*g)).or_insert_with(|| MatrixRF::zero(2));
    *own = &*own - &MatrixRF::identity(2);
    Ok(groups)
}

/// Compares `T(g)` to first order in hbar with `x (x) 1 + 1 (x) x + hbar tau(x)`
/// where `x` is the classical counterpart of `g`. The component with second
/// leg `1` is a deformation of `x` and is compared at order zero only.
pub fn semiclassical_coaction(m: ModelId, g: &MGen, w: i32) -> Result<Report> {
    let family = m.family();
    let r = RepId::of(family, Var::U, alpha());
    let ctx = m.classical_context();
    let x = m.classical(g)?;
    let tau = bi_ideal_left(&ctx, &x.embed(ctx.algebra())?, w)?.left_part();

    let gens = m.generators();
    let images: Vec<LieElement> = gens.iter().map(|h| m.classical(h)).collect::<Result<_>>()?;
    let mut slices: BTreeMap<BasisVector, Vec<(BasisVector, RationalFn)>> = BTreeMap::new();
    for ((a, b), c) in tau.terms() {
        slices.entry(*a).or_default().push((*b, c.clone()));
    }
    let mut classical: BTreeMap<Option<MGen>, MatrixRF> = BTreeMap::new();
    for (a, terms) in slices {
        let slice = LieElement::from_terms(AlgebraId::Loop, terms)?;
        let coeffs = express(&slice, &images).ok_or_else(|| {
            Error::PrerequisiteFailed(format!("second leg {slice} is not in the span of the {m} generators"))
        })?;
        let rho = basis_image(family, Var::U, &a)?;
        for (h, c) in gens.iter().zip(coeffs) {
            if !c.is_zero() {
                let e = classical.entry(Some(*h)).or_insert_with(|| MatrixRF::zero(2));
                *e = &*e + &rho.scale(&c);
            }
        }
    }

    let quantum = linearized_coaction(m, &r, g)?;
    let mut rep = Report::new(format!("semiclassical --target {g} --model {m}"))
        .with_context("model", m)
        .with_context("window", w);
    let lift = quantum.get(&None).cloned().unwrap_or_else(|| MatrixRF::zero(2)).hbar_coefficient(0)?;
    let want = classical_image(family, Var::U, &alpha(), &x)?;
    rep.record(format!("first leg of T({g}) (x) 1 is {x} mod hbar"), "T(a) = Delta(x) mod hbar", lift == want, || {
        mismatch_witness(&lift, &want)
    });
    let keys: BTreeSet<Option<MGen>> =
        quantum.keys().chain(classical.keys()).filter(|k| k.is_some()).cloned().collect();
    for key in keys {
        let h = key.expect("filtered");
        let q = quantum.get(&key).cloned().unwrap_or_else(|| MatrixRF::zero(2));
        let c = classical.get(&key).cloned().unwrap_or_else(|| MatrixRF::zero(2));
        let q0 = q.hbar_coefficient(0)?;
        rep.record(format!("T({g}) has no order-0 term (x) {h} beyond 1 (x) {g}"), "T(a) = Delta(x) mod hbar", q0.is_zero(), || {
            format!("order 0: {q0}")
        });
        let q1 = q.hbar_coefficient(1)?;
        rep.record(
            format!("order hbar of T({g}) along (x) {h} equals tau({x})"),
            "T(a) = Delta(x) + hbar tau(x) mod hbar^2",
            q1 == c,
            || format!("tau = {tau}; {}", mismatch_witness(&q1, &c)),
        );
    }
    Ok(rep)
}
