//! Cocommutators and bi-ideal maps obtained by dualizing brackets through the
//! invariant form.
//!
//! Every sum runs over a finite family of basis vectors of the dual side. The
//! result is recomputed with the window enlarged by two and the two answers
//! must agree; since brackets and pairings respect the mode grading this
//! certifies that no contribution was missed.

mod tensor;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::{bracket_basis, BasisVector, LieElement};
use crate::manin::{pair_basis, Context, PairingId, PartnerIndex, SubspaceId};
use crate::report::Report;
use crate::scalar::{q, RationalFn};
use crate::twist::{classify, Classification};

pub use tensor::TensorElement;

/// The linear functional `z -> <x, z>` as a sparse map on basis vectors.
fn functional(form: PairingId, x: &LieElement, support: &[BasisVector]) -> BTreeMap<BasisVector, RationalFn> {
    let mut out = BTreeMap::new();
    for z in support {
        let mut acc = RationalFn::zero();
        for (a, c) in x.terms() {
            let v = pair_basis(form, a, z);
            if v != 0 {
                acc = &acc + &c.scale(&q(v));
            }
        }
        if !acc.is_zero() {
            out.insert(*z, acc);
        }
    }
    out
}

fn eval(f: &BTreeMap<BasisVector, RationalFn>, a: &LieElement, b: &LieElement) -> RationalFn {
    let mut acc = RationalFn::zero();
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            if let Some((k, w)) = bracket_basis(u, v) {
                if let Some(fw) = f.get(&w) {
                    acc = &acc + &(&(cu * cv) * fw).scale(&q(k));
                }
            }
        }
    }
    acc
}

/// Family members together with `partner / <member, partner>`.
fn with_duals(ctx: &Context, sub: SubspaceId, partners: SubspaceId, window: i32) -> Result<Vec<(LieElement, LieElement)>> {
    let pool = ctx.family(partners, window + 2)?;
    let index = PartnerIndex::new(ctx.form(), &pool);
    ctx.family(sub, window)?
        .into_iter()
        .map(|b| {
            let (p, lambda) = index.partner(&b)?;
            Ok((b, p.scale(&lambda.inv()?)))
        })
        .collect()
}

/// `sum <x, [a, b]> dual(a) (x) dual(b)` over `a` in `left`, `b` in `right`,
/// both taken from the closure window `window`.
fn duality_sum(
    ctx: &Context,
    x: &LieElement,
    left: (SubspaceId, SubspaceId),
    right: (SubspaceId, SubspaceId),
    window: i32,
) -> Result<TensorElement> {
    let ls = with_duals(ctx, left.0, left.1, window)?;
    let rs = if left == right { ls.clone() } else { with_duals(ctx, right.0, right.1, window)? };
    let support: Vec<BasisVector> = ctx.algebra().basis(2 * window + 2);
    let f = functional(ctx.form(), x, &support);
    let mut out = TensorElement::zero(ctx.algebra());
    for (a, da) in &ls {
        for (b, db) in &rs {
            let c = eval(&f, a, b);
            if !c.is_zero() {
                out.add_outer(da, db, &c);
            }
        }
    }
    Ok(out)
}

fn stable<F>(w: i32, compute: F) -> Result<TensorElement>
where
    F: Fn(i32) -> Result<TensorElement>,
{
    let a = compute(2 * w)?;
    let b = compute(2 * (w + 2))?;
    if a == b {
        Ok(a)
    } else {
        Err(Error::WindowUnstable(w as u32, (w + 2) as u32))
    }
}

/// The `+` and `-` halves a context dualizes between.
fn halves(ctx: &Context) -> Result<(SubspaceId, SubspaceId)> {
    match ctx.twist {
        None => Ok((SubspaceId::PPlus, SubspaceId::PMinus)),
        Some(t) => {
            let (class, _) = classify(t, ctx.triple, 2);
            if class != Classification::Invariant {
                return Err(Error::PrerequisiteFailed(format!("{t} is not an invariant twist of {}", ctx.triple.name())));
            }
            Ok((SubspaceId::KPlus, SubspaceId::KMinus))
        }
    }
}

/// Cocommutator of `x`. Without a twist the triple itself is dualized; with an
/// invariant twist the induced triple `(k, k+, k-)` is used instead.
pub fn cocommutator(ctx: &Context, x: &LieElement, w: i32) -> Result<TensorElement> {
    let (plus, minus) = halves(ctx)?;
    if !ctx.member(plus, x)? {
        return Err(Error::PrerequisiteFailed(format!("{x} is not in {plus:?}")));
    }
    stable(w, |win| duality_sum(ctx, x, (minus, plus), (minus, plus), win))
}

fn check_bi_ideal(ctx: &Context, x: &LieElement) -> Result<()> {
    let t = ctx
        .twist
        .ok_or_else(|| Error::PrerequisiteFailed("bi-ideal maps need a twist".into()))?;
    let (class, _) = classify(t, ctx.triple, 2);
    if class != Classification::AntiInvariant {
        return Err(Error::PrerequisiteFailed(format!("{t} is not an anti-invariant twist of {}", ctx.triple.name())));
    }
    if !ctx.member(SubspaceId::KPlus, x)? {
        return Err(Error::PrerequisiteFailed(format!("{x} is not fixed by {t} inside p+")));
    }
    Ok(())
}

/// Left bi-ideal map `k+ -> m+ (x) k+`, dual to the action of `k-` on `m-`.
pub fn bi_ideal_left(ctx: &Context, x: &LieElement, w: i32) -> Result<TensorElement> {
    check_bi_ideal(ctx, x)?;
    stable(w, |win| {
        duality_sum(
            ctx,
            x,
            (SubspaceId::KMinus, SubspaceId::MPlus),
            (SubspaceId::MMinus, SubspaceId::KPlus),
            win,
        )
    })
}

/// Right bi-ideal map `k+ -> k+ (x) m+`.
pub fn bi_ideal_right(ctx: &Context, x: &LieElement, w: i32) -> Result<TensorElement> {
    check_bi_ideal(ctx, x)?;
    stable(w, |win| {
        duality_sum(
            ctx,
            x,
            (SubspaceId::MMinus, SubspaceId::KPlus),
            (SubspaceId::KMinus, SubspaceId::MPlus),
            win,
        )
    })
}

/// Whether every first leg of `t` lies in `first` and every second leg in `second`.
pub fn legs_in(ctx: &Context, t: &TensorElement, first: SubspaceId, second: SubspaceId) -> Result<bool> {
    for s in t.first_leg_slices() {
        if !ctx.member(first, &s)? {
            return Ok(false);
        }
    }
    for s in t.second_leg_slices() {
        if !ctx.member(second, &s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `delta([x,y]) = x.delta(y) - y.delta(x)`.
pub fn verify_cocycle(ctx: &Context, x: &LieElement, y: &LieElement, w: i32) -> Result<Report> {
    let mut rep = Report::new(format!("cocycle {x}, {y}"))
        .with_context("triple", ctx.triple.name())
        .with_context("window", w);
    let dx = cocommutator(ctx, x, w)?;
    let dy = cocommutator(ctx, y, w)?;
    let dxy = cocommutator(ctx, &x.bracket(y)?, w)?;
    let rhs = &dy.act(x)? - &dx.act(y)?;
    rep.record(
        format!("cocycle for ({x}, {y})"),
        "delta([x,y]) = x.delta(y) - y.delta(x)",
        dxy == rhs,
        || format!("lhs = {dxy}\nrhs = {rhs}"),
    );
    Ok(rep)
}

/// For `x` in `k+`, checks that the cocommutator of the ambient triple agrees
/// with `tau + tau'` modulo `k+ (x) k+`.
pub fn verify_coisotropy(ctx: &Context, x: &LieElement, w: i32) -> Result<Report> {
    let t = ctx.twist.ok_or_else(|| Error::PrerequisiteFailed("coisotropy needs a twist".into()))?;
    let plain = Context::new(ctx.triple, None);
    let delta = cocommutator(&plain, x, w)?;
    let tau = bi_ideal_left(ctx, x, w)?;
    let tau_r = bi_ideal_right(ctx, x, w)?;
    let diff = &(&delta - &tau) - &tau_r;
    let in_kk = diff.twist_legs(t, true, false) == diff && diff.twist_legs(t, false, true) == diff;
    let mut rep = Report::new(format!("coisotropy {x}")).with_context("twist", t);
    rep.record(
        format!("delta({x}) = tau + tau' mod k+ (x) k+"),
        "delta(x) - tau(x) - tau'(x) in k+ (x) k+",
        in_kk,
        || format!("delta - tau - tau' = {diff}"),
    );
    Ok(rep)
}
