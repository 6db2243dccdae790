//! Acceptance suite: one PASS/FAIL line per criterion, followed by the items
//! that failed. The process exits non-zero only when the set of failing items
//! differs from `KNOWN_FAILURES`, so a regression or an unexpected fix both
//! show up.

use std::collections::BTreeSet;
use std::process::ExitCode;

use coideal_core::costructure::{bi_ideal_left, cocommutator, legs_in, verify_cocycle};
use coideal_core::lie::{verify_presentation, RelationSet};
use coideal_core::manin::verify_triple;
use coideal_core::quantum::{
    match_stated, semiclassical_coaction, semiclassical_coproduct, solve_intertwiner, stated_k_matrix,
    verify_relations, verify_reflection, verify_yang_baxter, Family, KMatch, RKind, RelContext,
};
use coideal_core::twist::{classify, verify_symmetric_space};
use coideal_core::{
    named_element, AlgebraId, BasisVector, Classification, Context, LieElement, ModelId, PairingId, RationalFn,
    RepId, Report, SubspaceId, Symbol, TensorElement, Triple, TripleId, TwistId, Var,
};

const W: i32 = 6;
const SEED: u64 = 0x5eed_0001;

/// Items expected to fail, each analysed in the project notes:
/// the two deformed augmented relations hold with `-rho` in place of `rho`,
/// and the displayed `alpha` for AugQOnsager and YPlus is not a root of the
/// intertwiner condition (the roots are `s^-2` and `hbar/2`).
const KNOWN_FAILURES: [&str; 6] = [
    "6: tensor coaction aug-qonsager: [B*, [B*, [B*, B]_(h)]_(-h)] = rho B* (e^(hK/2) - e^(-hK/2)) B*",
    "6: tensor coaction aug-qonsager: [B, [B, [B, B*]_(h)]_(-h)] = -rho B (e^(hK/2) - e^(-hK/2)) B",
    "7: aug-qonsager: 1-dimensional at the displayed alpha",
    "7: aug-qonsager: matches the displayed K at the displayed alpha",
    "7: yplus: 1-dimensional at the displayed alpha",
    "7: yplus: matches the displayed K at the displayed alpha",
];

type Criterion = fn() -> Items;

#[derive(Default)]
struct Items(Vec<(String, bool)>);

impl Items {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.0.push((name.into(), ok));
    }

    fn report(&mut self, prefix: &str, rep: &Report) {
        for c in &rep.checks {
            self.check(format!("{prefix}: {}", c.name), c.passed());
        }
    }

    fn result<T>(&mut self, name: impl Into<String>, r: coideal_core::Result<T>) -> Option<T> {
        let name = name.into();
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(format!("{name} ({e})"), false);
                None
            }
        }
    }
}

fn lp(c: (i64, i64), b: BasisVector) -> LieElement {
    LieElement::from_terms(AlgebraId::Loop, [(b, RationalFn::frac(c.0, c.1))]).unwrap()
}

fn e(n: i32) -> LieElement {
    lp((1, 1), BasisVector::e(n))
}
fn f(n: i32) -> LieElement {
    lp((1, 1), BasisVector::f(n))
}
fn h(n: i32) -> LieElement {
    lp((1, 1), BasisVector::h(n))
}

fn outer(c: (i64, i64), x: &LieElement, y: &LieElement) -> TensorElement {
    TensorElement::outer(x, y).unwrap().scale(&RationalFn::frac(c.0, c.1))
}

fn wedge(c: (i64, i64), x: &LieElement, y: &LieElement) -> TensorElement {
    TensorElement::wedge(x, y).unwrap().scale(&RationalFn::frac(c.0, c.1))
}

fn named(s: Symbol, i: i32) -> LieElement {
    named_element(s, Some(i), AlgebraId::Loop).unwrap()
}

fn manin_triples() -> Items {
    let mut it = Items::default();
    for id in [TripleId::D, TripleId::L, TripleId::A] {
        it.report(&format!("triple {id}"), &verify_triple(Triple::new(id), W));
    }
    let control = verify_triple(Triple::with_form(TripleId::L, PairingId::LoopForm), W);
    it.check(
        "negative control (L, LoopForm) fails isotropy",
        control.failures().any(|c| c.name.contains("isotrop")),
    );
    it
}

fn twists() -> Items {
    let mut it = Items::default();
    let cases = [
        (TwistId::Phi1, TripleId::D, Classification::AntiInvariant),
        (TwistId::Phi2, TripleId::D, Classification::AntiInvariant),
        (TwistId::SignOdd, TripleId::A, Classification::Invariant),
        (TwistId::SignOdd, TripleId::L, Classification::AntiInvariant),
        (TwistId::SignEven, TripleId::L, Classification::AntiInvariant),
    ];
    for (t, id, want) in cases {
        let (class, _) = classify(t, Triple::new(id), W);
        it.check(format!("{t} on {id} is {want:?}"), class == want);
        if let Some(rep) = it.result(format!("{t} on {id}"), verify_symmetric_space(t, Triple::new(id), W)) {
            it.report(&format!("{t} on {id}"), &rep);
        }
    }
    it
}

fn presentations() -> Items {
    let mut it = Items::default();
    for set in RelationSet::ALL {
        let range = if set == RelationSet::AugOnsager { 3 } else { 4 };
        let rep = verify_presentation(set, range);
        it.check(format!("{set} is non-empty"), !rep.checks.is_empty());
        it.report(&set.to_string(), &rep);
    }
    it
}

fn cocommutators() -> Items {
    let mut it = Items::default();
    let zero = TensorElement::zero(AlgebraId::Loop);
    let groups = [
        (
            Context::of(TripleId::D),
            vec![
                (h(0), zero.clone()),
                (e(0), wedge((1, 2), &h(0), &e(0))),
                (f(0), wedge((1, 2), &h(0), &f(0))),
                (e(1), wedge((-1, 2), &h(0), &e(1))),
                (f(-1), wedge((-1, 2), &h(0), &f(-1))),
            ],
        ),
        (
            Context::of(TripleId::L),
            vec![
                (e(1), wedge((1, 1), &h(0), &e(0))),
                (f(1), wedge((1, 1), &f(0), &h(0))),
                (h(1), wedge((2, 1), &e(0), &f(0))),
                (e(0), zero.clone()),
            ],
        ),
        (
            Context::twisted(TripleId::A, TwistId::SignOdd),
            vec![
                (h(0), zero.clone()),
                (e(1), &outer((1, 2), &h(0), &e(1)) + &outer((-1, 2), &e(1), &h(0))),
                (f(1), &outer((1, 2), &f(1), &h(0)) + &outer((-1, 2), &h(0), &f(1))),
            ],
        ),
    ];
    for (ctx, cases) in &groups {
        let alg = ctx.algebra();
        for (x, want) in cases {
            let x = x.embed(alg).unwrap();
            let label = format!("{}: delta({x})", ctx.triple.name());
            if let Some(got) = it.result(label.clone(), cocommutator(ctx, &x, W)) {
                it.check(label, got == want.embed(alg).unwrap());
            }
        }
    }
    for ctx in [Context::of(TripleId::D), Context::of(TripleId::L)] {
        let gens = match ctx.triple.id {
            TripleId::D => vec![e(0), f(0), h(0), e(1), f(-1)],
            _ => vec![e(0), f(0), h(0), e(1), f(1), h(1)],
        };
        let gens: Vec<_> = gens.iter().map(|g| g.embed(ctx.algebra()).unwrap()).collect();
        let mut ok = true;
        for x in &gens {
            for y in &gens {
                ok &= verify_cocycle(&ctx, x, y, W).is_ok_and(|r| r.passed());
            }
        }
        it.check(format!("{}: cocycle on all generator pairs", ctx.triple.name()), ok);
    }
    it
}

fn bi_ideals() -> Items {
    let mut it = Items::default();
    let zero = TensorElement::zero(AlgebraId::Loop);
    let k0 = named(Symbol::K, 0);
    let a1 = named(Symbol::A, 1);
    let a0 = named(Symbol::A, 0);
    let groups = [
        (
            Context::twisted(TripleId::D, TwistId::Phi1),
            vec![(a1.clone(), outer((-1, 2), &h(0), &a1)), (a0.clone(), outer((1, 2), &h(0), &a0))],
        ),
        (
            Context::twisted(TripleId::D, TwistId::Phi2),
            vec![
                (named(Symbol::B, 1), outer((1, 4), &(&e(1) - &e(0)), &k0)),
                (named(Symbol::Bbar, 0), outer((-1, 4), &(&f(0) - &f(-1)), &k0)),
                (k0.clone(), zero.clone()),
            ],
        ),
        (
            Context::twisted(TripleId::L, TwistId::SignOdd),
            vec![
                (h(0), zero.clone()),
                (e(1), outer((-1, 1), &e(0), &h(0))),
                (f(1), outer((1, 1), &f(0), &h(0))),
            ],
        ),
        (
            Context::twisted(TripleId::L, TwistId::SignEven),
            vec![
                (e(0), zero.clone()),
                (f(0), zero.clone()),
                (h(0), zero.clone()),
                (h(2), &outer((2, 1), &e(1), &f(0)) + &outer((-2, 1), &f(1), &e(0))),
                (e(2), &outer((1, 1), &h(1), &e(0)) + &outer((-1, 1), &e(1), &h(0))),
                (f(2), &outer((1, 1), &f(1), &h(0)) + &outer((-1, 1), &h(1), &f(0))),
            ],
        ),
    ];
    for (ctx, cases) in &groups {
        let alg = ctx.algebra();
        let twist = ctx.twist.expect("twisted context");
        for (x, want) in cases {
            let x = x.embed(alg).unwrap();
            let label = format!("{twist}: tau({x})");
            if let Some(got) = it.result(label.clone(), bi_ideal_left(ctx, &x, W)) {
                it.check(label.clone(), got == want.embed(alg).unwrap());
                let legs = legs_in(ctx, &got, SubspaceId::MPlus, SubspaceId::KPlus).unwrap_or(false);
                it.check(format!("{label} lies in m+ (x) k+"), legs);
            }
        }
    }
    it
}

fn rep(m: ModelId, alpha: RationalFn) -> RepId {
    RepId::of(m.family(), Var::U, alpha)
}

fn quantum_relations() -> Items {
    let mut it = Items::default();
    for family in [Family::UhL, Family::Yangian] {
        let r1 = RepId::of(family, Var::U, RationalFn::var(Var::Alpha));
        let r2 = r1.at(Var::V);
        for ctx in [RelContext::SingleRep(r1.clone()), RelContext::CoproductPair(r1, r2)] {
            if let Some(rep) = it.result(ctx.describe(), verify_relations(&ctx)) {
                it.report(&ctx.describe(), &rep);
            }
        }
    }
    for m in ModelId::ALL {
        let r1 = rep(m, RationalFn::var(Var::Alpha));
        let ctx = RelContext::TensorCoaction(m, r1.clone(), r1.at(Var::V));
        if let Some(rep) = it.result(format!("tensor coaction {m}"), verify_relations(&ctx)) {
            it.report(&format!("tensor coaction {m}"), &rep);
        }
    }
    it
}

fn r_kind(m: ModelId) -> RKind {
    match m.family() {
        Family::UhL => RKind::Trig,
        Family::Yangian => RKind::Rational,
    }
}

fn k_matrices() -> Items {
    let mut it = Items::default();
    for m in ModelId::ALL {
        let sol = solve_intertwiner(m, &rep(m, m.stated_alpha()), m.involution());
        let Some(sol) = it.result(format!("{m}: intertwiner"), sol) else { continue };
        it.check(format!("{m}: 1-dimensional at the displayed alpha"), sol.dim() == 1);
        let matched = sol.dim() == 1 && match_stated(m, &sol.basis[0]) != KMatch::None;
        it.check(format!("{m}: matches the displayed K at the displayed alpha"), matched);
    }
    let roots = [
        (ModelId::AugQOnsager, RationalFn::var_pow(Var::S, -2), KMatch::Relabeled),
        (ModelId::YPlus, &RationalFn::var(Var::Hbar) * &RationalFn::frac(1, 2), KMatch::Direct),
    ];
    for (m, alpha, want) in roots {
        let label = format!("{m}: matches the displayed K at the computed root alpha = {alpha}");
        if let Some(sol) = it.result(label.clone(), solve_intertwiner(m, &rep(m, alpha), m.involution())) {
            it.check(label, sol.dim() == 1 && match_stated(m, &sol.basis[0]) == want);
        }
    }
    for m in [ModelId::YPlus, ModelId::AugQOnsager] {
        let label = format!("{m}: generic alpha probe is 0-dimensional");
        if let Some(sol) = it.result(label.clone(), solve_intertwiner(m, &rep(m, RationalFn::int(7)), m.involution())) {
            it.check(label, sol.dim() == 0);
        }
    }
    for m in ModelId::ALL {
        let label = format!("{m}: displayed K");
        if let Some(rep) = it.result(label.clone(), verify_reflection(r_kind(m), &stated_k_matrix(m), Var::U)) {
            it.report(&label, &rep);
        }
    }
    for kind in [RKind::Trig, RKind::Rational] {
        it.report(&format!("{} R-matrix", kind.name()), &verify_yang_baxter(kind));
    }
    it
}

fn semiclassical() -> Items {
    let mut it = Items::default();
    for family in [Family::UhL, Family::Yangian] {
        for g in family.generators() {
            if let Some(rep) = it.result(format!("coproduct {g}"), semiclassical_coproduct(&g, W)) {
                it.report(&format!("coproduct {g}"), &rep);
            }
        }
    }
    for m in [ModelId::QOnsager, ModelId::AugQOnsager, ModelId::YPlus] {
        for g in m.generators() {
            if let Some(rep) = it.result(format!("coaction {m} {g}"), semiclassical_coaction(m, &g, W)) {
                it.report(&format!("coaction {m} {g}"), &rep);
            }
        }
    }
    it
}

fn properties() -> Items {
    let mut it = Items::default();
    let rep = coideal_cli::props::property_report(SEED, 100);
    // Antisymmetry and Jacobi share one entry.
    it.check("all property families ran", rep.checks.len() == 5);
    it.report("properties", &rep);
    it
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("Manin triples and the negative control", manin_triples),
        ("twist classification and symmetric spaces", twists),
        ("classical presentations", presentations),
        ("cocommutators and the cocycle condition", cocommutators),
        ("bi-ideal maps and leg membership", bi_ideals),
        ("quantum representation and coaction relations", quantum_relations),
        ("K-matrices, reflection and Yang-Baxter equations", k_matrices),
        ("semiclassical limits", semiclassical),
        ("property suites", properties),
    ];
    let mut failed = BTreeSet::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        let items = run();
        let bad: Vec<&String> = items.0.iter().filter(|(_, ok)| !ok).map(|(name, _)| name).collect();
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {n}: {status} - {title} ({} items, {} failed)", items.0.len(), bad.len());
        for name in bad {
            println!("    failed: {name}");
            failed.insert(format!("{n}: {name}"));
        }
    }
    let known: BTreeSet<String> = KNOWN_FAILURES.iter().map(|s| s.to_string()).collect();
    if failed == known {
        println!("acceptance: failures match the {} known items", known.len());
        ExitCode::SUCCESS
    } else {
        for s in failed.difference(&known) {
            println!("unexpected failure: {s}");
        }
        for s in known.difference(&failed) {
            println!("known failure now passes: {s}");
        }
        ExitCode::FAILURE
    }
}
