use coideal_core::costructure::{bi_ideal_left, bi_ideal_right, cocommutator, legs_in, verify_cocycle, verify_coisotropy};
use coideal_core::{
    named_element, AlgebraId, BasisVector, Context, LieElement, RationalFn, SubspaceId, Symbol, TensorElement,
    TripleId, TwistId,
};

const W: i32 = 6;

fn lp(terms: &[(i64, i64, BasisVector)]) -> LieElement {
    LieElement::from_terms(AlgebraId::Loop, terms.iter().map(|(n, d, b)| (*b, RationalFn::frac(*n, *d)))).unwrap()
}

fn e(n: i32) -> LieElement {
    lp(&[(1, 1, BasisVector::e(n))])
}
fn f(n: i32) -> LieElement {
    lp(&[(1, 1, BasisVector::f(n))])
}
fn h(n: i32) -> LieElement {
    lp(&[(1, 1, BasisVector::h(n))])
}

fn outer(c: (i64, i64), x: &LieElement, y: &LieElement) -> TensorElement {
    TensorElement::outer(x, y).unwrap().scale(&RationalFn::frac(c.0, c.1))
}

fn wedge(c: (i64, i64), x: &LieElement, y: &LieElement) -> TensorElement {
    TensorElement::wedge(x, y).unwrap().scale(&RationalFn::frac(c.0, c.1))
}

fn in_alg(x: &LieElement, alg: AlgebraId) -> LieElement {
    x.embed(alg).unwrap()
}

#[test]
fn double_cocommutators() {
    let ctx = Context::of(TripleId::D);
    let d = AlgebraId::Double;
    let cases = [
        (h(0), TensorElement::zero(AlgebraId::Loop)),
        (e(0), wedge((1, 2), &h(0), &e(0))),
        (f(0), wedge((1, 2), &h(0), &f(0))),
        (e(1), wedge((-1, 2), &h(0), &e(1))),
        (f(-1), wedge((-1, 2), &h(0), &f(-1))),
    ];
    for (x, want) in cases {
        let got = cocommutator(&ctx, &in_alg(&x, d), W).unwrap();
        assert!(got.is_skew());
        assert_eq!(got.left_part(), want, "delta({x})");
        assert_eq!(got, want.embed(d).unwrap());
    }
}

#[test]
fn half_loop_cocommutators() {
    let ctx = Context::of(TripleId::L);
    let zero = TensorElement::zero(AlgebraId::Loop);
    let cases = [
        (e(0), zero.clone()),
        (f(0), zero.clone()),
        (h(0), zero),
        (e(1), wedge((1, 1), &h(0), &e(0))),
        (f(1), wedge((1, 1), &f(0), &h(0))),
        (h(1), wedge((2, 1), &e(0), &f(0))),
    ];
    for (x, want) in cases {
        assert_eq!(cocommutator(&ctx, &x, W).unwrap(), want, "delta({x})");
    }
}

#[test]
fn invariant_twist_cocommutators() {
    let ctx = Context::twisted(TripleId::A, TwistId::SignOdd);
    let a = AlgebraId::LoopPlusH;
    let cases = [
        (h(0), TensorElement::zero(AlgebraId::Loop)),
        (e(1), outer((1, 2), &h(0), &e(1)) + outer((-1, 2), &e(1), &h(0))),
        (f(1), outer((1, 2), &f(1), &h(0)) + outer((-1, 2), &h(0), &f(1))),
    ];
    for (x, want) in cases {
        let got = cocommutator(&ctx, &in_alg(&x, a), W).unwrap();
        assert_eq!(got.left_part(), want, "delta({x})");
        assert_eq!(got, want.embed(a).unwrap());
    }
}

fn named(s: Symbol, i: Option<i32>) -> LieElement {
    named_element(s, i, AlgebraId::Loop).unwrap()
}

fn check_tau(ctx: &Context, x: &LieElement, want: &TensorElement) {
    let alg = ctx.algebra();
    let x = in_alg(x, alg);
    let got = bi_ideal_left(ctx, &x, W).unwrap();
    assert_eq!(got, want.embed(alg).unwrap(), "tau({x})");
    assert!(legs_in(ctx, &got, SubspaceId::MPlus, SubspaceId::KPlus).unwrap());
}

#[test]
fn onsager_tau() {
    let ctx = Context::twisted(TripleId::D, TwistId::Phi1);
    let a1 = named(Symbol::A, Some(1));
    let a0 = named(Symbol::A, Some(0));
    check_tau(&ctx, &a1, &outer((-1, 2), &h(0), &a1));
    check_tau(&ctx, &a0, &outer((1, 2), &h(0), &a0));
}

#[test]
fn augmented_onsager_tau() {
    let ctx = Context::twisted(TripleId::D, TwistId::Phi2);
    let k0 = named(Symbol::K, Some(0));
    check_tau(&ctx, &named(Symbol::B, Some(1)), &outer((1, 4), &(&e(1) - &e(0)), &k0));
    check_tau(&ctx, &named(Symbol::Bbar, Some(0)), &outer((-1, 4), &(&f(0) - &f(-1)), &k0));
    check_tau(&ctx, &k0, &TensorElement::zero(AlgebraId::Loop));
}

#[test]
fn sign_twist_tau() {
    let zero = TensorElement::zero(AlgebraId::Loop);
    let ctx = Context::twisted(TripleId::L, TwistId::SignOdd);
    check_tau(&ctx, &h(0), &zero);
    check_tau(&ctx, &e(1), &outer((-1, 1), &e(0), &h(0)));
    check_tau(&ctx, &f(1), &outer((1, 1), &f(0), &h(0)));

    let ctx = Context::twisted(TripleId::L, TwistId::SignEven);
    for x in [e(0), f(0), h(0)] {
        check_tau(&ctx, &x, &zero);
    }
    check_tau(&ctx, &h(2), &(outer((2, 1), &e(1), &f(0)) + outer((-2, 1), &f(1), &e(0))));
    check_tau(&ctx, &e(2), &(outer((1, 1), &h(1), &e(0)) + outer((-1, 1), &e(1), &h(0))));
    check_tau(&ctx, &f(2), &(outer((1, 1), &f(1), &h(0)) + outer((-1, 1), &h(1), &f(0))));
}

#[test]
fn right_maps_mirror_left_maps() {
    let ctx = Context::twisted(TripleId::D, TwistId::Phi1);
    let a1 = in_alg(&named(Symbol::A, Some(1)), AlgebraId::Double);
    let right = bi_ideal_right(&ctx, &a1, W).unwrap();
    assert_eq!(right.left_part(), outer((1, 2), &named(Symbol::A, Some(1)), &h(0)));
    assert_eq!(right, -&bi_ideal_left(&ctx, &a1, W).unwrap().flip());
    assert!(legs_in(&ctx, &right, SubspaceId::KPlus, SubspaceId::MPlus).unwrap());

    let ctx = Context::twisted(TripleId::L, TwistId::SignOdd);
    assert!(bi_ideal_right(&ctx, &h(0), W).unwrap().is_zero());
    let ctx = Context::twisted(TripleId::L, TwistId::SignEven);
    assert!(bi_ideal_right(&ctx, &e(0), W).unwrap().is_zero());
}

#[test]
fn bi_ideal_preconditions() {
    let ctx = Context::twisted(TripleId::L, TwistId::SignEven);
    assert!(bi_ideal_left(&ctx, &e(1), W).is_err());
    let ctx = Context::twisted(TripleId::A, TwistId::SignOdd);
    let e1 = in_alg(&e(1), AlgebraId::LoopPlusH);
    assert!(bi_ideal_left(&ctx, &e1, W).is_err());
}

#[test]
fn cocycle_on_generators() {
    let cases = [
        (Context::of(TripleId::L), vec![e(0), f(0), h(0), e(1), f(1), h(1)]),
        (Context::of(TripleId::D), vec![e(0), f(0), h(0), e(1), f(-1)]),
    ];
    for (ctx, gens) in cases {
        let gens: Vec<_> = gens.iter().map(|g| in_alg(g, ctx.algebra())).collect();
        for x in &gens {
            for y in &gens {
                let r = verify_cocycle(&ctx, x, y, W).unwrap();
                assert!(r.passed(), "{}", r.to_text());
            }
        }
    }
}

#[test]
fn onsager_generators_are_coisotropic() {
    let ctx = Context::twisted(TripleId::D, TwistId::Phi1);
    for i in [0, 1] {
        let a = in_alg(&named(Symbol::A, Some(i)), AlgebraId::Double);
        let r = verify_coisotropy(&ctx, &a, W).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
