//! Criterion benchmarks for the hot kernels: rational-function arithmetic,
//! the duality solver, the intertwiner solver, the R-matrix identities and
//! the element parser.

use std::hint::black_box;

use coideal_cli::dsl::parse_expr;
use coideal_core::costructure::{bi_ideal_left, cocommutator};
use coideal_core::quantum::{solve_intertwiner, verify_reflection, verify_yang_baxter, stated_k_matrix, RKind};
use coideal_core::scalar::gcd;
use coideal_core::{
    named_element, AlgebraId, BasisVector, Context, LieElement, ModelId, RationalFn, RepId, Symbol, TripleId,
    TwistId, Var,
};
use criterion::Criterion;

fn v(x: Var) -> RationalFn {
    RationalFn::var(x)
}

pub fn scalars(c: &mut Criterion) {
    let (s, h, u) = (v(Var::S), v(Var::Hbar), v(Var::U));
    let a = (&(&s * &h) - &RationalFn::frac(1, 2)).checked_div(&(&(&s * &u) + &h)).unwrap();
    let b = (&u - &s).checked_div(&(&(&h * &h) + &u)).unwrap();
    c.bench_function("rational add and multiply", |bench| {
        bench.iter(|| {
            let sum = black_box(&a) + black_box(&b);
            &sum * &a
        })
    });

    let f1 = &(&(&h * &h) * &(&u * &u)) - &(&u * &u);
    let f2 = &(&s * &(&h * &h)) - &(&RationalFn::int(3) * &(&s * &u));
    let p = (&f1 * &f2).numer().clone();
    let q = (&f2 * &(&(&s * &h) + &u)).numer().clone();
    c.bench_function("multivariate gcd", |bench| bench.iter(|| gcd(black_box(&p), black_box(&q))));
}

pub fn lie(c: &mut Criterion) {
    let d = Context::of(TripleId::D);
    let e1 = LieElement::from_terms(AlgebraId::Loop, [(BasisVector::e(1), RationalFn::one())])
        .unwrap()
        .embed(AlgebraId::Double)
        .unwrap();
    c.bench_function("cocommutator on D", |bench| bench.iter(|| cocommutator(&d, black_box(&e1), 6).unwrap()));

    let phi1 = Context::twisted(TripleId::D, TwistId::Phi1);
    let a1 = named_element(Symbol::A, Some(1), AlgebraId::Loop).unwrap().embed(AlgebraId::Double).unwrap();
    c.bench_function("bi-ideal map under phi1", |bench| bench.iter(|| bi_ideal_left(&phi1, black_box(&a1), 6).unwrap()));
}

pub fn quantum(c: &mut Criterion) {
    let m = ModelId::QOnsager;
    let rep = RepId::uhl(Var::U, m.stated_alpha());
    c.bench_function("intertwiner for qonsager", |bench| {
        bench.iter(|| solve_intertwiner(m, black_box(&rep), m.involution()).unwrap())
    });
    c.bench_function("trig Yang-Baxter", |bench| bench.iter(|| verify_yang_baxter(RKind::Trig)));
    let k = stated_k_matrix(m);
    c.bench_function("trig reflection equation", |bench| {
        bench.iter(|| verify_reflection(RKind::Trig, black_box(&k), Var::U).unwrap())
    });
}

pub fn parser(c: &mut Criterion) {
    let text = "((s^2 - hbar)/(u + 1))*A[1] - 3/4*Bbar[0] + (alpha*u^-1)*X+0 + J(e)";
    c.bench_function("parse element", |bench| bench.iter(|| parse_expr(black_box(text)).unwrap()));
}
