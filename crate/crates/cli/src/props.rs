//! Seeded random spot checks of the algebraic laws, for `report --all`.

use coideal_core::costructure::cocommutator;
use coideal_core::lie::bracket_basis;
use coideal_core::{AlgebraId, BasisVector, Context, Kind, LieElement, RationalFn, Report, SubspaceId, TripleId, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dsl::{parse_expr, ElementExpr, GenRef};

fn scalar(rng: &mut ChaCha8Rng) -> RationalFn {
    let vars = [Var::S, Var::Hbar, Var::U];
    let mut poly = || {
        (0..rng.gen_range(1..4)).fold(RationalFn::zero(), |acc, _| {
            let v = vars[rng.gen_range(0..vars.len())];
            &acc + &(&RationalFn::int(rng.gen_range(-3..=3)) * &RationalFn::var_pow(v, rng.gen_range(-2..=2)))
        })
    };
    let num = poly();
    let den = poly();
    num.checked_div(&den).unwrap_or(num)
}

fn basis(rng: &mut ChaCha8Rng, modes: i32) -> BasisVector {
    let n = rng.gen_range(-modes..=modes);
    match rng.gen_range(0..3) {
        0 => BasisVector::e(n),
        1 => BasisVector::f(n),
        _ => BasisVector::h(n),
    }
}

fn element(rng: &mut ChaCha8Rng, modes: i32) -> LieElement {
    let terms: Vec<_> = (0..rng.gen_range(1..5)).map(|_| (basis(rng, modes), RationalFn::int(rng.gen_range(-4..=4)))).collect();
    LieElement::from_terms(AlgebraId::Loop, terms).expect("loop basis")
}

fn expr(rng: &mut ChaCha8Rng) -> ElementExpr {
    let names = ["e[2]", "f[-1]", "h[0]", "A[1]", "G[2]", "B[0]", "Bbar[1]", "K[3]", "Astar", "Bstar", "X+0", "X-1", "H1", "J(e)", "E"];
    let terms = (0..rng.gen_range(1..4))
        .map(|_| {
            let g: GenRef = crate::dsl::parse_generator(names[rng.gen_range(0..names.len())]).expect("valid name");
            let c = if rng.gen_bool(0.5) { RationalFn::frac(rng.gen_range(-5..=5), rng.gen_range(1..=4)) } else { scalar(rng) };
            (c, g)
        })
        .filter(|(c, _)| !c.is_zero())
        .collect();
    ElementExpr { terms }
}

/// Runs `n` random instances of each law.
pub fn property_report(seed: u64, n: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new(format!("properties --seed {seed}")).with_context("instances", n);

    let mut bad = None;
    for _ in 0..n {
        let (a, b, c) = (scalar(&mut rng), scalar(&mut rng), scalar(&mut rng));
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (a.is_zero() || &a * &a.inv().expect("nonzero") == RationalFn::one());
        if !ok {
            bad = Some(format!("a = {a}, b = {b}, c = {c}"));
            break;
        }
    }
    rep.record(format!("field laws on {n} random triples"), "commutative field axioms", bad.is_none(), || bad.unwrap());

    let mut bad = None;
    for _ in 0..n {
        let (x, y, z) = (element(&mut rng, 3), element(&mut rng, 3), element(&mut rng, 3));
        let br = |p: &LieElement, q: &LieElement| p.bracket(q).expect("same algebra");
        let anti = (&br(&x, &y) + &br(&y, &x)).is_zero();
        let jacobi = (&(&br(&x, &br(&y, &z)) + &br(&y, &br(&z, &x))) + &br(&z, &br(&x, &y))).is_zero();
        if !(anti && jacobi) {
            bad = Some(format!("x = {x}, y = {y}, z = {z}"));
            break;
        }
    }
    rep.record(format!("antisymmetry and Jacobi on {n} random triples"), "[x,y] = -[y,x]; cyclic sum of [x,[y,z]] = 0", bad.is_none(), || {
        bad.unwrap()
    });

    let mut bad = None;
    for _ in 0..n {
        let (a, b) = (basis(&mut rng, 8), basis(&mut rng, 8));
        if let Some((_, v)) = bracket_basis(&a, &b) {
            if v.mode != a.mode + b.mode || (a.kind == Kind::H && b.kind == Kind::H) {
                bad = Some(format!("[{a:?}, {b:?}] = {v:?}"));
                break;
            }
        }
    }
    rep.record(format!("loop grading on {n} random pairs"), "[x_m, y_n] has mode m + n", bad.is_none(), || bad.unwrap());

    let mut bad = None;
    for _ in 0..n {
        let e = expr(&mut rng);
        let text = e.render();
        match parse_expr(&text) {
            Ok(back) if back == e => {}
            other => {
                bad = Some(format!("{text} parsed as {other:?}"));
                break;
            }
        }
    }
    rep.record(format!("parser round trip on {n} random expressions"), "parse(render(x)) = x", bad.is_none(), || bad.unwrap());

    let contexts = [Context::of(TripleId::D), Context::of(TripleId::L)];
    let families: Vec<Vec<LieElement>> =
        contexts.iter().map(|c| c.family(SubspaceId::PPlus, 2).expect("p+ family")).collect();
    let mut bad = None;
    for _ in 0..n {
        let which = rng.gen_range(0..contexts.len());
        let (ctx, family) = (&contexts[which], &families[which]);
        let x = (0..rng.gen_range(1..4)).fold(LieElement::zero(ctx.algebra()), |acc, _| {
            let b = &family[rng.gen_range(0..family.len())];
            acc.try_add(&b.scale(&RationalFn::int(rng.gen_range(-3..=3)))).expect("same algebra")
        });
        let narrow = cocommutator(ctx, &x, 4);
        let wide = cocommutator(ctx, &x, 6);
        if narrow.is_err() || narrow != wide {
            bad = Some(format!("delta({x}) at windows 4 and 6: {narrow:?} vs {wide:?}"));
            break;
        }
    }
    rep.record(format!("window stability of delta on {n} random elements"), "result unchanged from window w to w + 2", bad.is_none(), || {
        bad.unwrap()
    });
    rep
}
