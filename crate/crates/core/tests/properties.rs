use coideal_core::costructure::cocommutator;
use coideal_core::lie::bracket_basis;
use coideal_core::{AlgebraId, BasisVector, Context, Kind, LieElement, RationalFn, SubspaceId, TripleId, Var};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config() -> Config {
    Config { cases: 128, rng_seed: RngSeed::Fixed(0x00c0_1dea), failure_persistence: None, ..Config::default() }
}

fn laurent() -> impl Strategy<Value = RationalFn> {
    let term = (-3i64..=3, prop::sample::select(vec![Var::S, Var::Hbar, Var::U, Var::Alpha]), -2i32..=2);
    prop::collection::vec(term, 1..4).prop_map(|terms| {
        terms.into_iter().fold(RationalFn::zero(), |acc, (c, v, e)| &acc + &(&RationalFn::int(c) * &RationalFn::var_pow(v, e)))
    })
}

fn rational() -> impl Strategy<Value = RationalFn> {
    (laurent(), laurent()).prop_filter_map("zero denominator", |(n, d)| n.checked_div(&d).ok())
}

fn nonzero() -> impl Strategy<Value = RationalFn> {
    rational().prop_filter("zero", |x| !x.is_zero())
}

fn kind() -> impl Strategy<Value = Kind> {
    prop::sample::select(vec![Kind::E, Kind::F, Kind::H])
}

fn basis(modes: i32) -> impl Strategy<Value = BasisVector> {
    (kind(), -modes..=modes).prop_map(|(k, n)| match k {
        Kind::E => BasisVector::e(n),
        Kind::F => BasisVector::f(n),
        Kind::H => BasisVector::h(n),
    })
}

fn element(modes: i32) -> impl Strategy<Value = LieElement> {
    prop::collection::vec((basis(modes), -4i64..=4), 1..5).prop_map(|terms| {
        LieElement::from_terms(AlgebraId::Loop, terms.into_iter().map(|(b, c)| (b, RationalFn::int(c)))).unwrap()
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational(), d in nonzero()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &RationalFn::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&d * &d.inv().unwrap(), RationalFn::one());
        prop_assert_eq!(&(&a * &d).checked_div(&d).unwrap(), &a);
    }

    #[test]
    fn bracket_is_antisymmetric(x in element(4), y in element(4)) {
        let xy = x.bracket(&y).unwrap();
        let yx = y.bracket(&x).unwrap();
        prop_assert!((&xy + &yx).is_zero());
        prop_assert!(x.bracket(&x).unwrap().is_zero());
    }

    #[test]
    fn jacobi_identity(x in element(3), y in element(3), z in element(3)) {
        let a = x.bracket(&y.bracket(&z).unwrap()).unwrap();
        let b = y.bracket(&z.bracket(&x).unwrap()).unwrap();
        let c = z.bracket(&x.bracket(&y).unwrap()).unwrap();
        prop_assert!((&(&a + &b) + &c).is_zero());
    }

    #[test]
    fn bracket_respects_the_loop_grading(a in basis(8), b in basis(8)) {
        if let Some((k, v)) = bracket_basis(&a, &b) {
            prop_assert_ne!(k, 0);
            prop_assert_eq!(v.mode, a.mode + b.mode);
        }
    }

    #[test]
    fn cocommutator_is_window_stable(picks in prop::collection::vec((0usize..64, -3i64..=3), 1..4), on_double in any::<bool>()) {
        let ctx = Context::of(if on_double { TripleId::D } else { TripleId::L });
        let family = ctx.family(SubspaceId::PPlus, 2).unwrap();
        let x = picks.iter().fold(LieElement::zero(ctx.algebra()), |acc, (i, c)| {
            acc.try_add(&family[i % family.len()].scale(&RationalFn::int(*c))).unwrap()
        });
        let narrow = cocommutator(&ctx, &x, 4).unwrap();
        let wide = cocommutator(&ctx, &x, 6).unwrap();
        prop_assert_eq!(narrow, wide);
    }
}
