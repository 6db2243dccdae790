//! Checks that the named generators satisfy the relations of the classical
//! presentations. Both sides are computed from the defining combinations.

use std::fmt;
use std::str::FromStr;

use super::{named_element, AlgebraId, Kind, LieElement, Symbol};
use crate::error::{Error, Result};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationSet {
    Onsager,
    AugOnsager,
    DolanGrady,
    T1,
    T2,
    Ter1,
    Ter2,
}

impl RelationSet {
    pub const ALL: [RelationSet; 7] = [
        RelationSet::Onsager,
        RelationSet::AugOnsager,
        RelationSet::DolanGrady,
        RelationSet::T1,
        RelationSet::T2,
        RelationSet::Ter1,
        RelationSet::Ter2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            RelationSet::Onsager => "onsager",
            RelationSet::AugOnsager => "aug-onsager",
            RelationSet::DolanGrady => "dolan-grady",
            RelationSet::T1 => "t1",
            RelationSet::T2 => "t2",
            RelationSet::Ter1 => "ter1",
            RelationSet::Ter2 => "ter2",
        }
    }
}

impl fmt::Display for RelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for RelationSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RelationSet::ALL
            .iter()
            .copied()
            .find(|r| r.id() == s)
            .ok_or_else(|| Error::UnknownSymbol(format!("{s} (expected one of {})", RelationSet::ALL.map(|r| r.id()).join(", "))))
    }
}

struct Ctx {
    alg: AlgebraId,
    report: Report,
}

impl Ctx {
    fn el(&self, s: Symbol, i: Option<i32>) -> LieElement {
        named_element(s, i, self.alg).expect("presentation generators live in the ambient algebra")
    }

    fn br(&self, x: &LieElement, y: &LieElement) -> LieElement {
        x.bracket(y).expect("same algebra")
    }

    fn expect_eq(&mut self, name: String, anchor: &str, lhs: LieElement, rhs: LieElement) {
        let ok = lhs == rhs;
        self.report.push(Check::from_bool(name, anchor, ok, || {
            format!("lhs - rhs = {}", (&lhs - &rhs).render())
        }));
    }
}

/// Evaluates every instance of `set` with indices in `[-range, range]`.
pub fn verify_presentation(set: RelationSet, range: i32) -> Report {
    let range = range.max(1);
    let alg = match set {
        RelationSet::Onsager | RelationSet::AugOnsager | RelationSet::DolanGrady => AlgebraId::Loop,
        _ => AlgebraId::HalfLoop,
    };
    let mut cx = Ctx {
        alg,
        report: Report::new(format!("verify presentation --id {set}"))
            .with_context("relations", set)
            .with_context("range", range),
    };
    match set {
        RelationSet::Onsager => onsager(&mut cx, range),
        RelationSet::AugOnsager => aug_onsager(&mut cx, range),
        RelationSet::DolanGrady => dolan_grady(&mut cx),
        RelationSet::T1 => t1(&mut cx),
        RelationSet::T2 => t2(&mut cx),
        RelationSet::Ter1 => level_shift(&mut cx, 1),
        RelationSet::Ter2 => level_shift(&mut cx, 2),
    }
    cx.report
}

fn onsager(cx: &mut Ctx, r: i32) {
    use Symbol::{A, G};
    for i in -r..=r {
        for j in -r..=r {
            let (ai, aj, gi, gj) = (cx.el(A, Some(i)), cx.el(A, Some(j)), cx.el(G, Some(i)), cx.el(G, Some(j)));
            let lhs = cx.br(&ai, &aj);
            let rhs = cx.el(G, Some(i - j)).scale_int(4);
            cx.expect_eq(format!("[A{i},A{j}]"), "[A_i, A_j] = 4 G_{i-j}", lhs, rhs);

            let rhs = (&cx.el(A, Some(i + j)) - &cx.el(A, Some(i - j))).scale_int(2);
            let lhs = cx.br(&gj, &ai);
            cx.expect_eq(format!("[G{j},A{i}]"), "[G_j, A_i] = 2 (A_{i+j} - A_{i-j})", lhs, rhs.clone());
            // The order printed alongside the relation list gives the opposite sign.
            let lhs = cx.br(&ai, &gj);
            cx.expect_eq(
                format!("[A{i},G{j}] literal order"),
                "[A_i, G_j] = -2 (A_{i+j} - A_{i-j}) (erratum: sign of the printed order)",
                lhs,
                -&rhs,
            );

            let lhs = cx.br(&gi, &gj);
            cx.expect_eq(format!("[G{i},G{j}]"), "[G_i, G_j] = 0", lhs, LieElement::zero(cx.alg));
        }
        let gi = cx.el(G, Some(i));
        let gm = cx.el(G, Some(-i));
        cx.expect_eq(format!("G{i} = -G{}", -i), "G_i = -G_{-i}", gi, -&gm);
    }
}

fn aug_onsager(cx: &mut Ctx, r: i32) {
    use Symbol::{Bbar, B, K};
    let zero = LieElement::zero(cx.alg);
    for i in -r..=r {
        for j in -r..=r {
            let (bi, bj) = (cx.el(B, Some(i)), cx.el(B, Some(j)));
            let (ci, cj) = (cx.el(Bbar, Some(i)), cx.el(Bbar, Some(j)));
            let (ki, kj) = (cx.el(K, Some(i)), cx.el(K, Some(j)));
            cx.expect_eq(format!("[B{i},B{j}]"), "[B_i, B_j] = 0", cx.br(&bi, &bj), zero.clone());
            cx.expect_eq(format!("[Bbar{i},Bbar{j}]"), "[Bbar_i, Bbar_j] = 0", cx.br(&ci, &cj), zero.clone());
            cx.expect_eq(format!("[K{i},K{j}]"), "[K_i, K_j] = 0", cx.br(&ki, &kj), zero.clone());

            let rhs = &cx.el(K, Some(i + j)) + &cx.el(K, Some(-i + j + 1));
            cx.expect_eq(format!("[B{i},Bbar{j}]"), "[B_i, Bbar_j] = K_{i+j} + K_{-i+j+1}", cx.br(&bi, &cj), rhs);

            let rhs = (&cx.el(Bbar, Some(i + j)) + &cx.el(Bbar, Some(-i + j))).scale_int(-2);
            cx.expect_eq(
                format!("[K{i},Bbar{j}]"),
                "[K_i, Bbar_j] = -2 (Bbar_{i+j} + Bbar_{-i+j})",
                cx.br(&ki, &cj),
                rhs,
            );

            let rhs = (&cx.el(B, Some(i + j)) + &cx.el(B, Some(-i + j))).scale_int(2);
            cx.expect_eq(format!("[K{i},B{j}]"), "[K_i, B_j] = 2 (B_{i+j} + B_{-i+j})", cx.br(&ki, &bj), rhs);
        }
        let b = cx.el(B, Some(i));
        cx.expect_eq(format!("B{i} symmetry"), "B_i = B_{-i+1}", b, cx.el(B, Some(-i + 1)));
        let c = cx.el(Bbar, Some(i));
        cx.expect_eq(format!("Bbar{i} symmetry"), "Bbar_i = Bbar_{-i-1}", c, cx.el(Bbar, Some(-i - 1)));
        let k = cx.el(K, Some(i));
        cx.expect_eq(format!("K{i} symmetry"), "K_i = K_{-i}", k, cx.el(K, Some(-i)));
    }
    // Three-generator presentation B -> B_1, B* -> Bbar_0, K -> K_0.
    let (b, bs, k) = (cx.el(B, None), cx.el(Symbol::Bstar, None), cx.el(K, None));
    let l = cx.br(&b, &cx.br(&b, &cx.br(&b, &bs)));
    cx.expect_eq("[B,[B,[B,B*]]]".into(), "[B, [B, [B, B*]]] = 0", l, zero.clone());
    let l = cx.br(&bs, &cx.br(&bs, &cx.br(&bs, &b)));
    cx.expect_eq("[B*,[B*,[B*,B]]]".into(), "[B*, [B*, [B*, B]]] = 0", l, zero.clone());
    cx.expect_eq("[K,B*]".into(), "[K, B*] = -4 B*", cx.br(&k, &bs), bs.scale_int(-4));
    cx.expect_eq("[K,B]".into(), "[K, B] = 4 B", cx.br(&k, &b), b.scale_int(4));
}

fn dolan_grady(cx: &mut Ctx) {
    let a = cx.el(Symbol::A, None);
    let s = cx.el(Symbol::Astar, None);
    let l = cx.br(&a, &cx.br(&a, &cx.br(&a, &s)));
    let r = cx.br(&a, &s).scale_int(16);
    cx.expect_eq("[A,[A,[A,A*]]]".into(), "[A, [A, [A, A*]]] = 16 [A, A*]", l, r);
    let l = cx.br(&s, &cx.br(&s, &cx.br(&s, &a)));
    let r = cx.br(&s, &a).scale_int(16);
    cx.expect_eq("[A*,[A*,[A*,A]]]".into(), "[A*, [A*, [A*, A]]] = 16 [A*, A]", l, r);
}

fn t1(cx: &mut Ctx) {
    let (e, f, h) = (cx.el(Symbol::BigE, None), cx.el(Symbol::BigF, None), cx.el(Symbol::BigH, None));
    cx.expect_eq("[H,E]".into(), "[H, E] = 2 E", cx.br(&h, &e), e.scale_int(2));
    cx.expect_eq("[H,F]".into(), "[H, F] = -2 F", cx.br(&h, &f), f.scale_int(-2));
}

fn t2(cx: &mut Ctx) {
    let (e, f) = (cx.el(Symbol::BigE, None), cx.el(Symbol::BigF, None));
    let zero = LieElement::zero(cx.alg);
    let l = cx.br(&e, &cx.br(&e, &cx.br(&e, &f)));
    cx.expect_eq("[E,[E,[E,F]]]".into(), "[E, [E, [E, F]]] = 0", l, zero.clone());
    let l = cx.br(&f, &cx.br(&f, &cx.br(&f, &e)));
    cx.expect_eq("[F,[F,[F,E]]]".into(), "[F, [F, [F, E]]] = 0", l, zero);
}

/// sl2 relations, the covariance `X([x, y]) = [x, X(y)]` and the level-three
/// Serre relation for the shift `X(x) = x_level` (level 1 is `J`, level 2 `K`).
fn level_shift(cx: &mut Ctx, level: i32) {
    let name = if level == 1 { "J" } else { "K" };
    let sym = |k: Kind| if level == 1 { Symbol::J(k) } else { Symbol::Kop(k) };
    let alg = cx.alg;
    let base = |k: Kind| {
        let s = match k {
            Kind::E => Symbol::E,
            Kind::F => Symbol::F,
            Kind::H => Symbol::H,
        };
        named_element(s, None, alg).expect("level-zero generators")
    };
    let (e, f, h) = (base(Kind::E), base(Kind::F), base(Kind::H));
    cx.expect_eq("[e,f]".into(), "[e, f] = h", cx.br(&e, &f), h.clone());
    cx.expect_eq("[h,f]".into(), "[h, f] = -2 f", cx.br(&h, &f), f.scale_int(-2));
    cx.expect_eq("[h,e]".into(), "[h, e] = 2 e", cx.br(&h, &e), e.scale_int(2));

    // The shift is linear: read it off on a bracket expressed in the sl2 basis.
    let shift = |x: &LieElement| -> LieElement {
        x.map_basis(alg, |b| LieElement::basis(alg, b.with_mode(b.mode + level)))
            .expect("positive modes stay in the half-loop algebra")
    };
    for x in Kind::ALL {
        for y in Kind::ALL {
            let (bx, by) = (base(x), base(y));
            let lhs = shift(&cx.br(&bx, &by));
            let rhs = cx.br(&bx, &cx.el(sym(y), None));
            cx.expect_eq(
                format!("{name}([{},{}])", x.letter(), y.letter()),
                &format!("{name}([x, y]) = [x, {name}(y)]"),
                lhs,
                rhs,
            );
        }
    }
    let (je, jf, jh) = (cx.el(sym(Kind::E), None), cx.el(sym(Kind::F), None), cx.el(sym(Kind::H), None));
    let l = cx.br(&cx.br(&je, &jf), &jh);
    cx.expect_eq(
        format!("[[{name}(e),{name}(f)],{name}(h)]"),
        &format!("[[{name}(e), {name}(f)], {name}(h)] = 0"),
        l,
        LieElement::zero(cx.alg),
    );
}
