use std::collections::BTreeMap;

use crate::error::Result;
use crate::lie::{bracket_basis, BasisVector, Kind};
use crate::report::Report;
use crate::scalar::{qint2, RationalFn, Var};

use super::matrix::{mismatch_witness, MatrixRF};
use super::model::{
    boundary_image, coproduct_first_leg_image, model_casimir, tensor_coaction_image, MGen, ModelId,
};
use super::poly::{word_image, Expr};
use super::rep::{coproduct, rep_matrix, tensor_image, Family, RepId, UGen};

/// A defining relation `lhs = rhs` of a presentation.
#[derive(Clone, Debug)]
pub struct Relation<G: Clone + Ord> {
    pub name: String,
    pub anchor: &'static str,
    pub lhs: Expr<G>,
    pub rhs: Expr<G>,
}

fn rel<G: Clone + Ord>(name: impl Into<String>, anchor: &'static str, lhs: Expr<G>, rhs: Expr<G>) -> Relation<G> {
    Relation { name: name.into(), anchor, lhs, rhs }
}

fn int(n: i64) -> RationalFn {
    RationalFn::int(n)
}

fn hbar_pow(k: i32) -> RationalFn {
    RationalFn::var_pow(Var::Hbar, k)
}

/// `e^hbar` and its inverse as powers of `s`.
fn q_plus() -> RationalFn {
    RationalFn::var_pow(Var::S, 8)
}

fn q_minus() -> RationalFn {
    RationalFn::var_pow(Var::S, -8)
}

/// `[x, [x, [x, y]_(hbar)]_(-hbar)]`.
fn q_serre<G: Clone + Ord>(x: &Expr<G>, y: &Expr<G>) -> Expr<G> {
    x.commutator(&x.q_commutator(&x.q_commutator(y, &q_plus()), &q_minus()))
}

/// `[x, y]` on level-zero sl2 letters, as `(coefficient, letter)`.
fn sl2_bracket(x: Kind, y: Kind) -> Option<(i64, Kind)> {
    bracket_basis(&BasisVector::left(x, 0), &BasisVector::left(y, 0)).map(|(c, b)| (c, b.kind))
}

fn sl2_relations<G: Clone + Ord>(sl: impl Fn(Kind) -> G, anchor: &'static str) -> Vec<Relation<G>> {
    let e = Expr::gen(sl(Kind::E));
    let f = Expr::gen(sl(Kind::F));
    let h = Expr::gen(sl(Kind::H));
    vec![
        rel("[e, f] = h", anchor, e.commutator(&f), h.clone()),
        rel("[h, e] = 2e", anchor, h.commutator(&e), e.scale(&int(2))),
        rel("[h, f] = -2f", anchor, h.commutator(&f), f.scale(&int(-2))),
    ]
}

/// `[x, L(y)] = L([x, y])` for the linear extension `L` of a letter map.
fn equivariance<G: Clone + Ord>(
    sl: impl Fn(Kind) -> G,
    lift: impl Fn(Kind) -> G,
    label: &str,
    anchor: &'static str,
) -> Vec<Relation<G>> {
    let mut out = Vec::new();
    for x in Kind::ALL {
        for y in Kind::ALL {
            let lhs = Expr::gen(sl(x)).commutator(&Expr::gen(lift(y)));
            let rhs = match sl2_bracket(x, y) {
                Some((c, z)) => Expr::gen(lift(z)).scale(&int(c)),
                None => Expr::zero(),
            };
            out.push(rel(
                format!("[{}, {label}({})] = {label}([{}, {}])", x.letter(), y.letter(), x.letter(), y.letter()),
                anchor,
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// Defining relations of the ambient quantum algebra of a family.
pub fn quantum_relations(family: Family) -> Vec<Relation<UGen>> {
    match family {
        Family::UhL => {
            let anchor = "U_h(L) defining relations";
            let x = |sign: bool, i: u8| Expr::gen(if sign { UGen::Xp(i) } else { UGen::Xm(i) });
            let hh = |i: u8| Expr::gen(UGen::H(i));
            let mut out = vec![rel("H0 + H1 = 0", anchor, &hh(0) + &hh(1), Expr::zero())];
            for i in 0..2u8 {
                for j in 0..2u8 {
                    let a = if i == j { 2 } else { -2 };
                    out.push(rel(format!("[H{i}, X+{j}] = {a} X+{j}"), anchor, hh(i).commutator(&x(true, j)), x(true, j).scale(&int(a))));
                    out.push(rel(
                        format!("[H{i}, X-{j}] = {} X-{j}", -a),
                        anchor,
                        hh(i).commutator(&x(false, j)),
                        x(false, j).scale(&int(-a)),
                    ));
                }
            }
            let denom = (&RationalFn::var_pow(Var::S, 4) - &RationalFn::var_pow(Var::S, -4)).inv().expect("nonzero");
            for i in 0..2u8 {
                for j in 0..2u8 {
                    let rhs = if i == j {
                        (&Expr::gen(UGen::ExpH(i, 4)) - &Expr::gen(UGen::ExpH(i, -4))).scale(&denom)
                    } else {
                        Expr::zero()
                    };
                    out.push(rel(format!("[X+{i}, X-{j}]"), anchor, x(true, i).commutator(&x(false, j)), rhs));
                }
            }
            for sign in [true, false] {
                for i in 0..2u8 {
                    let s = if sign { '+' } else { '-' };
                    out.push(rel(
                        format!("q-Serre for X{s}{i}, X{s}{}", 1 - i),
                        anchor,
                        q_serre(&x(sign, i), &x(sign, 1 - i)),
                        Expr::zero(),
                    ));
                }
            }
            out
        }
        Family::Yangian => {
            let mut out = sl2_relations(UGen::Sl, "Yangian defining relations");
            out.extend(equivariance(UGen::Sl, UGen::J, "J", "Yangian defining relations"));
            let j = |k| Expr::gen(UGen::J(k));
            let sl = |k| Expr::gen(UGen::Sl(k));
            let lhs = j(Kind::E).commutator(&j(Kind::F)).commutator(&j(Kind::H));
            let rhs = &(&(&j(Kind::E) * &sl(Kind::F)) - &(&sl(Kind::E) * &j(Kind::F))) * &sl(Kind::H);
            out.push(rel("[[J(e), J(f)], J(h)] = hbar^2 (J(e)f - eJ(f))h", "Yangian terrific relation", lhs, rhs.scale(&hbar_pow(2))));
            out
        }
    }
}

/// Deformed defining relations of a coideal model.
pub fn model_relations(m: ModelId) -> Vec<Relation<MGen>> {
    let gen = |x: MGen| Expr::gen(x);
    match m {
        ModelId::QOnsager => {
            let anchor = "q-Dolan-Grady";
            let q4 = qint2().pow(4).expect("nonzero");
            let (a, b) = (gen(MGen::A), gen(MGen::Astar));
            vec![
                rel("[A, [A, [A, A*]_(h)]_(-h)] = [2]^4 [A, A*]", anchor, q_serre(&a, &b), a.commutator(&b).scale(&q4)),
                rel("[A*, [A*, [A*, A]_(h)]_(-h)] = [2]^4 [A*, A]", anchor, q_serre(&b, &a), b.commutator(&a).scale(&q4)),
            ]
        }
        ModelId::AugQOnsager => {
            let anchor = "deformed augmented Onsager";
            let (b, bs, k) = (gen(MGen::B), gen(MGen::Bstar), gen(MGen::K));
            let e = |v| RationalFn::var_pow(Var::S, v);
            let rho = &(&e(8) - &e(-8)) * &(&(&e(8) + &e(-8)) + &RationalFn::one());
            let sinh = &gen(MGen::ExpK(4)) - &gen(MGen::ExpK(-4));
            vec![
                rel(
                    "[B, [B, [B, B*]_(h)]_(-h)] = -rho B (e^(hK/2) - e^(-hK/2)) B",
                    anchor,
                    q_serre(&b, &bs),
                    (&(&b * &sinh) * &b).scale(&-&rho),
                ),
                rel(
                    "[B*, [B*, [B*, B]_(h)]_(-h)] = rho B* (e^(hK/2) - e^(-hK/2)) B*",
                    anchor,
                    q_serre(&bs, &b),
                    (&(&bs * &sinh) * &bs).scale(&rho),
                ),
                rel("[K, B] = 4B", anchor, k.commutator(&b), b.scale(&int(4))),
                rel("[K, B*] = -4B*", anchor, k.commutator(&bs), bs.scale(&int(-4))),
                rel(
                    "e^(hK/2) B e^(-hK/2) = e^(2h) B",
                    "exponential of K",
                    &(&gen(MGen::ExpK(4)) * &b) * &gen(MGen::ExpK(-4)),
                    b.scale(&e(16)),
                ),
                rel(
                    "e^(hK/2) B* e^(-hK/2) = e^(-2h) B*",
                    "exponential of K",
                    &(&gen(MGen::ExpK(4)) * &bs) * &gen(MGen::ExpK(-4)),
                    bs.scale(&e(-16)),
                ),
                rel("e^(hK/2) e^(-hK/2) = 1", "exponential of K", &gen(MGen::ExpK(4)) * &gen(MGen::ExpK(-4)), Expr::one()),
            ]
        }
        ModelId::YPlus => {
            let (h, e, f) = (gen(MGen::BigH), gen(MGen::BigE), gen(MGen::BigF));
            let h2 = hbar_pow(2);
            vec![
                rel("[H, E] = 2E", "Y+ sl2 relations", h.commutator(&e), e.scale(&int(2))),
                rel("[H, F] = -2F", "Y+ sl2 relations", h.commutator(&f), f.scale(&int(-2))),
                rel(
                    "[E, [E, [E, F]]] = -12 hbar^2 EHE",
                    "Y+ cubic relation",
                    e.commutator(&e.commutator(&e.commutator(&f))),
                    (&(&e * &h) * &e).scale(&h2.scale(&crate::scalar::q(-12))),
                ),
                rel(
                    "[F, [F, [F, E]]] = 12 hbar^2 FHF",
                    "Y+ cubic relation",
                    f.commutator(&f.commutator(&f.commutator(&e))),
                    (&(&f * &h) * &f).scale(&h2.scale(&crate::scalar::q(12))),
                ),
            ]
        }
        ModelId::YMinus => {
            let mut out = sl2_relations(MGen::Sl, "Y- presentation");
            out.extend(equivariance(MGen::Sl, MGen::KOp, "K", "Y- presentation"));
            let k = |x| gen(MGen::KOp(x));
            let sl = |x| gen(MGen::Sl(x));
            let lhs = k(Kind::H).commutator(&k(Kind::E).commutator(&k(Kind::F)));
            let anti = &k(Kind::F).anticommutator(&k(Kind::H).anticommutator(&sl(Kind::E)))
                - &k(Kind::E).anticommutator(&k(Kind::H).anticommutator(&sl(Kind::F)));
            let tail = &sl(Kind::H) * &k(Kind::H).commutator(&model_casimir());
            let rhs = &anti.scale(&hbar_pow(2)) + &tail.scale(&(&hbar_pow(4) * &RationalFn::frac(1, 4)));
            out.push(rel(
                "[K(h), [K(e), K(f)]] = hbar^2 ({K(f), {K(h), e}} - {K(e), {K(h), f}}) + hbar^4/4 h [K(h), C]",
                "Y- terrific relation",
                lhs,
                rhs,
            ));
            out
        }
    }
}

/// Where a relation set is evaluated.
#[derive(Clone, Debug)]
pub enum RelContext {
    SingleRep(RepId),
    CoproductPair(RepId, RepId),
    Boundary(ModelId, RepId),
    TensorCoaction(ModelId, RepId, RepId),
    /// The counit as a one-dimensional representation.
    Counit(ModelId),
}

impl RelContext {
    pub fn describe(&self) -> String {
        match self {
            RelContext::SingleRep(r) => format!("representation {r}"),
            RelContext::CoproductPair(a, b) => format!("coproduct in {a} (x) {b}"),
            RelContext::Boundary(m, r) => format!("boundary image of {m} in {r}"),
            RelContext::TensorCoaction(m, a, b) => format!("coaction of {m} in {a} (x) {b}"),
            RelContext::Counit(m) => format!("counit of {m}"),
        }
    }
}

fn check_all<G, F>(rep: &mut Report, rels: &[Relation<G>], n: usize, mut image: F) -> Result<()>
where
    G: Clone + Ord,
    F: FnMut(&G) -> Result<MatrixRF>,
{
    let mut memo: BTreeMap<G, MatrixRF> = BTreeMap::new();
    for r in rels {
        let mut eval = |x: &Expr<G>| x.eval(n, |w| word_image(w, n, &mut memo, &mut image));
        let lhs = eval(&r.lhs)?;
        let rhs = eval(&r.rhs)?;
        rep.record(r.name.clone(), r.anchor, lhs == rhs, || mismatch_witness(&lhs, &rhs));
    }
    Ok(())
}

/// Evaluates the appropriate relation set as exact matrix identities.
pub fn verify_relations(ctx: &RelContext) -> Result<Report> {
    let mut rep = Report::new(format!("verify relations: {}", ctx.describe()));
    match ctx {
        RelContext::SingleRep(r) => {
            rep.set_context("rep", r);
            check_all(&mut rep, &quantum_relations(r.family()), 2, |g| rep_matrix(r, g))?;
        }
        RelContext::CoproductPair(a, b) => {
            rep.set_context("reps", format!("{a} (x) {b}"));
            if a.family() != b.family() {
                return Err(crate::Error::FamilyMismatch);
            }
            check_all(&mut rep, &quantum_relations(a.family()), 4, |g| tensor_image(a, b, &coproduct(g)?))?;
        }
        RelContext::Boundary(m, r) => {
            rep.set_context("model", m);
            check_all(&mut rep, &model_relations(*m), 2, |g| boundary_image(*m, r, g))?;
        }
        RelContext::TensorCoaction(m, a, b) => {
            rep.set_context("model", m);
            check_all(&mut rep, &model_relations(*m), 4, |g| tensor_coaction_image(*m, a, b, g))?;
        }
        RelContext::Counit(m) => {
            rep.set_context("model", m);
            check_all(&mut rep, &model_relations(*m), 1, |g| Ok(MatrixRF::scalar(1, &m.counit(g)?)))?;
        }
    }
    Ok(rep)
}

/// `(Delta (x) 1) T = (1 (x) T) T` evaluated in `r1 (x) r2 (x) eps` on every
/// generator of the model.
pub fn verify_coassociativity(m: ModelId, r1: &RepId, r2: &RepId) -> Result<Report> {
    let mut rep = Report::new(format!("coassociativity of {m}")).with_context("model", m);
    for g in m.generators() {
        let lhs = coproduct_first_leg_image(m, r1, r2, &g)?;
        let rhs = tensor_coaction_image(m, r1, r2, &g)?;
        rep.record(format!("coassociativity on {g}"), "(Delta (x) 1) T = (1 (x) T) T", lhs == rhs, || {
            mismatch_witness(&lhs, &rhs)
        });
    }
    Ok(rep)
}
