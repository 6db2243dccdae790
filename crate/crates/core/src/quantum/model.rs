use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lie::{named_element, AlgebraId, Kind, LieElement, Symbol};
use crate::manin::{Context, TripleId};
use crate::scalar::{qint2, RationalFn, Var};
use crate::twist::TwistId;

use super::matrix::MatrixRF;
use super::poly::{word_image, Expr, TensorExpr};
use super::rep::{casimir, coproduct, rep_matrix, split_casimir, tensor_image, Family, RepId, UGen};

/// Generators of the coideal algebras. `ExpK(k)` is `exp(k hbar K / 8)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MGen {
    A,
    Astar,
    B,
    Bstar,
    K,
    ExpK(i32),
    BigH,
    BigE,
    BigF,
    Sl(Kind),
    KOp(Kind),
}

impl fmt::Display for MGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MGen::A => write!(f, "A"),
            MGen::Astar => write!(f, "Astar"),
            MGen::B => write!(f, "B"),
            MGen::Bstar => write!(f, "Bstar"),
            MGen::K => write!(f, "K"),
            MGen::ExpK(k) => write!(f, "exp({k}hbar*K/8)"),
            MGen::BigH => write!(f, "H"),
            MGen::BigE => write!(f, "E"),
            MGen::BigF => write!(f, "F"),
            MGen::Sl(k) => write!(f, "{}", k.letter()),
            MGen::KOp(k) => write!(f, "K({})", k.letter()),
        }
    }
}

/// Coaction `T(g) = sum c * (first-leg word) (x) (second-leg word)`.
pub type Coaction = TensorExpr<UGen, MGen>;

/// Spectral involution used by the intertwiner equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    /// `u -> 1/u`
    Inverse,
    /// `u -> -u`
    Negate,
}

impl Involution {
    pub fn apply(self, u: Var) -> RationalFn {
        match self {
            Involution::Inverse => RationalFn::var_pow(u, -1),
            Involution::Negate => -&RationalFn::var(u),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelId {
    QOnsager,
    AugQOnsager,
    YPlus,
    YMinus,
}

fn hbar() -> RationalFn {
    RationalFn::var(Var::Hbar)
}

fn g(x: MGen) -> Expr<MGen> {
    Expr::gen(x)
}

fn u(x: UGen) -> Expr<UGen> {
    Expr::gen(x)
}

fn first(x: &Expr<UGen>) -> Coaction {
    TensorExpr::outer(x, &Expr::one())
}

fn second(x: MGen) -> Coaction {
    TensorExpr::outer(&Expr::one(), &g(x))
}

impl ModelId {
    pub const ALL: [ModelId; 4] = [ModelId::QOnsager, ModelId::AugQOnsager, ModelId::YPlus, ModelId::YMinus];

    pub fn cli_name(self) -> &'static str {
        match self {
            ModelId::QOnsager => "qonsager",
            ModelId::AugQOnsager => "aug-qonsager",
            ModelId::YPlus => "yplus",
            ModelId::YMinus => "yminus",
        }
    }

    pub fn family(self) -> Family {
        match self {
            ModelId::QOnsager | ModelId::AugQOnsager => Family::UhL,
            ModelId::YPlus | ModelId::YMinus => Family::Yangian,
        }
    }

    pub fn generators(self) -> Vec<MGen> {
        match self {
            ModelId::QOnsager => vec![MGen::A, MGen::Astar],
            ModelId::AugQOnsager => vec![MGen::B, MGen::Bstar, MGen::K],
            ModelId::YPlus => vec![MGen::BigH, MGen::BigE, MGen::BigF],
            ModelId::YMinus => Kind::ALL.iter().flat_map(|&k| [MGen::Sl(k), MGen::KOp(k)]).collect(),
        }
    }

    fn owns(self, x: &MGen) -> bool {
        match (self, x) {
            (ModelId::AugQOnsager, MGen::ExpK(k)) => k % 2 == 0,
            _ => self.generators().contains(x),
        }
    }

    fn check(self, x: &MGen) -> Result<()> {
        if self.owns(x) {
            Ok(())
        } else {
            Err(Error::UnknownGenerator(format!("{x} in {}", self.cli_name())))
        }
    }

    pub fn involution(self) -> Involution {
        match self.family() {
            Family::UhL => Involution::Inverse,
            Family::Yangian => Involution::Negate,
        }
    }

    /// The value of `alpha` at which the intertwiner equation is stated to
    /// have a one-dimensional solution space.
    pub fn stated_alpha(self) -> RationalFn {
        match self {
            ModelId::QOnsager => RationalFn::var_pow(Var::S, 2),
            ModelId::AugQOnsager => RationalFn::var_pow(Var::S, -1),
            ModelId::YPlus => RationalFn::one(),
            ModelId::YMinus => RationalFn::zero(),
        }
    }

    /// Counit value of a generator.
    pub fn counit(self, x: &MGen) -> Result<RationalFn> {
        self.check(x)?;
        Ok(match x {
            MGen::A => RationalFn::var(Var::A),
            MGen::Astar => RationalFn::var(Var::Astar),
            MGen::K | MGen::BigH if self != ModelId::YMinus => RationalFn::var(Var::C),
            MGen::ExpK(k) => RationalFn::var_pow(Var::Kappa, k / 2),
            _ => RationalFn::zero(),
        })
    }

    /// Image of a generator under the embedding into the ambient quantum
    /// algebra, where one is recorded (the twisted Yangians).
    pub fn psi(self, x: &MGen) -> Result<Expr<UGen>> {
        self.check(x)?;
        let half_hbar = &hbar() * &RationalFn::frac(1, 2);
        let quarter_hbar = &hbar() * &RationalFn::frac(1, 4);
        let j = |k| u(UGen::J(k));
        let c = u(UGen::Casimir);
        let h = u(UGen::Sl(Kind::H));
        Ok(match (self, x) {
            (ModelId::YPlus, MGen::BigH) => h,
            (ModelId::YPlus, MGen::BigE) => &j(Kind::E) - &(&h * &u(UGen::Sl(Kind::E))).scale(&half_hbar),
            (ModelId::YPlus, MGen::BigF) => &j(Kind::F) + &(&h * &u(UGen::Sl(Kind::F))).scale(&half_hbar),
            (ModelId::YMinus, MGen::Sl(k)) => u(UGen::Sl(*k)),
            (ModelId::YMinus, MGen::KOp(k)) => {
                let lead = match k {
                    Kind::H => j(Kind::E).commutator(&j(Kind::F)),
                    Kind::E => j(Kind::H).commutator(&j(Kind::E)).scale(&RationalFn::frac(1, 2)),
                    Kind::F => j(Kind::F).commutator(&j(Kind::H)).scale(&RationalFn::frac(1, 2)),
                };
                &lead - &c.commutator(&j(*k)).scale(&quarter_hbar)
            }
            _ => return Err(Error::UnknownGenerator(format!("no embedding recorded for {x}"))),
        })
    }

    /// The coaction `T(x)` as a sum of tensor words.
    pub fn coaction(self, x: &MGen) -> Result<Coaction> {
        self.check(x)?;
        let q2 = qint2();
        Ok(match (self, x) {
            (ModelId::QOnsager, MGen::A | MGen::Astar) => {
                let i = if *x == MGen::A { 0 } else { 1 };
                let lift = &(&u(UGen::Xp(i)) + &u(UGen::Xm(i))) * &u(UGen::ExpH(i, 2));
                &first(&lift.scale(&q2)) + &TensorExpr::outer(&u(UGen::ExpH(i, 4)), &g(*x))
            }
            (ModelId::AugQOnsager, MGen::K) => &first(&(&u(UGen::H(1)) - &u(UGen::H(0)))) + &second(MGen::K),
            (ModelId::AugQOnsager, MGen::B | MGen::Bstar) => {
                let (a, b) = if *x == MGen::B { (UGen::Xp(1), UGen::Xm(0)) } else { (UGen::Xm(1), UGen::Xp(0)) };
                let t1 = TensorExpr::outer(&(&u(a) * &u(UGen::ExpH(0, 2))), &g(MGen::ExpK(-2)));
                let t2 = TensorExpr::outer(&(&u(b) * &u(UGen::ExpH(1, 2))), &g(MGen::ExpK(2)));
                &(&t1 + &t2) + &second(*x)
            }
            (ModelId::AugQOnsager, MGen::ExpK(k)) => {
                TensorExpr::outer(&(&u(UGen::ExpH(1, *k)) * &u(UGen::ExpH(0, -k))), &g(*x))
            }
            (ModelId::YPlus, MGen::BigH) => &first(&self.psi(x)?) + &second(*x),
            (ModelId::YPlus, MGen::BigE | MGen::BigF) => {
                let (leg, sign) = if *x == MGen::BigE { (Kind::E, -1) } else { (Kind::F, 1) };
                let corr = TensorExpr::outer(&u(UGen::Sl(leg)), &g(MGen::BigH)).scale(&hbar().scale(&crate::scalar::q(sign)));
                &(&first(&self.psi(x)?) + &second(*x)) + &corr
            }
            (ModelId::YMinus, MGen::Sl(k)) => &first(&u(UGen::Sl(*k))) + &second(*x),
            (ModelId::YMinus, MGen::KOp(k)) => {
                let t = split_casimir(MGen::Sl);
                let x1 = |k: Kind| first(&u(UGen::Sl(k)));
                let quarter = &(&hbar() * &hbar()) * &RationalFn::frac(1, 4);
                let second_order = match k {
                    Kind::H => &t.commutator(&t.commutator(&x1(Kind::H)))
                        + &t.commutator(&x1(Kind::E)).commutator(&t.commutator(&x1(Kind::F))),
                    Kind::E => &t.commutator(&t.commutator(&x1(Kind::E)))
                        + &t.commutator(&x1(Kind::H))
                            .commutator(&t.commutator(&x1(Kind::E)))
                            .scale(&RationalFn::frac(1, 2)),
                    Kind::F => &t.commutator(&t.commutator(&x1(Kind::F)))
                        + &t.commutator(&x1(Kind::F))
                            .commutator(&t.commutator(&x1(Kind::H)))
                            .scale(&RationalFn::frac(1, 2)),
                };
                let first_order = first(&u(UGen::J(*k))).commutator(&t).scale(&hbar());
                &(&(&first(&self.psi(x)?) + &second(*x)) + &first_order) + &second_order.scale(&quarter)
            }
            _ => unreachable!("checked above"),
        })
    }

    /// The Manin triple context whose bi-ideal map is the classical shadow of
    /// the coaction.
    pub fn classical_context(self) -> Context {
        match self {
            ModelId::QOnsager => Context::twisted(TripleId::D, TwistId::Phi1),
            ModelId::AugQOnsager => Context::twisted(TripleId::D, TwistId::Phi2),
            ModelId::YPlus => Context::twisted(TripleId::L, TwistId::SignOdd),
            ModelId::YMinus => Context::twisted(TripleId::L, TwistId::SignEven),
        }
    }

    /// Classical counterpart of a generator in the loop algebra.
    pub fn classical(self, x: &MGen) -> Result<LieElement> {
        self.check(x)?;
        let (s, i) = match x {
            MGen::A => (Symbol::A, Some(1)),
            MGen::Astar => (Symbol::Astar, None),
            MGen::B => (Symbol::B, Some(1)),
            MGen::Bstar => (Symbol::Bstar, None),
            MGen::K => (Symbol::K, Some(0)),
            MGen::BigH => (Symbol::BigH, None),
            MGen::BigE => (Symbol::BigE, None),
            MGen::BigF => (Symbol::BigF, None),
            MGen::Sl(k) => (Symbol::from_name(k.letter()).expect("sl2 letters are symbols"), Some(0)),
            MGen::KOp(k) => (Symbol::Kop(*k), None),
            MGen::ExpK(_) => return Err(Error::UnknownGenerator(format!("{x} has no classical counterpart"))),
        };
        named_element(s, i, AlgebraId::Loop)
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for ModelId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ModelId::ALL
            .into_iter()
            .find(|m| m.cli_name() == s)
            .ok_or_else(|| Error::UnknownSymbol(format!("{s} (expected one of {})", ModelId::ALL.map(|m| m.cli_name()).join(", "))))
    }
}

fn compatible(m: ModelId, r: &RepId) -> Result<()> {
    if m.family() != r.family() {
        return Err(Error::IncompatibleRep { model: m.cli_name().into(), rep: r.family().name().into() });
    }
    Ok(())
}

fn counit_word(m: ModelId, w: &[MGen]) -> Result<RationalFn> {
    let mut acc = RationalFn::one();
    for x in w {
        acc = &acc * &m.counit(x)?;
    }
    Ok(acc)
}

/// `(pi (x) eps)(T(x))`.
pub fn boundary_image(m: ModelId, r: &RepId, x: &MGen) -> Result<MatrixRF> {
    compatible(m, r)?;
    let mut memo = BTreeMap::new();
    m.coaction(x)?
        .eval(2, |(a, b)| Ok(word_image(a, 2, &mut memo, |gen| rep_matrix(r, gen))?.scale(&counit_word(m, b)?)))
}

/// Boundary image of a polynomial in the model generators.
pub fn boundary_expr_image(m: ModelId, r: &RepId, x: &Expr<MGen>) -> Result<MatrixRF> {
    compatible(m, r)?;
    let mut memo = BTreeMap::new();
    x.eval(2, |w| word_image(w, 2, &mut memo, |gen| boundary_image(m, r, gen)))
}

/// `(pi_1 (x) (pi_2 (x) eps) T)(T(x))`: first legs in `r1`, second legs
/// through the boundary image at `r2`.
pub fn tensor_coaction_image(m: ModelId, r1: &RepId, r2: &RepId, x: &MGen) -> Result<MatrixRF> {
    compatible(m, r1)?;
    compatible(m, r2)?;
    let mut m1 = BTreeMap::new();
    let mut m2 = BTreeMap::new();
    m.coaction(x)?.eval(4, |(a, b)| {
        let ia = word_image(a, 2, &mut m1, |gen| rep_matrix(r1, gen))?;
        let ib = word_image(b, 2, &mut m2, |gen| boundary_image(m, r2, gen))?;
        Ok(ia.kron(&ib))
    })
}

/// Tensor coaction image of a polynomial in the model generators.
pub fn tensor_coaction_expr_image(m: ModelId, r1: &RepId, r2: &RepId, x: &Expr<MGen>) -> Result<MatrixRF> {
    let mut memo = BTreeMap::new();
    x.eval(4, |w| word_image(w, 4, &mut memo, |gen| tensor_coaction_image(m, r1, r2, gen)))
}

/// `(Delta (x) 1) T` evaluated in `r1 (x) r2 (x) eps`.
pub fn coproduct_first_leg_image(m: ModelId, r1: &RepId, r2: &RepId, x: &MGen) -> Result<MatrixRF> {
    compatible(m, r1)?;
    compatible(m, r2)?;
    let mut acc = MatrixRF::zero(4);
    for ((a, b), c) in m.coaction(x)?.terms() {
        let eps = counit_word(m, b)?;
        if eps.is_zero() {
            continue;
        }
        let word: Expr<UGen> = Expr::word(a.clone());
        let delta = word.substitute(coproduct)?;
        acc = &acc + &tensor_image(r1, r2, &delta)?.scale(&(c * &eps));
    }
    Ok(acc)
}

/// The Casimir of the model's own sl2 generators (used by the `Y-` relations).
pub fn model_casimir() -> Expr<MGen> {
    casimir()
        .substitute(|x| match x {
            UGen::Sl(k) => Ok(Expr::gen(MGen::Sl(*k))),
            _ => unreachable!("casimir uses level-zero generators only"),
        })
        .expect("level-zero generators map")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yplus_boundary_of_h() {
        let r = RepId::yangian(Var::U, RationalFn::var(Var::Alpha));
        let b = boundary_image(ModelId::YPlus, &r, &MGen::BigH).unwrap();
        let c = RationalFn::var(Var::C);
        let want = MatrixRF::diag(&[&RationalFn::one() + &c, &RationalFn::int(-1) + &c]);
        assert_eq!(b, want);
    }

    #[test]
    fn incompatible_rep_is_rejected() {
        let r = RepId::yangian(Var::U, RationalFn::zero());
        assert!(matches!(boundary_image(ModelId::QOnsager, &r, &MGen::A), Err(Error::IncompatibleRep { .. })));
    }

    #[test]
    fn yminus_level_zero_boundary_is_rep() {
        let r = RepId::yangian(Var::U, RationalFn::zero());
        let b = boundary_image(ModelId::YMinus, &r, &MGen::Sl(Kind::E)).unwrap();
        assert_eq!(b, super::super::rep::sl2_matrix(Kind::E));
    }
}
