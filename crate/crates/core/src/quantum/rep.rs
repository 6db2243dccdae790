use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lie::{Kind, LieElement};
use crate::scalar::{RationalFn, Var};

use super::matrix::MatrixRF;
use super::poly::{word_image, Expr, TensorExpr};

/// Generators of the quantum loop algebra (Serre picture) and of the Yangian.
///
/// `ExpH(i, k)` stands for `exp(k hbar H_i / 8)`, so `ExpH(i, 2)` is
/// `exp(hbar H_i / 4)`. `Casimir` is `ef + fe + h^2/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UGen {
    Xp(u8),
    Xm(u8),
    H(u8),
    ExpH(u8, i32),
    Sl(Kind),
    J(Kind),
    Casimir,
}

impl fmt::Display for UGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UGen::Xp(i) => write!(f, "X+{i}"),
            UGen::Xm(i) => write!(f, "X-{i}"),
            UGen::H(i) => write!(f, "H{i}"),
            UGen::ExpH(i, k) => write!(f, "exp({k}hbar*H{i}/8)"),
            UGen::Sl(k) => write!(f, "{}", k.letter()),
            UGen::J(k) => write!(f, "J({})", k.letter()),
            UGen::Casimir => write!(f, "C"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    UhL,
    Yangian,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::UhL => "uhl",
            Family::Yangian => "yangian",
        }
    }

    /// Generators the representation of this family understands.
    pub fn generators(self) -> Vec<UGen> {
        match self {
            Family::UhL => vec![UGen::Xp(0), UGen::Xp(1), UGen::Xm(0), UGen::Xm(1), UGen::H(0), UGen::H(1)],
            Family::Yangian => Kind::ALL.iter().flat_map(|&k| [UGen::Sl(k), UGen::J(k)]).collect(),
        }
    }
}

/// Two-dimensional evaluation representations.
///
/// Matrix units follow the convention in which `e` acts as the raising
/// operator `E12`; with it `[e, f] = h` holds for the listed images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepId {
    UhLPrincipal { spectral: Var, alpha: RationalFn },
    YangianEval { spectral: Var, alpha: RationalFn },
}

impl RepId {
    pub fn uhl(spectral: Var, alpha: RationalFn) -> Self {
        RepId::UhLPrincipal { spectral, alpha }
    }

    pub fn yangian(spectral: Var, alpha: RationalFn) -> Self {
        RepId::YangianEval { spectral, alpha }
    }

    pub fn of(family: Family, spectral: Var, alpha: RationalFn) -> Self {
        match family {
            Family::UhL => Self::uhl(spectral, alpha),
            Family::Yangian => Self::yangian(spectral, alpha),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            RepId::UhLPrincipal { .. } => Family::UhL,
            RepId::YangianEval { .. } => Family::Yangian,
        }
    }

    pub fn spectral(&self) -> Var {
        match self {
            RepId::UhLPrincipal { spectral, .. } | RepId::YangianEval { spectral, .. } => *spectral,
        }
    }

    pub fn alpha(&self) -> &RationalFn {
        match self {
            RepId::UhLPrincipal { alpha, .. } | RepId::YangianEval { alpha, .. } => alpha,
        }
    }

    /// Same representation at another spectral variable.
    pub fn at(&self, spectral: Var) -> Self {
        Self::of(self.family(), spectral, self.alpha().clone())
    }

    pub fn name(&self) -> String {
        format!("{}({}, alpha={})", self.family().name(), self.spectral().name(), self.alpha())
    }
}

impl fmt::Display for RepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn one() -> RationalFn {
    RationalFn::one()
}

/// Level-zero sl2 matrices: `e = E12`, `f = E21`, `h = diag(1, -1)`.
pub fn sl2_matrix(k: Kind) -> MatrixRF {
    match k {
        Kind::E => MatrixRF::unit(2, 0, 1, &one()),
        Kind::F => MatrixRF::unit(2, 1, 0, &one()),
        Kind::H => MatrixRF::diag(&[one(), RationalFn::int(-1)]),
    }
}

/// Weights of `H_i` on the two basis vectors.
fn cartan_weights(i: u8) -> [i32; 2] {
    if i == 1 {
        [1, -1]
    } else {
        [-1, 1]
    }
}

fn unknown(g: &UGen, r: &RepId) -> Error {
    Error::UnknownGenerator(format!("{g} in {}", r.family().name()))
}

/// Image of a generator in the representation.
pub fn rep_matrix(r: &RepId, g: &UGen) -> Result<MatrixRF> {
    let u = RationalFn::var(r.spectral());
    let alpha = r.alpha();
    match (r.family(), g) {
        (Family::UhL, UGen::Xp(1)) => Ok(MatrixRF::unit(2, 0, 1, alpha)),
        (Family::UhL, UGen::Xm(1)) => Ok(MatrixRF::unit(2, 1, 0, &alpha.inv()?)),
        (Family::UhL, UGen::Xp(0)) => Ok(MatrixRF::unit(2, 1, 0, &(alpha * &u))),
        (Family::UhL, UGen::Xm(0)) => Ok(MatrixRF::unit(2, 0, 1, &(alpha * &u).inv()?)),
        (Family::UhL, UGen::H(i @ (0 | 1))) => {
            let [a, b] = cartan_weights(*i);
            Ok(MatrixRF::diag(&[RationalFn::int(a as i64), RationalFn::int(b as i64)]))
        }
        (Family::UhL, UGen::ExpH(i @ (0 | 1), k)) => {
            let [a, b] = cartan_weights(*i);
            Ok(MatrixRF::diag(&[RationalFn::var_pow(Var::S, k * a), RationalFn::var_pow(Var::S, k * b)]))
        }
        (Family::Yangian, UGen::Sl(k)) => Ok(sl2_matrix(*k)),
        (Family::Yangian, UGen::J(k)) => Ok(sl2_matrix(*k).scale(&(&u + alpha))),
        (Family::Yangian, UGen::Casimir) => expr_image(r, &casimir()),
        _ => Err(unknown(g, r)),
    }
}

/// `ef + fe + h^2/2` in the level-zero generators.
pub fn casimir() -> Expr<UGen> {
    let e = Expr::gen(UGen::Sl(Kind::E));
    let f = Expr::gen(UGen::Sl(Kind::F));
    let h = Expr::gen(UGen::Sl(Kind::H));
    &e.anticommutator(&f) + &(&h * &h).scale(&RationalFn::frac(1, 2))
}

pub fn expr_image(r: &RepId, x: &Expr<UGen>) -> Result<MatrixRF> {
    let mut memo = BTreeMap::new();
    x.eval(2, |w| word_image(w, 2, &mut memo, |g| rep_matrix(r, g)))
}

/// The split Casimir `t = e (x) f + f (x) e + h (x) h / 2`, with the second
/// leg produced by `second`.
pub fn split_casimir<B: Clone + Ord>(second: impl Fn(Kind) -> B) -> TensorExpr<UGen, B> {
    let leg = |k: Kind| Expr::gen(UGen::Sl(k));
    let other = |k: Kind| Expr::gen(second(k));
    &(&TensorExpr::outer(&leg(Kind::E), &other(Kind::F)) + &TensorExpr::outer(&leg(Kind::F), &other(Kind::E)))
        + &TensorExpr::outer(&leg(Kind::H), &other(Kind::H)).scale(&RationalFn::frac(1, 2))
}

/// Coproduct of a generator as an element of the tensor square.
pub fn coproduct(g: &UGen) -> Result<TensorExpr<UGen, UGen>> {
    let one = Expr::<UGen>::one();
    let x = Expr::gen(*g);
    let primitive = &TensorExpr::outer(&x, &one) + &TensorExpr::outer(&one, &x);
    Ok(match g {
        UGen::Xp(i) | UGen::Xm(i) => {
            &TensorExpr::outer(&x, &Expr::gen(UGen::ExpH(*i, -2)))
                + &TensorExpr::outer(&Expr::gen(UGen::ExpH(*i, 2)), &x)
        }
        UGen::H(_) | UGen::Sl(_) => primitive,
        UGen::ExpH(..) => TensorExpr::outer(&x, &x),
        UGen::J(k) => {
            let t = split_casimir(UGen::Sl);
            let x1 = TensorExpr::outer(&Expr::gen(UGen::Sl(*k)), &one);
            &primitive + &x1.commutator(&t).scale(&(&RationalFn::var(Var::Hbar) * &RationalFn::frac(1, 2)))
        }
        UGen::Casimir => return casimir().substitute(coproduct),
    })
}

/// Evaluates a tensor expression of the quantum algebra in `r1 (x) r2`.
pub fn tensor_image(r1: &RepId, r2: &RepId, x: &TensorExpr<UGen, UGen>) -> Result<MatrixRF> {
    let mut m1 = BTreeMap::new();
    let mut m2 = BTreeMap::new();
    x.eval(4, |(a, b)| {
        let ia = word_image(a, 2, &mut m1, |g| rep_matrix(r1, g))?;
        let ib = word_image(b, 2, &mut m2, |g| rep_matrix(r2, g))?;
        Ok(ia.kron(&ib))
    })
}

fn same_family(r1: &RepId, r2: &RepId) -> Result<()> {
    if r1.family() != r2.family() {
        return Err(Error::FamilyMismatch);
    }
    Ok(())
}

/// `(r1 (x) r2)(Delta(g))`.
pub fn coproduct_image(r1: &RepId, r2: &RepId, g: &UGen) -> Result<MatrixRF> {
    same_family(r1, r2)?;
    tensor_image(r1, r2, &coproduct(g)?)
}

/// `(r1 (x) r2)(Delta(x))` for a polynomial in the generators.
pub fn coproduct_expr_image(r1: &RepId, r2: &RepId, x: &Expr<UGen>) -> Result<MatrixRF> {
    same_family(r1, r2)?;
    tensor_image(r1, r2, &x.substitute(coproduct)?)
}

/// Classical evaluation of a loop algebra element: principal picture for
/// `UhL`, `x_n -> (u + alpha)^n x` for the Yangian.
pub fn classical_image(family: Family, spectral: Var, alpha: &RationalFn, x: &LieElement) -> Result<MatrixRF> {
    let u = RationalFn::var(spectral);
    let mut acc = MatrixRF::zero(2);
    for (b, c) in x.terms() {
        let factor = match family {
            Family::UhL => {
                let wt = match b.kind {
                    Kind::E => 1,
                    Kind::F => -1,
                    Kind::H => 0,
                };
                let a2u = &(alpha * alpha) * &u;
                &a2u.pow(-b.mode)? * &alpha.pow(wt)?
            }
            Family::Yangian => (&u + alpha).pow(b.mode)?,
        };
        acc = &acc + &sl2_matrix(b.kind).scale(&(&factor * c));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uhl() -> RepId {
        RepId::uhl(Var::U, RationalFn::var(Var::Alpha))
    }

    #[test]
    fn cartan_exponential_is_diagonal_monomial() {
        let m = rep_matrix(&uhl(), &UGen::ExpH(1, 2)).unwrap();
        assert_eq!(m, MatrixRF::diag(&[RationalFn::var_pow(Var::S, 2), RationalFn::var_pow(Var::S, -2)]));
    }

    #[test]
    fn yangian_casimir_is_scalar() {
        let r = RepId::yangian(Var::U, RationalFn::zero());
        let c = rep_matrix(&r, &UGen::Casimir).unwrap();
        assert_eq!(c, MatrixRF::scalar(2, &RationalFn::frac(3, 2)));
    }

    #[test]
    fn wrong_family_is_rejected() {
        let r = RepId::yangian(Var::U, RationalFn::zero());
        assert!(matches!(rep_matrix(&r, &UGen::Xp(0)), Err(Error::UnknownGenerator(_))));
        assert!(matches!(coproduct_image(&uhl(), &r, &UGen::H(1)), Err(Error::FamilyMismatch)));
    }
}
