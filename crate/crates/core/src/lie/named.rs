use std::fmt;

use super::{AlgebraId, BasisVector, Kind, LieElement};
use crate::error::{Error, Result};
use crate::scalar::RationalFn;

/// Generator names used by the various presentations.
///
/// `E`, `F`, `H` with an index are loop basis vectors; without one they are
/// the level-zero sl2 generators. `BigE`, `BigF`, `BigH` are the generators of
/// the positive Borel / twisted Yangian presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    E,
    F,
    H,
    A,
    G,
    B,
    Bbar,
    K,
    Astar,
    Bstar,
    H0,
    H1,
    Xp0,
    Xp1,
    Xm0,
    Xm1,
    J(Kind),
    Kop(Kind),
    BigE,
    BigF,
    BigH,
}

impl Symbol {
    /// Looks a symbol up by its DSL name.
    pub fn from_name(name: &str) -> Option<Symbol> {
        Some(match name {
            "e" => Symbol::E,
            "f" => Symbol::F,
            "h" => Symbol::H,
            "A" => Symbol::A,
            "G" => Symbol::G,
            "B" => Symbol::B,
            "Bbar" => Symbol::Bbar,
            "K" => Symbol::K,
            "Astar" => Symbol::Astar,
            "Bstar" => Symbol::Bstar,
            "H0" => Symbol::H0,
            "H1" => Symbol::H1,
            "X+0" => Symbol::Xp0,
            "X+1" => Symbol::Xp1,
            "X-0" => Symbol::Xm0,
            "X-1" => Symbol::Xm1,
            "E" => Symbol::BigE,
            "F" => Symbol::BigF,
            "H" => Symbol::BigH,
            _ => return None,
        })
    }

    pub fn name(&self) -> String {
        match self {
            Symbol::E => "e".into(),
            Symbol::F => "f".into(),
            Symbol::H => "h".into(),
            Symbol::A => "A".into(),
            Symbol::G => "G".into(),
            Symbol::B => "B".into(),
            Symbol::Bbar => "Bbar".into(),
            Symbol::K => "K".into(),
            Symbol::Astar => "Astar".into(),
            Symbol::Bstar => "Bstar".into(),
            Symbol::H0 => "H0".into(),
            Symbol::H1 => "H1".into(),
            Symbol::Xp0 => "X+0".into(),
            Symbol::Xp1 => "X+1".into(),
            Symbol::Xm0 => "X-0".into(),
            Symbol::Xm1 => "X-1".into(),
            Symbol::J(k) => format!("J({})", k.letter()),
            Symbol::Kop(k) => format!("Kop({})", k.letter()),
            Symbol::BigE => "E".into(),
            Symbol::BigF => "F".into(),
            Symbol::BigH => "H".into(),
        }
    }

    /// Whether the symbol accepts a `[n]` index.
    pub fn takes_index(&self) -> bool {
        matches!(
            self,
            Symbol::E | Symbol::F | Symbol::H | Symbol::A | Symbol::G | Symbol::B | Symbol::Bbar | Symbol::K
        )
    }

    /// Whether the symbol is meaningless without an index.
    pub fn requires_index(&self) -> bool {
        matches!(self, Symbol::G | Symbol::Bbar)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn loop_combo(terms: &[(i64, BasisVector)]) -> LieElement {
    LieElement::from_terms(
        AlgebraId::Loop,
        terms.iter().map(|(c, b)| (*b, RationalFn::int(*c))),
    )
    .expect("loop algebra accepts every left basis vector")
}

fn loop_value(symbol: Symbol, index: Option<i32>) -> Result<LieElement> {
    use BasisVector as BV;
    if let Some(i) = index.filter(|_| !symbol.takes_index()) {
        return Err(Error::UnknownSymbol(format!("{symbol}[{i}]")));
    }
    if index.is_none() && symbol.requires_index() {
        return Err(Error::UnknownSymbol(format!("{symbol} without index")));
    }
    let v = match (symbol, index) {
        (Symbol::E, i) => loop_combo(&[(1, BV::e(i.unwrap_or(0)))]),
        (Symbol::F, i) => loop_combo(&[(1, BV::f(i.unwrap_or(0)))]),
        (Symbol::H, i) => loop_combo(&[(1, BV::h(i.unwrap_or(0)))]),
        (Symbol::A, i) => {
            let i = i.unwrap_or(1);
            loop_combo(&[(2, BV::e(i)), (2, BV::f(-i))])
        }
        (Symbol::G, Some(i)) => loop_combo(&[(1, BV::h(i)), (-1, BV::h(-i))]),
        (Symbol::B, i) => {
            let i = i.unwrap_or(1);
            loop_combo(&[(1, BV::e(i)), (1, BV::e(1 - i))])
        }
        (Symbol::Bbar, Some(i)) => loop_combo(&[(1, BV::f(i)), (1, BV::f(-i - 1))]),
        (Symbol::K, i) => {
            let i = i.unwrap_or(0);
            loop_combo(&[(1, BV::h(i)), (1, BV::h(-i))])
        }
        (Symbol::Astar, None) => loop_value(Symbol::A, Some(0))?,
        (Symbol::Bstar, None) => loop_value(Symbol::Bbar, Some(0))?,
        (Symbol::H1, None) => loop_combo(&[(1, BV::h(0))]),
        (Symbol::H0, None) => loop_combo(&[(-1, BV::h(0))]),
        (Symbol::Xp1, None) => loop_combo(&[(1, BV::e(0))]),
        (Symbol::Xp0, None) => loop_combo(&[(1, BV::f(-1))]),
        (Symbol::Xm1, None) => loop_combo(&[(1, BV::f(0))]),
        (Symbol::Xm0, None) => loop_combo(&[(1, BV::e(1))]),
        (Symbol::J(k), None) => loop_combo(&[(1, BV::left(k, 1))]),
        (Symbol::Kop(k), None) => loop_combo(&[(1, BV::left(k, 2))]),
        (Symbol::BigE, None) => loop_combo(&[(1, BV::e(1))]),
        (Symbol::BigF, None) => loop_combo(&[(1, BV::f(1))]),
        (Symbol::BigH, None) => loop_combo(&[(1, BV::h(0))]),
        (s, i) => return Err(Error::UnknownSymbol(format!("{s}{i:?}"))),
    };
    Ok(v)
}

/// The defining linear combination of a named generator, placed in `algebra`
/// through the standard embedding (diagonal in the double, `h0 -> (h0, h0)`
/// in `L + h`).
pub fn named_element(symbol: Symbol, index: Option<i32>, algebra: AlgebraId) -> Result<LieElement> {
    loop_value(symbol, index)?.embed(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn onsager_generators() {
        let a1 = named_element(Symbol::A, Some(1), AlgebraId::Loop).unwrap();
        assert_eq!(a1.render(), "2*e[1] + 2*f[-1]");
        assert!(named_element(Symbol::G, Some(0), AlgebraId::Loop).unwrap().is_zero());
        let k2 = named_element(Symbol::K, Some(2), AlgebraId::Loop).unwrap();
        assert_eq!(k2.render(), "h[-2] + h[2]");
    }

    #[test]
    fn serre_images() {
        let h0 = named_element(Symbol::H0, None, AlgebraId::Loop).unwrap();
        assert_eq!(h0.render(), "-h[0]");
        let x = named_element(Symbol::Xp0, None, AlgebraId::Loop).unwrap();
        assert_eq!(x.render(), "f[-1]");
    }

    #[test]
    fn half_loop_membership_is_enforced() {
        assert!(named_element(Symbol::J(Kind::E), None, AlgebraId::HalfLoop).is_ok());
        let err = named_element(Symbol::A, Some(1), AlgebraId::HalfLoop).unwrap_err();
        assert!(matches!(err, Error::ModeOutOfAlgebra(..)));
    }

    #[test]
    fn presentation_aliases() {
        let b = named_element(Symbol::B, None, AlgebraId::Loop).unwrap();
        assert_eq!(b, named_element(Symbol::B, Some(0), AlgebraId::Loop).unwrap());
        let bs = named_element(Symbol::Bstar, None, AlgebraId::Loop).unwrap();
        assert_eq!(bs.render(), "f[-1] + f[0]");
        assert!(named_element(Symbol::G, None, AlgebraId::Loop).is_err());
    }
}
