use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Number of symbols in the closed variable registry.
pub const NVARS: usize = 10;

/// The closed registry of scalar symbols.
///
/// `S` stands for `e^(hbar/8)`, so `e^(hbar/4) = s^2`, `e^(hbar/2) = s^4` and
/// `e^hbar = s^8`. `Kappa` stands for `e^(c*hbar/4)`. `U`, `V`, `W` are spectral
/// parameters; `A`, `Astar`, `C` are counit constants and `Alpha` is the
/// evaluation shift of a representation.
///
/// The declaration order is the lexicographic term order used everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    S,
    Hbar,
    U,
    V,
    W,
    A,
    Astar,
    C,
    Kappa,
    Alpha,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::S,
        Var::Hbar,
        Var::U,
        Var::V,
        Var::W,
        Var::A,
        Var::Astar,
        Var::C,
        Var::Kappa,
        Var::Alpha,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::Hbar => "hbar",
            Var::U => "u",
            Var::V => "v",
            Var::W => "w",
            Var::A => "a",
            Var::Astar => "astar",
            Var::C => "c",
            Var::Kappa => "kappa",
            Var::Alpha => "alpha",
        }
    }

    /// Variables carrying an exponential dependence on `hbar`.
    pub fn is_exponential(self) -> bool {
        matches!(self, Var::S | Var::Kappa)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| crate::Error::UnknownVariable(s.to_string()))
    }
}

/// Exponent vector over the full registry. Negative entries are allowed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, exp: i32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }

    pub fn inv(&self) -> Monomial {
        Monomial::ONE.div(self)
    }

    pub fn min(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(e)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e.unsigned_abs() as i64).sum()
    }

    pub fn without(&self, v: Var) -> Monomial {
        let mut e = self.0;
        e[v.index()] = 0;
        Monomial(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
