use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{gcd, q, LaurentPoly, Q};
use super::var::{Monomial, Var};
use crate::error::{Error, Result};

/// Element of the field of rational functions in the registry variables.
///
/// Stored as `num / den` with `den` free of monomial factors, `gcd(num, den) = 1`
/// and `den` monic. Equality is decided by cross-multiplication, so callers do
/// not depend on the reduction being complete.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::constant(super::poly::q_frac(n, d))
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::from_poly(LaurentPoly::var_pow(v, e))
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        Self::from_poly(LaurentPoly::term(m, c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: LaurentPoly::one() }
    }

    /// Builds `num / den` in reduced form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (m, den) = den.split_monomial();
        let mut num = if m.is_one() { num } else { num.mul_monomial(&m.inv()) };
        let mut den = den;
        if !den.is_constant() && num.len() > 1 {
            let g = gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFn { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Q> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if rhs.den.is_one() && rhs.num.as_monomial().is_some() {
            let (m, c) = rhs.num.as_monomial().unwrap();
            let num = self.num.mul_monomial(&m.inv()).scale(&c.recip());
            return Ok(RationalFn { num, den: self.den.clone() });
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(RationalFn { num: self.num.pow(e as u32), den: self.den.pow(e as u32) })
        } else {
            self.inv()?.pow(-e)
        }
    }

    /// Image under the ring homomorphism sending each bound variable to its value.
    pub fn substitute(&self, bindings: &BTreeMap<Var, RationalFn>) -> Result<Self> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let n = subst_poly(&self.num, bindings)?;
        let d = subst_poly(&self.den, bindings)?;
        n.checked_div(&d)
    }

    pub fn substitute_one(&self, v: Var, value: &RationalFn) -> Result<Self> {
        let mut b = BTreeMap::new();
        b.insert(v, value.clone());
        self.substitute(&b)
    }

    /// Total degree of the numerator plus that of the denominator; a cheap
    /// size measure used for pivot selection.
    pub fn weight(&self) -> i64 {
        self.num.total_degree() + self.den.total_degree() + self.num.len() as i64 + self.den.len() as i64
    }
}

fn subst_poly(p: &LaurentPoly, bindings: &BTreeMap<Var, RationalFn>) -> Result<RationalFn> {
    // Fast path: every binding is a constant multiple of a Laurent monomial,
    // in which case terms map to terms.
    let mono: Option<BTreeMap<Var, (Monomial, Q)>> = bindings
        .iter()
        .map(|(v, r)| {
            let (nm, nc) = r.num.as_monomial()?;
            let (dm, dc) = r.den.as_monomial()?;
            Some((*v, (nm.div(dm), nc / dc)))
        })
        .collect();
    if let Some(mono) = mono {
        let mut out = LaurentPoly::zero();
        for (m, c) in p.terms() {
            let mut rest = *m;
            let mut coef = c.clone();
            let mut img = Monomial::ONE;
            for (v, (bm, bc)) in &mono {
                let e = m.exp(*v);
                if e == 0 {
                    continue;
                }
                if bc.is_zero() {
                    if e < 0 {
                        return Err(Error::NonInvertibleSubstitution(v.name().into()));
                    }
                    coef = Q::zero();
                    break;
                }
                rest = rest.without(*v);
                for (i, x) in img.0.iter_mut().enumerate() {
                    *x += bm.0[i] * e;
                }
                coef *= num_traits::pow::Pow::pow(bc, e);
            }
            out.add_term(rest.mul(&img), coef);
        }
        return Ok(RationalFn::from_poly(out));
    }
    let mut cache: BTreeMap<(Var, i32), RationalFn> = BTreeMap::new();
    let mut acc = RationalFn::zero();
    let mut polypart = LaurentPoly::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut factor = RationalFn::one();
        for (v, val) in bindings {
            let e = m.exp(*v);
            if e == 0 {
                continue;
            }
            rest = rest.without(*v);
            let pw = match cache.get(&(*v, e)) {
                Some(x) => x.clone(),
                None => {
                    if e < 0 && val.is_zero() {
                        return Err(Error::NonInvertibleSubstitution(v.name().into()));
                    }
                    let x = val.pow(e)?;
                    cache.insert((*v, e), x.clone());
                    x
                }
            };
            factor = &factor * &pw;
        }
        if factor.is_polynomial() {
            polypart = &polypart + &(&factor.num * &LaurentPoly::term(rest, c.clone()));
        } else {
            acc = &acc + &(&factor * &RationalFn::monomial(rest, c.clone()));
        }
    }
    Ok(&acc + &RationalFn::from_poly(polypart))
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl Default for RationalFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RationalFn {
    fn from(n: i64) -> Self {
        RationalFn::int(n)
    }
}

impl From<Q> for RationalFn {
    fn from(c: Q) -> Self {
        RationalFn::constant(c)
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl From<Var> for RationalFn {
    fn from(v: Var) -> Self {
        RationalFn::var(v)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFn::from_poly(&self.num + &rhs.num);
            }
            return RationalFn::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one() {
            return RationalFn::reduce(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return RationalFn::reduce(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            RationalFn::reduce(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            )
        } else {
            let a = self.den.div_exact(&g).expect("gcd divides");
            let b = rhs.den.div_exact(&g).expect("gcd divides");
            RationalFn::reduce(&(&self.num * &b) + &(&rhs.num * &a), &(&a * &b) * &g)
        }
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn::from_poly(&self.num * &rhs.num);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        // Cancel across before multiplying to keep sizes down.
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let (m, den) = den.split_monomial();
        let mut num = num.mul_monomial(&m.inv());
        let lc = den.leading_coeff();
        let den = if lc.is_one() {
            den
        } else {
            let inv = lc.recip();
            num = num.scale(&inv);
            den.scale(&inv)
        };
        RationalFn { num, den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: RationalFn) -> RationalFn {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: &RationalFn) -> RationalFn {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl std::iter::Sum for RationalFn {
    fn sum<I: Iterator<Item = RationalFn>>(iter: I) -> Self {
        iter.fold(RationalFn::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for RationalFn {
    /// Canonical rendering `num` or `(num)/(den)`; also valid scalar syntax for
    /// the element DSL.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

/// The q-number `[2]` at `e^hbar = s^8`: `(s^8 - s^-8)/(s^4 - s^-4) = s^4 + s^-4`.
pub fn qint2() -> RationalFn {
    &RationalFn::var_pow(Var::S, 4) + &RationalFn::var_pow(Var::S, -4)
}

pub fn rf_int(n: i64) -> RationalFn {
    RationalFn::constant(q(n))
}
