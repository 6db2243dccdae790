use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{q, LaurentPoly, Q};
use super::rational::RationalFn;
use super::var::{Monomial, Var};
use crate::error::{Error, Result};

/// Truncated power series `c_0 + c_1 hbar + ... + c_N hbar^N + O(hbar^(N+1))`
/// with coefficients free of `hbar`, `s` and `kappa`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesRF {
    coeffs: Vec<RationalFn>,
}

impl SeriesRF {
    pub fn zero(order: usize) -> Self {
        SeriesRF { coeffs: vec![RationalFn::zero(); order + 1] }
    }

    pub fn from_coeffs(coeffs: Vec<RationalFn>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        SeriesRF { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &RationalFn {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[RationalFn] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> SeriesRF {
        let n = order.min(self.order());
        SeriesRF { coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn add(&self, other: &SeriesRF) -> SeriesRF {
        let n = self.order().min(other.order());
        SeriesRF { coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &SeriesRF) -> SeriesRF {
        let n = self.order().min(other.order());
        SeriesRF { coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn mul(&self, other: &SeriesRF) -> SeriesRF {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|i| &self.coeffs[i] * &other.coeffs[k - i]).sum())
            .collect();
        SeriesRF { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RationalFn::is_zero)
    }
}

impl fmt::Display for SeriesRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*hbar")?,
                _ => write!(f, "({c})*hbar^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(hbar^{})", self.order() + 1)
    }
}

/// `E_j(a, k) = (a/8 + k c/4)^j / j!`, the j-th Taylor coefficient of
/// `s^a kappa^k` under `s = e^(hbar/8)`, `kappa = e^(c hbar/4)`.
struct ExpCache {
    table: BTreeMap<(i32, i32), Vec<LaurentPoly>>,
}

impl ExpCache {
    fn new() -> Self {
        ExpCache { table: BTreeMap::new() }
    }

    fn get(&mut self, a: i32, k: i32, j: usize) -> &LaurentPoly {
        let row = self.table.entry((a, k)).or_insert_with(|| vec![LaurentPoly::one()]);
        while row.len() <= j {
            let n = row.len();
            let step = &LaurentPoly::constant(Q::new(BigInt::from(a), BigInt::from(8)))
                + &LaurentPoly::term(Monomial::var(Var::C, 1), Q::new(BigInt::from(k), BigInt::from(4)));
            let next = (&row[n - 1] * &step).scale(&Q::new(BigInt::one(), BigInt::from(n)));
            row.push(next);
        }
        &row[j]
    }
}

/// Coefficients of the hbar-expansion of a polynomial with nonnegative hbar
/// exponents, up to and including `order`.
fn expand_poly(p: &LaurentPoly, order: usize, cache: &mut ExpCache) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); order + 1];
    for (m, c) in p.terms() {
        let a = m.exp(Var::S);
        let k = m.exp(Var::Kappa);
        let b = m.exp(Var::Hbar);
        debug_assert!(b >= 0);
        let rest = m.without(Var::S).without(Var::Kappa).without(Var::Hbar);
        let base = LaurentPoly::term(rest, c.clone());
        for (j, slot) in out.iter_mut().enumerate().skip(b as usize) {
            let e = cache.get(a, k, j - b as usize);
            if e.is_zero() {
                continue;
            }
            *slot = &*slot + &(&base * e);
        }
    }
    out
}

/// Position of the first nonzero coefficient in the expansion of `p`.
fn valuation(p: &LaurentPoly, cache: &mut ExpCache) -> Result<usize> {
    let mut probe = 4usize;
    loop {
        let e = expand_poly(p, probe, cache);
        if let Some(v) = e.iter().position(|c| !c.is_zero()) {
            return Ok(v);
        }
        if probe > 4096 {
            // A nonzero Laurent polynomial cannot vanish to all orders.
            return Err(Error::PoleAtHbarZero);
        }
        probe *= 2;
    }
}

/// Expansion of `x` in powers of hbar with `s = e^(hbar/8)` and
/// `kappa = e^(c hbar/4)`, truncated after `order`. The constant `c` stays
/// symbolic unless substituted beforehand.
pub fn hbar_expand(x: &RationalFn, order: usize) -> Result<SeriesRF> {
    if x.is_zero() {
        return Ok(SeriesRF::zero(order));
    }
    let (mn, num) = x.numer().split_monomial_in(Var::Hbar);
    let (md, den) = x.denom().split_monomial_in(Var::Hbar);
    let mut cache = ExpCache::new();
    let nv = valuation(&num, &mut cache)?;
    let dv = valuation(&den, &mut cache)?;
    let lead = mn as i64 - md as i64 + nv as i64 - dv as i64;
    if lead < 0 {
        return Err(Error::PoleAtHbarZero);
    }
    let mut coeffs = vec![RationalFn::zero(); order + 1];
    if lead as usize > order {
        return Ok(SeriesRF { coeffs });
    }
    let len = order - lead as usize;
    let ns = expand_poly(&num, nv + len, &mut cache);
    let ds = expand_poly(&den, dv + len, &mut cache);
    let d0inv = RationalFn::from_poly(ds[dv].clone()).inv()?;
    let mut quot: Vec<RationalFn> = Vec::with_capacity(len + 1);
    for i in 0..=len {
        let mut acc = RationalFn::from_poly(ns[nv + i].clone());
        for (j, qj) in quot.iter().enumerate() {
            let dc = &ds[dv + i - j];
            if !dc.is_zero() {
                acc = &acc - &(qj * &RationalFn::from_poly(dc.clone()));
            }
        }
        quot.push(&acc * &d0inv);
    }
    for (i, c) in quot.into_iter().enumerate() {
        coeffs[lead as usize + i] = c;
    }
    Ok(SeriesRF { coeffs })
}

impl LaurentPoly {
    /// Splits off the lowest power of `v`: `self = v^k * rest`.
    pub fn split_monomial_in(&self, v: Var) -> (i32, LaurentPoly) {
        if self.is_zero() {
            return (0, LaurentPoly::zero());
        }
        let k = self.min_degree(v);
        (k, self.mul_monomial(&Monomial::var(v, -k)))
    }
}

/// Taylor coefficient `x^j / j!` as an exact rational.
pub fn exp_coeff(x: &Q, j: usize) -> Q {
    let mut r = Q::one();
    for n in 1..=j {
        r = r * x / q(n as i64);
    }
    r
}
