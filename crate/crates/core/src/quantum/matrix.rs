use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{hbar_expand, RationalFn, SeriesRF, Var};

/// Square matrix over the rational function field.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixRF {
    n: usize,
    data: Vec<RationalFn>,
}

impl MatrixRF {
    pub fn zero(n: usize) -> Self {
        MatrixRF { n, data: vec![RationalFn::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = RationalFn::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &RationalFn) -> Self {
        Self::identity(n).scale(c)
    }

    pub fn from_rows(rows: Vec<Vec<RationalFn>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("{n} rows of unequal length")));
        }
        Ok(MatrixRF { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn diag(entries: &[RationalFn]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Matrix unit `E_ij` (zero-based) scaled by `c`.
    pub fn unit(n: usize, i: usize, j: usize, c: &RationalFn) -> Self {
        let mut m = Self::zero(n);
        m.data[i * n + j] = c.clone();
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFn {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFn) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RationalFn)> {
        self.data.iter().enumerate().map(move |(k, v)| (k / self.n, k % self.n, v))
    }

    pub fn rows(&self) -> Vec<Vec<RationalFn>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RationalFn::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, v)| i == j || v.is_zero())
    }

    pub fn scale(&self, c: &RationalFn) -> Self {
        MatrixRF { n: self.n, data: self.data.iter().map(|v| v * c).collect() }
    }

    fn check(&self, other: &MatrixRF) {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
    }

    pub fn kron(&self, other: &MatrixRF) -> MatrixRF {
        let (n, m) = (self.n, other.n);
        let mut out = MatrixRF::zero(n * m);
        for (i, j, a) in self.entries() {
            if a.is_zero() {
                continue;
            }
            for (k, l, b) in other.entries() {
                if !b.is_zero() {
                    out.data[(i * m + k) * n * m + j * m + l] = a * b;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> MatrixRF {
        let mut out = MatrixRF::zero(self.n);
        for (i, j, v) in self.entries() {
            out.data[j * self.n + i] = v.clone();
        }
        out
    }

    pub fn commutator(&self, other: &MatrixRF) -> MatrixRF {
        &(self * other) - &(other * self)
    }

    /// `xy - q yx`.
    pub fn q_commutator(&self, other: &MatrixRF, q: &RationalFn) -> MatrixRF {
        &(self * other) - &(other * self).scale(q)
    }

    pub fn anticommutator(&self, other: &MatrixRF) -> MatrixRF {
        &(self * other) + &(other * self)
    }

    pub fn substitute(&self, bindings: &BTreeMap<Var, RationalFn>) -> Result<MatrixRF> {
        let data = self.data.iter().map(|v| v.substitute(bindings)).collect::<Result<_>>()?;
        Ok(MatrixRF { n: self.n, data })
    }

    pub fn substitute_one(&self, v: Var, value: &RationalFn) -> Result<MatrixRF> {
        let data = self.data.iter().map(|x| x.substitute_one(v, value)).collect::<Result<_>>()?;
        Ok(MatrixRF { n: self.n, data })
    }

    /// Entrywise expansion in powers of hbar.
    pub fn hbar_expand(&self, order: usize) -> Result<Vec<SeriesRF>> {
        self.data.iter().map(|v| hbar_expand(v, order)).collect()
    }

    /// Coefficient matrix of `hbar^k` in the entrywise expansion.
    pub fn hbar_coefficient(&self, k: usize) -> Result<MatrixRF> {
        let series = self.hbar_expand(k)?;
        Ok(MatrixRF { n: self.n, data: series.iter().map(|s| s.coeff(k).clone()).collect() })
    }

    /// First entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &MatrixRF) -> Option<(usize, usize, RationalFn, RationalFn)> {
        self.entries()
            .zip(other.entries())
            .find(|((_, _, a), (_, _, b))| a != b)
            .map(|((i, j, a), (_, _, b))| (i, j, a.clone(), b.clone()))
    }

    /// Flip `P` on `C^2 (x) C^2`.
    pub fn flip4() -> MatrixRF {
        let one = RationalFn::one();
        let mut p = MatrixRF::zero(4);
        for (i, j) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            p.set(i, j, one.clone());
        }
        p
    }

    /// Swaps the second and third factors of `C^2 (x) C^2 (x) C^2`.
    pub fn flip23() -> MatrixRF {
        MatrixRF::identity(2).kron(&MatrixRF::flip4())
    }
}

/// Human-readable witness for a failed matrix identity.
pub fn mismatch_witness(lhs: &MatrixRF, rhs: &MatrixRF) -> String {
    match lhs.first_difference(rhs) {
        Some((i, j, a, b)) => format!("entry ({}, {}): lhs = {a}, rhs = {b}", i + 1, j + 1),
        None => "no difference".into(),
    }
}

impl fmt::Display for MatrixRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for MatrixRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixRF{}", self)
    }
}

impl Add for &MatrixRF {
    type Output = MatrixRF;
    fn add(self, rhs: &MatrixRF) -> MatrixRF {
        self.check(rhs);
        MatrixRF { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &MatrixRF {
    type Output = MatrixRF;
    fn sub(self, rhs: &MatrixRF) -> MatrixRF {
        self.check(rhs);
        MatrixRF { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &MatrixRF {
    type Output = MatrixRF;
    fn neg(self) -> MatrixRF {
        MatrixRF { n: self.n, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl Mul for &MatrixRF {
    type Output = MatrixRF;
    fn mul(self, rhs: &MatrixRF) -> MatrixRF {
        self.check(rhs);
        let n = self.n;
        let mut out = MatrixRF::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        let t = a * b;
                        let cell = &mut out.data[i * n + j];
                        *cell = &*cell + &t;
                    }
                }
            }
        }
        out
    }
}

impl Add for MatrixRF {
    type Output = MatrixRF;
    fn add(self, rhs: MatrixRF) -> MatrixRF {
        &self + &rhs
    }
}

impl Sub for MatrixRF {
    type Output = MatrixRF;
    fn sub(self, rhs: MatrixRF) -> MatrixRF {
        &self - &rhs
    }
}

impl Mul for MatrixRF {
    type Output = MatrixRF;
    fn mul(self, rhs: MatrixRF) -> MatrixRF {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_and_flip() {
        let a = MatrixRF::unit(2, 0, 1, &RationalFn::one());
        let b = MatrixRF::unit(2, 1, 0, &RationalFn::one());
        let p = MatrixRF::flip4();
        assert_eq!(&(&p * &a.kron(&b)) * &p, b.kron(&a));
        assert_eq!(&p * &p, MatrixRF::identity(4));
    }

    #[test]
    fn commutators() {
        let e = MatrixRF::unit(2, 0, 1, &RationalFn::one());
        let f = MatrixRF::unit(2, 1, 0, &RationalFn::one());
        let h = MatrixRF::diag(&[RationalFn::one(), RationalFn::int(-1)]);
        assert_eq!(e.commutator(&f), h);
        assert_eq!(h.commutator(&e), e.scale(&RationalFn::int(2)));
    }
}
