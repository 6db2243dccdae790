//! Exact linear algebra over the rational function field.
//!
//! Rows are cleared of denominators and reduced with fraction-free (Bareiss)
//! elimination in the Laurent polynomial ring. Pivots are chosen by smallest
//! size to keep intermediate expressions short.

use crate::scalar::{gcd, LaurentPoly, RationalFn};

/// Least common multiple of the denominators of `row`, times the row.
pub fn clear_denominators(row: &[RationalFn]) -> Vec<LaurentPoly> {
    let mut l = LaurentPoly::one();
    for x in row {
        let d = x.denom();
        if d.is_one() {
            continue;
        }
        let g = gcd(&l, d);
        let q = d.div_exact(&g).expect("gcd divides");
        l = &l * &q;
    }
    row.iter()
        .map(|x| {
            if x.is_zero() {
                LaurentPoly::zero()
            } else {
                let k = l.div_exact(x.denom()).expect("lcm is a multiple");
                &k * x.numer()
            }
        })
        .collect()
}

fn weight(p: &LaurentPoly) -> (usize, i64) {
    (p.len(), p.total_degree())
}

/// Row echelon form computed by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<LaurentPoly>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn echelon_poly(mut m: Vec<Vec<LaurentPoly>>, ncols: usize) -> Echelon {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = LaurentPoly::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let best = (r..nrows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| weight(&m[i][c]));
        let Some(p) = best else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in (r + 1)..nrows {
            let lead = m[i][c].clone();
            let (top, bottom) = m.split_at_mut(i);
            let (pivot_row, row) = (&top[r], &mut bottom[0]);
            if lead.is_zero() {
                // Still scale to keep the Bareiss invariant intact.
                for x in row[(c + 1)..ncols].iter_mut().filter(|x| !x.is_zero()) {
                    *x = (&piv * x).div_exact(&prev).expect("Bareiss division is exact");
                }
                continue;
            }
            for (x, y) in row[(c + 1)..ncols].iter_mut().zip(&pivot_row[(c + 1)..ncols]) {
                let t = &(&piv * x) - &(&lead * y);
                *x = if t.is_zero() {
                    t
                } else {
                    t.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
            row[c] = LaurentPoly::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon { rows: m, pivots, ncols }
}

pub fn echelon(rows: &[Vec<RationalFn>], ncols: usize) -> Echelon {
    let polys = rows
        .iter()
        .map(|row| clear_denominators(row))
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();
    echelon_poly(polys, ncols)
}

pub fn rank(rows: &[Vec<RationalFn>], ncols: usize) -> usize {
    echelon(rows, ncols).rank()
}

/// Basis of `{x : rows * x = 0}`; each vector has a 1 in its free column.
pub fn nullspace(rows: &[Vec<RationalFn>], ncols: usize) -> Vec<Vec<RationalFn>> {
    let ech = echelon(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        let mut x = vec![RationalFn::zero(); ncols];
        x[f] = RationalFn::one();
        for (k, &p) in ech.pivots.iter().enumerate().rev() {
            let mut acc = RationalFn::zero();
            for (a, xj) in ech.rows[k][(p + 1)..ncols].iter().zip(&x[(p + 1)..ncols]) {
                if !a.is_zero() && !xj.is_zero() {
                    acc = &acc + &(&RationalFn::from_poly(a.clone()) * xj);
                }
            }
            let piv = RationalFn::from_poly(ech.rows[k][p].clone());
            x[p] = (-&acc).checked_div(&piv).expect("pivot is nonzero");
        }
        out.push(x);
    }
    out
}

/// Determinant of a square matrix.
pub fn det(rows: &[Vec<RationalFn>]) -> RationalFn {
    let n = rows.len();
    // Scale factors introduced while clearing denominators are divided out again.
    let mut scale = RationalFn::one();
    let mut m = Vec::with_capacity(n);
    for row in rows {
        let cleared = clear_denominators(row);
        let k = row
            .iter()
            .zip(&cleared)
            .find(|(x, _)| !x.is_zero())
            .map(|(x, c)| RationalFn::from_poly(c.clone()).checked_div(x).expect("nonzero"));
        match k {
            Some(k) => scale = &scale * &k,
            None => return RationalFn::zero(),
        }
        m.push(cleared);
    }
    det_poly(m)
        .map(|d| RationalFn::from_poly(d).checked_div(&scale).expect("nonzero scale"))
        .unwrap_or_else(RationalFn::zero)
}

/// Determinant of a square polynomial matrix by Bareiss elimination with row
/// swaps; `None` when singular.
pub fn det_poly(mut m: Vec<Vec<LaurentPoly>>) -> Option<LaurentPoly> {
    let n = m.len();
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        let best = (k..n).filter(|&i| !m[i][k].is_zero()).min_by_key(|&i| weight(&m[i][k]))?;
        if best != k {
            m.swap(best, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if t.is_zero() { t } else { t.div_exact(&prev).expect("exact") };
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Some(if sign < 0 { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Var;

    fn c(n: i64) -> RationalFn {
        RationalFn::int(n)
    }

    #[test]
    fn integer_rank_and_nullspace() {
        let m = vec![vec![c(1), c(2), c(3)], vec![c(2), c(4), c(6)], vec![c(1), c(0), c(1)]];
        assert_eq!(rank(&m, 3), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot: RationalFn = row.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn symbolic_determinant() {
        let u = RationalFn::var(Var::U);
        let one = RationalFn::one();
        // [[u, 1], [1, 1/u]] is singular; [[u, 1], [1, u]] has det u^2 - 1.
        let m = vec![vec![u.clone(), one.clone()], vec![one.clone(), u.inv().unwrap()]];
        assert!(det(&m).is_zero());
        let m = vec![vec![u.clone(), one.clone()], vec![one.clone(), u.clone()]];
        assert_eq!(det(&m), &(&u * &u) - &one);
        let half = RationalFn::frac(1, 2);
        let m = vec![vec![half.clone(), c(0)], vec![c(0), u.checked_div(&(&u + &one)).unwrap()]];
        assert_eq!(det(&m), (&half * &u).checked_div(&(&u + &one)).unwrap());
    }
}
