use crate::error::{Error, Result};
use crate::linalg::{clear_denominators, det_poly, nullspace};
use crate::report::Report;
use crate::scalar::{gcd, qint2, LaurentPoly, Monomial, RationalFn, Var};

use super::matrix::{mismatch_witness, MatrixRF};
use super::model::{boundary_image, Involution, ModelId};
use super::rep::RepId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RKind {
    /// Multiplicative spectral parameter, R21 = P R P in the reflection equation.
    Trig,
    /// Additive spectral parameter.
    Rational,
}

impl RKind {
    pub fn name(self) -> &'static str {
        match self {
            RKind::Trig => "trig",
            RKind::Rational => "rational",
        }
    }

    /// `x / y` or `x - y`.
    fn quotient(self, x: &RationalFn, y: &RationalFn) -> RationalFn {
        match self {
            RKind::Trig => x.checked_div(y).expect("spectral variables are nonzero"),
            RKind::Rational => x - y,
        }
    }

    /// `x y` or `x + y`.
    fn product(self, x: &RationalFn, y: &RationalFn) -> RationalFn {
        match self {
            RKind::Trig => x * y,
            RKind::Rational => x + y,
        }
    }
}

/// The 4x4 R-matrix in the basis `11, 12, 21, 22`.
pub fn r_matrix(kind: RKind, x: &RationalFn) -> MatrixRF {
    let one = RationalFn::one();
    let mut r = MatrixRF::identity(4);
    let (diag, up, down) = match kind {
        RKind::Trig => {
            let q = RationalFn::var_pow(Var::S, 8);
            let den = (&one - &(&q * x)).inv().expect("generic spectral value");
            let diag = &(&RationalFn::var_pow(Var::S, 4) * &(&one - x)) * &den;
            let up = &(&one - &q) * &den;
            let down = x * &up;
            (diag, up, down)
        }
        RKind::Rational => {
            let h = RationalFn::var(Var::Hbar);
            let den = (x + &h).inv().expect("generic spectral value");
            (x * &den, &h * &den, &h * &den)
        }
    };
    r.set(1, 1, diag.clone());
    r.set(2, 2, diag);
    r.set(1, 2, up);
    r.set(2, 1, down);
    r
}

fn spectral(v: Var) -> RationalFn {
    RationalFn::var(v)
}

/// Checks `R12 R13 R23 = R23 R13 R12` for an arbitrary family `r`.
pub fn verify_yang_baxter_with(label: &str, kind: RKind, r: &dyn Fn(&RationalFn) -> MatrixRF) -> Report {
    let (u, v, w) = (spectral(Var::U), spectral(Var::V), spectral(Var::W));
    let id = MatrixRF::identity(2);
    let p23 = MatrixRF::flip23();
    let r12 = r(&kind.quotient(&u, &v)).kron(&id);
    let r13 = &(&p23 * &r(&kind.quotient(&u, &w)).kron(&id)) * &p23;
    let r23 = id.kron(&r(&kind.quotient(&v, &w)));
    let lhs = &(&r12 * &r13) * &r23;
    let rhs = &(&r23 * &r13) * &r12;
    let mut rep = Report::new(format!("verify ybe --r {label}"));
    rep.record(
        format!("Yang-Baxter equation for the {label} R-matrix"),
        "R12 R13 R23 = R23 R13 R12",
        lhs == rhs,
        || mismatch_witness(&lhs, &rhs),
    );
    rep
}

pub fn verify_yang_baxter(kind: RKind) -> Report {
    verify_yang_baxter_with(kind.name(), kind, &|x| r_matrix(kind, x))
}

/// Reflection equation for a K-matrix written in the spectral variable
/// `var`, in the multiplicative or additive form according to `kind`.
pub fn verify_reflection(kind: RKind, k: &MatrixRF, var: Var) -> Result<Report> {
    let (u, v) = (spectral(Var::U), spectral(Var::V));
    let id = MatrixRF::identity(2);
    let p = MatrixRF::flip4();
    let ku = k.substitute_one(var, &u)?;
    let kv = k.substitute_one(var, &v)?;
    let k1 = ku.kron(&id);
    let k2 = id.kron(&kv);
    let r12 = |x: &RationalFn| r_matrix(kind, x);
    let minus = kind.quotient(&u, &v);
    let plus = kind.product(&u, &v);
    let (lhs, rhs, anchor) = match kind {
        RKind::Trig => {
            let r21 = |x: &RationalFn| &(&p * &r12(x)) * &p;
            (
                &(&(&r21(&minus) * &k1) * &r12(&plus)) * &k2,
                &(&(&k2 * &r21(&plus)) * &k1) * &r12(&minus),
                "R21(u/v) K1(u) R12(uv) K2(v) = K2(v) R21(uv) K1(u) R12(u/v)",
            )
        }
        RKind::Rational => (
            &(&(&r12(&minus) * &k1) * &r12(&plus)) * &k2,
            &(&(&k2 * &r12(&plus)) * &k1) * &r12(&minus),
            "R12(u-v) K1(u) R12(u+v) K2(v) = K2(v) R12(u+v) K1(u) R12(u-v)",
        ),
    };
    let mut rep = Report::new("reflection equation").with_context("K", k);
    rep.record(format!("reflection equation ({} R-matrix)", kind.name()), anchor, lhs == rhs, || mismatch_witness(&lhs, &rhs));
    Ok(rep)
}

/// Solution space of the intertwiner equation.
#[derive(Clone, Debug)]
pub struct KSolution {
    /// Normalized so the first nonzero entry in reading order is 1.
    pub basis: Vec<MatrixRF>,
    /// Greatest common divisor of the maximal minors, reduced to its factors
    /// involving `alpha`; present only when `alpha` was left symbolic.
    pub alpha_condition: Option<LaurentPoly>,
}

impl KSolution {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn normalize(v: &[RationalFn]) -> Result<Vec<RationalFn>> {
    let lead = v.iter().find(|x| !x.is_zero()).ok_or(Error::DivisionByZero)?.inv()?;
    Ok(v.iter().map(|x| x * &lead).collect())
}

/// Rows of `K M - N K = 0` in the unknowns `K11, K12, K21, K22`.
fn intertwiner_rows(m: &MatrixRF, n: &MatrixRF) -> Vec<Vec<RationalFn>> {
    let mut rows = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let mut row = vec![RationalFn::zero(); 4];
            for a in 0..2 {
                for b in 0..2 {
                    let mut c = RationalFn::zero();
                    if a == i {
                        c = &c + m.get(b, j);
                    }
                    if b == j {
                        c = &c - n.get(i, a);
                    }
                    row[a * 2 + b] = c;
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The part of `p` that involves `alpha`, up to units.
fn alpha_part(p: &LaurentPoly) -> LaurentPoly {
    let coeffs = p.coefficients_in(Var::Alpha);
    let mut content = LaurentPoly::zero();
    for c in coeffs.values() {
        content = if content.is_zero() { c.clone() } else { gcd(&content, c) };
    }
    let reduced = if content.is_zero() { p.clone() } else { p.div_exact(&content).unwrap_or_else(|| p.clone()) };
    reduced.strip_monomial().monic()
}

fn alpha_condition(rows: &[Vec<RationalFn>]) -> LaurentPoly {
    let mut cleared: Vec<Vec<LaurentPoly>> = Vec::new();
    for r in rows {
        let c = clear_denominators(r);
        let content = c
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.min_exponents())
            .reduce(|a, b| Monomial::min(&a, &b))
            .unwrap_or(Monomial::ONE);
        // A common positive power of alpha is a genuine zero at alpha = 0.
        let keep = Monomial::var(Var::Alpha, content.exp(Var::Alpha).max(0));
        let content = content.div(&keep);
        let c: Vec<LaurentPoly> = c.iter().map(|p| p.mul_monomial(&content.inv())).collect();
        if c.iter().any(|p| !p.is_zero()) && !cleared.contains(&c) {
            cleared.push(c);
        }
    }
    // Rows are now polynomial in alpha, so the order of vanishing at zero
    // survives the Laurent gcd, which treats monomials as units.
    let mut g = LaurentPoly::zero();
    let mut valuation = i32::MAX;
    for idx in combinations(cleared.len(), 4) {
        let minor: Vec<Vec<LaurentPoly>> = idx.iter().map(|&i| cleared[i].clone()).collect();
        if let Some(d) = det_poly(minor) {
            if d.is_zero() {
                continue;
            }
            valuation = valuation.min(d.min_degree(Var::Alpha).max(0));
            g = if g.is_zero() { d } else { gcd(&g, &d) };
            if g.is_constant() && valuation == 0 {
                break;
            }
        }
    }
    if g.is_zero() {
        return g;
    }
    alpha_part(&g).mul_monomial(&Monomial::var(Var::Alpha, valuation))
}

/// Solves `K(u) M_X(u) = M_X(sigma(u)) K(u)` for all generators `X`, where
/// `M_X` is the boundary image of the model at `r` and `sigma` the spectral
/// involution.
pub fn solve_intertwiner(m: ModelId, r: &RepId, inv: Involution) -> Result<KSolution> {
    let gens = m.generators();
    if gens.is_empty() {
        return Err(Error::EmptyModel);
    }
    let u = r.spectral();
    let image = inv.apply(u);
    let mut rows = Vec::new();
    for g in &gens {
        let mx = boundary_image(m, r, g)?;
        let nx = mx.substitute_one(u, &image)?;
        rows.extend(intertwiner_rows(&mx, &nx));
    }
    let symbolic = r.alpha().contains_var(Var::Alpha);
    let basis = nullspace(&rows, 4)
        .iter()
        .map(|v| {
            let v = normalize(v)?;
            MatrixRF::from_rows(vec![v[0..2].to_vec(), v[2..4].to_vec()])
        })
        .collect::<Result<Vec<_>>>()?;
    let alpha_condition = if symbolic { Some(alpha_condition(&rows)) } else { None };
    Ok(KSolution { basis, alpha_condition })
}

/// The K-matrices as displayed for each model, in the spectral variable `u`.
pub fn stated_k_matrix(m: ModelId) -> MatrixRF {
    let u = spectral(Var::U);
    let uinv = RationalFn::var_pow(Var::U, -1);
    let one = RationalFn::one();
    match m {
        ModelId::QOnsager => {
            let (a, astar) = (RationalFn::var(Var::A), RationalFn::var(Var::Astar));
            let den = (&RationalFn::var_pow(Var::S, 4) - &RationalFn::var_pow(Var::S, -4)).inv().expect("nonzero");
            let off = &(&qint2() * &(&u - &uinv)) * &den;
            MatrixRF::from_rows(vec![
                vec![&(&astar * &u) + &a, off.clone()],
                vec![off, &(&astar * &uinv) + &a],
            ])
            .expect("square")
        }
        ModelId::AugQOnsager => {
            let shift = &RationalFn::var_pow(Var::Kappa, 2) * &RationalFn::var_pow(Var::S, -2);
            MatrixRF::diag(&[&u + &shift, &uinv + &shift])
        }
        ModelId::YPlus => {
            let t = &(&RationalFn::var(Var::C) * &RationalFn::var(Var::Hbar)) * &uinv;
            MatrixRF::diag(&[&one + &t, &RationalFn::int(-1) + &t])
        }
        ModelId::YMinus => MatrixRF::identity(2),
    }
}

/// Whether `k = lambda * D p D^-1` for some scalar function `lambda` and a
/// constant (free of `var`) diagonal matrix `D = diag(1, d)`.
pub fn match_up_to_conjugation(k: &MatrixRF, p: &MatrixRF, var: Var) -> bool {
    if k.dim() != 2 || p.dim() != 2 {
        return false;
    }
    let pattern = |m: &MatrixRF| m.entries().map(|(_, _, x)| x.is_zero()).collect::<Vec<_>>();
    if pattern(k) != pattern(p) {
        return false;
    }
    let lambda = if !p.get(0, 0).is_zero() {
        k.get(0, 0).checked_div(p.get(0, 0))
    } else if !p.get(1, 1).is_zero() {
        k.get(1, 1).checked_div(p.get(1, 1))
    } else {
        return false;
    };
    let Ok(lambda) = lambda else { return false };
    if &lambda * p.get(1, 1) != *k.get(1, 1) {
        return false;
    }
    match (p.get(0, 1).is_zero(), p.get(1, 0).is_zero()) {
        (true, true) => true,
        (false, false) => {
            let Ok(d) = k.get(1, 0).checked_div(&(&lambda * p.get(1, 0))) else { return false };
            let Ok(dinv) = d.inv() else { return false };
            !d.contains_var(var) && *k.get(0, 1) == &(&lambda * p.get(0, 1)) * &dinv
        }
        (false, true) => {
            let Ok(d) = (&lambda * p.get(0, 1)).checked_div(k.get(0, 1)) else { return false };
            !d.contains_var(var)
        }
        (true, false) => {
            let Ok(d) = k.get(1, 0).checked_div(&(&lambda * p.get(1, 0))) else { return false };
            !d.contains_var(var)
        }
    }
}

/// How a computed K-matrix relates to the displayed one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KMatch {
    /// Equal up to a scalar function and a constant diagonal conjugation.
    Direct,
    /// As `Direct` once the free boundary constant is renamed: for the
    /// augmented model `kappa -> s / kappa`, i.e. `c -> 1/2 - c`.
    Relabeled,
    None,
}

pub fn match_stated(m: ModelId, k: &MatrixRF) -> KMatch {
    let stated = stated_k_matrix(m);
    if match_up_to_conjugation(k, &stated, Var::U) {
        return KMatch::Direct;
    }
    if m == ModelId::AugQOnsager {
        let kappa = &RationalFn::var(Var::S) * &RationalFn::var_pow(Var::Kappa, -1);
        if let Ok(renamed) = k.substitute_one(Var::Kappa, &kappa) {
            if match_up_to_conjugation(&renamed, &stated, Var::U) {
                return KMatch::Relabeled;
            }
        }
    }
    KMatch::None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_r_is_identity_at_hbar_zero() {
        let r = r_matrix(RKind::Rational, &RationalFn::var(Var::U));
        assert_eq!(r.hbar_coefficient(0).unwrap(), MatrixRF::identity(4));
    }

    #[test]
    fn conjugation_match_tolerates_diagonal_gauge() {
        let p = stated_k_matrix(ModelId::QOnsager);
        let d = MatrixRF::diag(&[RationalFn::one(), RationalFn::int(3)]);
        let dinv = MatrixRF::diag(&[RationalFn::one(), RationalFn::frac(1, 3)]);
        let k = (&(&d * &p) * &dinv).scale(&RationalFn::var(Var::U));
        assert!(match_up_to_conjugation(&k, &p, Var::U));
        let bad = MatrixRF::diag(&[RationalFn::one(), RationalFn::var(Var::U)]);
        let k2 = &(&bad * &p) * &bad.substitute_one(Var::U, &RationalFn::var_pow(Var::U, -1)).unwrap();
        assert!(!match_up_to_conjugation(&k2, &p, Var::U));
    }
}
