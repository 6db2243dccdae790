//! Exact scalars: Laurent polynomials, rational functions and truncated
//! hbar-series over the fixed variable registry.

pub mod poly;
pub mod rational;
pub mod series;
pub mod var;

pub use poly::{gcd, q, q_frac, LaurentPoly, Q};
pub use rational::{qint2, RationalFn};
pub use series::{hbar_expand, SeriesRF};
pub use var::{Monomial, Var, NVARS};
