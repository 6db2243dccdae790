//! Exact computations with Manin triples, twists, Lie bi-ideal structures and
//! their quantum deformations at the level of evaluation representations.

pub mod error;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{hbar_expand, LaurentPoly, Monomial, RationalFn, SeriesRF, Var};
pub mod lie;
pub mod costructure;
pub mod linalg;
pub mod manin;
pub mod twist;
pub mod report;
pub mod quantum;

pub use lie::{named_element, AlgebraId, BasisVector, Component, Kind, LieElement, Symbol};
pub use report::{Check, Report, Status};
pub use manin::{Context, PairingId, SubspaceId, Triple, TripleId};
pub use twist::{Classification, TwistId};
pub use costructure::TensorElement;
pub use quantum::{MatrixRF, ModelId, RepId};
