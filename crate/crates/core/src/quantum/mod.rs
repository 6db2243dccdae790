//! Evaluation-representation images of the quantum algebras and their coideal
//! subalgebras, together with R- and K-matrix checks.

mod kmatrix;
mod matrix;
mod model;
mod poly;
mod relations;
mod rep;
mod semiclassical;

pub use kmatrix::{
    match_stated, match_up_to_conjugation, r_matrix, solve_intertwiner, stated_k_matrix, verify_reflection, verify_yang_baxter,
    verify_yang_baxter_with, KMatch, KSolution, RKind,
};
pub use matrix::{mismatch_witness, MatrixRF};
pub use model::{
    boundary_expr_image, boundary_image, coproduct_first_leg_image, model_casimir, tensor_coaction_expr_image,
    tensor_coaction_image, Coaction, Involution, MGen, ModelId,
};
pub use poly::{Expr, NcPoly, TensorExpr, Word};
pub use relations::{
    model_relations, quantum_relations, verify_coassociativity, verify_relations, RelContext, Relation,
};
pub use rep::{
    casimir, classical_image, coproduct, coproduct_expr_image, coproduct_image, expr_image, rep_matrix, sl2_matrix,
    split_casimir, tensor_image, Family, RepId, UGen,
};
pub use semiclassical::{semiclassical_coaction, semiclassical_coproduct};
