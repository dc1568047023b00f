//! Gröbner bases of submodules of free modules, with normal forms,
//! syzygies, matrix quotients and graded-piece enumeration.

mod buchberger;
mod graded;
mod matrix;
mod syzygy;
mod vector;

pub use buchberger::GroebnerBasis;
pub use graded::{
    graded_piece_basis, hilbert_function, is_zero_dimensional, max_standard_degree,
    monomials_of_multidegree, standard_monomials, GradedPiece,
};
pub use matrix::PolyMatrix;
pub use syzygy::{
    infer_column_degrees, koszul_syzygies, minimalize, module_quotient_lift, syzygy_matrix, Lifter,
};
pub use vector::{ModMono, Vector};
