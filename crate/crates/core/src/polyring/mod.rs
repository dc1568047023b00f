//! Sparse multivariate polynomials over an exact field, with an x-block of
//! geometric variables and a t-block of deformation parameters.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{monomials_of_degree, Exp, Monomial};
pub use polynomial::Polynomial;
pub use ring::RingSpec;
