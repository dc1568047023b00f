//! Exact computation of tangent spaces, obstruction spaces and versal
//! deformations of polynomial ideals over the rationals.
//!
//! The algebra is generic over [`field::Field`]; the aliases at the crate
//! root fix the coefficient field to arbitrary-precision rationals, which is
//! what the command-line front end uses.

pub mod cotangent;
pub mod deformation;
pub mod error;
pub mod exactla;
pub mod field;
pub mod groebner;
pub mod polyring;

pub use error::{Error, Result};
pub use field::{Field, Fp};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
pub type Poly = polyring::Polynomial<Rational>;
pub type Matrix = groebner::PolyMatrix<Rational>;
pub type ScalarMatrix = exactla::ScalarMatrix<Rational>;
pub type Basis = groebner::GroebnerBasis<Rational>;
