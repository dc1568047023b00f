#![allow(dead_code)]

use std::collections::HashMap;

use versal_core::exactla::ScalarMatrix;
use versal_core::polyring::{monomials_of_degree, Monomial, RingSpec};
use versal_core::{Matrix, Poly, Rational};

pub const QUARTIC_CONE_VARS: [&str; 5] = ["x0", "x1", "x2", "x3", "x4"];
pub const QUARTIC_CONE_GENS: [&str; 6] = [
    "x1^2 - x0*x2",
    "x1*x2 - x0*x3",
    "x2^2 - x1*x3",
    "x1*x3 - x0*x4",
    "x2*x3 - x1*x4",
    "x3^2 - x2*x4",
];

pub const DIAGONAL_VARS: [&str; 9] = ["x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"];
pub const DIAGONAL_GENS: [&str; 10] = [
    "y1*z2", "x1*z2", "y2*z1", "y1*z1", "x2*z1", "x1*z1", "x1*y2", "x2*y1", "x1*y1", "x2*y2*z2",
];

pub fn quartic_cone() -> (RingSpec, Vec<Poly>) {
    let r = RingSpec::new(&QUARTIC_CONE_VARS).unwrap();
    let g = QUARTIC_CONE_GENS
        .iter()
        .map(|s| r.parse(s).unwrap())
        .collect();
    (r, g)
}

pub fn diagonal() -> (RingSpec, Vec<Poly>) {
    let block = |i: usize| {
        let mut d = vec![0i64; 3];
        d[i] = 1;
        d
    };
    let degs = (0..9).map(|v| block(v / 3)).collect();
    let r = RingSpec::with_degrees(&DIAGONAL_VARS, 3, degs).unwrap();
    let g = DIAGONAL_GENS.iter().map(|s| r.parse(s).unwrap()).collect();
    (r, g)
}

pub fn ideal(vars: &[&str], gens: &[&str]) -> (RingSpec, Vec<Poly>) {
    let r = RingSpec::new(vars).unwrap();
    let g = gens.iter().map(|s| r.parse(s).unwrap()).collect();
    (r, g)
}

pub fn row(r: &RingSpec, g: &[Poly]) -> Matrix {
    Matrix::row_vector(g, r.nx(), 0)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Standard-graded Hilbert function of `S/I` from the Macaulay matrix in
/// degree `e`: all monomial multiples of the (homogeneous) generators.
pub fn macaulay_hilbert(nx: usize, gens: &[Poly], e: u32) -> usize {
    let monos: Vec<Monomial> = monomials_of_degree(nx, e)
        .iter()
        .map(|x| Monomial::from_exponents(nx, x))
        .collect();
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let dg = g.leading_monomial().unwrap().total_degree();
        if dg > e {
            continue;
        }
        for x in monomials_of_degree(nx, e - dg) {
            let mu = Monomial::from_exponents(nx, &x);
            let mut v = vec![q(0); monos.len()];
            for (m, c) in g.mul_term(&mu, &q(1)).terms() {
                v[index[m]] = c.clone();
            }
            rows.push(v);
        }
    }
    if rows.is_empty() {
        return monos.len();
    }
    monos.len() - ScalarMatrix::from_row_vecs(monos.len(), rows).rank()
}
