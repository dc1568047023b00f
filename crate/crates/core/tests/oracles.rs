mod common;

use common::*;
use versal_core::cotangent::{Cotangent, Mode};
use versal_core::groebner::{
    graded_piece_basis, hilbert_function, koszul_syzygies, module_quotient_lift, syzygy_matrix,
    GroebnerBasis, Vector,
};
use versal_core::polyring::Monomial;
use versal_core::{Basis, Matrix, Poly};

#[test]
fn rational_normal_cone_hilbert_function_is_linear() {
    let (r, g) = quartic_cone();
    let gb = Basis::ideal(&g, 5, 0);
    for e in 0..6u32 {
        let from_gb = hilbert_function(&gb, &r, &[e as i64]).unwrap();
        assert_eq!(from_gb, macaulay_hilbert(5, &g, e), "degree {e}");
        assert_eq!(from_gb, 4 * e as usize + 1, "degree {e}");
    }
}

#[test]
fn borel_ideal_piece_by_enumeration() {
    let (r, g) = diagonal();
    let gb = Basis::ideal(&g, 9, 0);
    // monomials y_i z_j avoiding every generator, by direct divisibility
    let leads: Vec<Monomial> = g
        .iter()
        .map(|p| p.leading_monomial().unwrap().clone())
        .collect();
    let mut count = 0;
    for i in 3..6 {
        for j in 6..9 {
            let mut e = vec![0u16; 9];
            e[i] = 1;
            e[j] = 1;
            let m = Monomial::from_exponents(9, &e);
            if !leads.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
        }
    }
    assert_eq!(count, 6);
    assert_eq!(hilbert_function(&gb, &r, &[0, 1, 1]).unwrap(), count);
}

#[test]
fn normal_form_of_cube() {
    let (r, g) = quartic_cone();
    let gb = Basis::ideal(&g, 5, 0);
    let x1_cubed: Poly = r.parse("x1^3").unwrap();
    // one division step by x1^2 - x0*x2
    let step = &x1_cubed - &(&g[0] * &r.parse::<versal_core::Rational>("x1").unwrap());
    assert_eq!(r.format(&step), "x0*x1*x2");
    let nf = gb.normal_form_poly(&x1_cubed);
    assert_eq!(r.format(&nf), "x0^2*x3");
    assert!(gb.normal_form_poly(&(&x1_cubed - &nf)).is_zero());
}

#[test]
fn rational_normal_cone_syzygies() {
    let (r, g) = quartic_cone();
    let f = row(&r, &g);
    let s = syzygy_matrix(&f, &r);
    assert_eq!(s.cols(), 8);
    assert!(f.try_mul(&s).unwrap().is_zero());
    assert_eq!(s.col_degrees().unwrap(), vec![vec![3]; 8].as_slice());
    // every Koszul relation is a combination of the minimal ones
    let k = koszul_syzygies(&f);
    let lam = module_quotient_lift(&s, &k, None).unwrap().unwrap();
    assert_eq!(s.try_mul(&lam).unwrap(), k);
    // minimality: no column lies in the span of the others
    for j in 0..8 {
        let others: Vec<usize> = (0..8).filter(|&i| i != j).collect();
        let rest = s.select_columns(&others).strip_degrees();
        let col = s.select_columns(&[j]).strip_degrees();
        assert!(module_quotient_lift(&rest, &col, None).unwrap().is_none());
    }
}

/// A reference set of tangent vectors (for the negated generators, same
/// relations) represent the same space as the computed basis.
#[test]
fn reference_tangent_vectors_span_the_same_space() {
    let (r, g) = quartic_cone();
    let ctx = Cotangent::new(&r, &row(&r, &g)).unwrap();
    let t1 = ctx.t1(&Mode::GradedPiece(vec![-1])).unwrap();
    assert_eq!((t1.columns.rows(), t1.columns.cols()), (6, 4));
    let reference = [
        ["x1", "0", "-x3", "0", "-x4", "0"],
        ["x0", "0", "-x2", "0", "-x3", "0"],
        ["0", "0", "0", "x2", "x3", "x4"],
        ["0", "x0", "x1", "0", "0", "-x3"],
    ];
    // trivial deformations: I * S^6 plus the Jacobian columns times S
    let mut gens: Vec<Vector<versal_core::Rational>> = Vec::new();
    for p in &g {
        for a in 0..6 {
            gens.push(Vector::unit(6, a, p));
        }
    }
    for v in 0..5 {
        let col: Vec<Poly> = g.iter().map(|p| p.partial_derivative(v)).collect();
        gens.push(Vector::from_components(&col, 5, 0));
    }
    let trivial = GroebnerBasis::new(&gens, 6, 5, 0);
    let as_vec = |col: Vec<Poly>| trivial.normal_form(&Vector::from_components(&col, 5, 0));
    let ours: Vec<_> = (0..4).map(|j| as_vec(t1.columns.column(j))).collect();
    let theirs: Vec<_> = reference
        .iter()
        .map(|c| as_vec(c.iter().map(|s| r.parse(s).unwrap()).collect()))
        .collect();
    let relations = ctx.relations();
    for c in reference {
        let phi: Vec<Poly> = c.iter().map(|s| r.parse(s).unwrap()).collect();
        let prod = Matrix::row_vector(&phi, 5, 0).try_mul(relations).unwrap();
        for p in prod.entries() {
            assert!(ctx.ideal_basis().normal_form_poly(p).is_zero());
        }
    }
    let rank = |vs: &[Vector<versal_core::Rational>]| {
        let piece = graded_piece_basis(&trivial, &r, &vec![vec![0]; 6], &[1]).unwrap();
        let rows: Vec<Vec<versal_core::Rational>> =
            vs.iter().map(|v| piece.coordinates(v).unwrap()).collect();
        versal_core::exactla::ScalarMatrix::from_row_vecs(piece.dim(), rows).rank()
    };
    assert_eq!(rank(&ours), 4);
    assert_eq!(rank(&theirs), 4);
    let both: Vec<_> = ours.iter().chain(&theirs).cloned().collect();
    assert_eq!(rank(&both), 4);
}

#[test]
fn obstruction_space_of_rational_normal_cone() {
    let (r, g) = quartic_cone();
    let ctx = Cotangent::new(&r, &row(&r, &g)).unwrap();
    let t2 = ctx.t2(&Mode::Local).unwrap();
    assert_eq!((t2.columns.rows(), t2.columns.cols()), (8, 3));
    assert_eq!(
        t2.columns.row_degrees().unwrap(),
        vec![vec![-3]; 8].as_slice()
    );
}

#[test]
fn borel_ideal_pieces() {
    let (r, g) = diagonal();
    let ctx = Cotangent::new(&r, &row(&r, &g)).unwrap();
    let n = ctx.normal_matrix(&[0, 0, 0]).unwrap();
    assert_eq!(n.dim(), 18);
    let t2 = ctx.t2(&Mode::GradedPiece(vec![0, 0, 0])).unwrap();
    assert_eq!(t2.dim(), 8);
}
