mod common;

use common::*;
use proptest::prelude::*;
use versal_core::exactla::ScalarMatrix;
use versal_core::groebner::{koszul_syzygies, module_quotient_lift, syzygy_matrix, GroebnerBasis};
use versal_core::polyring::{monomials_of_degree, Monomial, Polynomial, RingSpec};
use versal_core::{Basis, Fp, Matrix, Poly};

fn ring3() -> RingSpec {
    RingSpec::new(&["x", "y", "z"]).unwrap()
}

fn poly_from(nx: usize, terms: &[([u16; 3], i64)]) -> Poly {
    Polynomial::from_terms(
        nx,
        0,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(nx, &e[..nx]), q(*c))),
    )
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(([0u16..4, 0u16..4, 0u16..4], -5i64..6), 0..6)
        .prop_map(|t| poly_from(3, &t))
}

/// A homogeneous polynomial of degree `d` in three variables.
fn arb_homogeneous(d: u32) -> impl Strategy<Value = Poly> {
    let monos = monomials_of_degree(3, d);
    let n = monos.len();
    prop::collection::vec(-3i64..4, n).prop_map(move |cs| {
        Polynomial::from_terms(
            3,
            0,
            monos
                .iter()
                .zip(cs)
                .map(|(e, c)| (Monomial::from_exponents(3, e), q(c))),
        )
    })
}

fn arb_ideal() -> impl Strategy<Value = Vec<Poly>> {
    prop::collection::vec((1u32..3).prop_flat_map(arb_homogeneous), 1..4)
        .prop_map(|v| v.into_iter().filter(|p| !p.is_zero()).collect::<Vec<_>>())
        .prop_filter("nonempty", |v: &Vec<Poly>| !v.is_empty())
}

/// Membership of a homogeneous `p` by linear algebra on all degree-`deg p`
/// multiples of the generators.
fn brute_force_member(gens: &[Poly], p: &Poly) -> bool {
    if p.is_zero() {
        return true;
    }
    let e = p.leading_monomial().unwrap().total_degree();
    let monos = monomials_of_degree(3, e);
    let idx = |m: &Monomial| {
        monos
            .iter()
            .position(|x| x.as_slice() == m.exponents())
            .unwrap()
    };
    let mut rows = Vec::new();
    for g in gens {
        let dg = g.leading_monomial().unwrap().total_degree();
        if dg > e {
            continue;
        }
        for x in monomials_of_degree(3, e - dg) {
            let mut v = vec![q(0); monos.len()];
            for (m, c) in g.mul_term(&Monomial::from_exponents(3, &x), &q(1)).terms() {
                v[idx(m)] = c.clone();
            }
            rows.push(v);
        }
    }
    let mut target = vec![q(0); monos.len()];
    for (m, c) in p.terms() {
        target[idx(m)] = c.clone();
    }
    let base = if rows.is_empty() {
        0
    } else {
        ScalarMatrix::from_row_vecs(monos.len(), rows.clone()).rank()
    };
    rows.push(target);
    ScalarMatrix::from_row_vecs(monos.len(), rows).rank() == base
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn leading_monomial_is_multiplicative(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = &a * &b;
        prop_assert_eq!(ab.leading_monomial().unwrap(), &a.leading_monomial().unwrap().mul(b.leading_monomial().unwrap()));
    }

    #[test]
    fn print_parse_round_trip(a in arb_poly()) {
        let r = ring3();
        let back: Poly = r.parse(&r.format(&a)).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn t_truncation_commutes_with_products(a in arb_poly(), b in arb_poly(), k in 0u32..4) {
        // read z as the single parameter
        let r = RingSpec::new(&["x", "y"]).unwrap().with_parameters(&["t"], None).unwrap();
        let lift = |p: &Poly| -> Poly { r.parse(&ring3().format(p).replace('z', "t")).unwrap() };
        let (a, b) = (lift(&a), lift(&b));
        let full = (&a * &b).t_truncate(k);
        let trunc = (&a.t_truncate(k) * &b.t_truncate(k)).t_truncate(k);
        prop_assert_eq!(full, trunc);
        for (j, piece) in (0..=k).map(|j| (j, a.t_part_of_order(j))) {
            prop_assert!(piece.is_t_homogeneous_of_order(j));
        }
    }

    #[test]
    fn syzygies_annihilate_and_generate(gens in arb_ideal()) {
        let r = ring3();
        let f = Matrix::row_vector(&gens, 3, 0);
        let s = syzygy_matrix(&f, &r);
        prop_assert!(f.try_mul(&s).unwrap().is_zero());
        let k = koszul_syzygies(&f);
        prop_assert!(module_quotient_lift(&s.clone().strip_degrees(), &k, None).unwrap().is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Buchberger membership agrees with degree-truncated linear algebra.
    #[test]
    fn membership_matches_linear_algebra(
        gens in arb_ideal(),
        mults in prop::collection::vec((0u32..3).prop_flat_map(arb_homogeneous), 3),
        noise in arb_homogeneous(3),
        perturb in any::<bool>(),
    ) {
        let gb = Basis::ideal(&gens, 3, 0);
        // a degree-3 element built from the generators, optionally perturbed
        let mut p = Polynomial::zero(3, 0);
        for (g, h) in gens.iter().zip(&mults) {
            let dg = g.leading_monomial().unwrap().total_degree();
            let hd = h.leading_monomial().map(|m| m.total_degree());
            if hd == Some(3u32.saturating_sub(dg)) && dg <= 3 {
                p = &p + &(g * h);
            }
        }
        if perturb {
            p = &p + &noise;
        }
        prop_assert_eq!(gb.contains(&versal_core::groebner::Vector::unit(1, 0, &p)), brute_force_member(&gens, &p));
        for g in &gens {
            prop_assert!(gb.normal_form_poly(g).is_zero());
        }
    }

    /// Bases over a prime field reduce their own generators to zero.
    #[test]
    fn prime_field_basis_reduces_generators(gens in arb_ideal()) {
        type F = Fp<101>;
        let conv = |p: &Poly| -> Polynomial<F> {
            Polynomial::from_terms(3, 0, p.terms().iter().map(|(m, c)| {
                (m.clone(), <F as versal_core::Field>::from_fraction(c.numer(), c.denom()).unwrap())
            }))
        };
        let gs: Vec<Polynomial<F>> = gens.iter().map(conv).filter(|p| !p.is_zero()).collect();
        let gb = GroebnerBasis::ideal(&gs, 3, 0);
        for g in &gs {
            prop_assert!(gb.normal_form_poly(g).is_zero());
        }
    }
}
