use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{Exp, Monomial, RingSpec};

use super::buchberger::GroebnerBasis;
use super::vector::{ModMono, Vector};

/// All x-monomials of multidegree `d`, in descending monomial order.
pub fn monomials_of_multidegree(ring: &RingSpec, d: &[i64]) -> Result<Vec<Monomial>> {
    if !ring.is_positively_graded() {
        return Err(Error::NonPositiveGrading);
    }
    if d.len() != ring.grading_rank() {
        return Err(Error::DimensionMismatch(format!(
            "degree {d:?} has length {} but the grading has rank {}",
            d.len(),
            ring.grading_rank()
        )));
    }
    let n = ring.nx();
    let target = RingSpec::weight(d);
    let weights: Vec<i64> = ring
        .x_degrees()
        .iter()
        .map(|w| RingSpec::weight(w))
        .collect();
    let degs = ring.x_degree_refs();
    let mut out = Vec::new();
    if target < 0 || d.iter().any(|&c| c < 0) {
        return Ok(out);
    }
    let mut cur = vec![0 as Exp; n];
    fn rec(i: usize, left: i64, weights: &[i64], cur: &mut Vec<Exp>, emit: &mut dyn FnMut(&[Exp])) {
        if i == weights.len() {
            if left == 0 {
                emit(cur);
            }
            return;
        }
        let w = weights[i];
        let mut e = 0;
        while e * w <= left {
            cur[i] = e as Exp;
            rec(i + 1, left - e * w, weights, cur, emit);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut emit = |exps: &[Exp]| {
        let m = Monomial::from_exponents(n, exps);
        if m.weighted_degree(&degs, ring.grading_rank()) == d {
            out.push(m);
        }
    };
    rec(0, target, &weights, &mut cur, &mut emit);
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Labeled monomial coordinates for one graded piece of `R^rank / M`.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    labels: Vec<ModMono>,
    index: HashMap<ModMono, usize>,
}

impl GradedPiece {
    pub fn from_labels(labels: Vec<ModMono>) -> Self {
        let index = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        GradedPiece { labels, index }
    }

    pub fn labels(&self) -> &[ModMono] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, k: &ModMono) -> Option<usize> {
        self.index.get(k).copied()
    }

    /// Coordinates of a normal-form vector; `None` if it leaves the piece.
    pub fn coordinates<C: Field>(&self, v: &Vector<C>) -> Option<Vec<C>> {
        let mut out = vec![C::zero(); self.labels.len()];
        for (k, c) in v.terms() {
            out[self.index_of(k)?] = c.clone();
        }
        Some(out)
    }

    /// Rebuild the vector with the given coordinates.
    pub fn vector<C: Field>(&self, coords: &[C], rank: usize, nx: usize, nt: usize) -> Vector<C> {
        let map = self
            .labels
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        Vector::from_map(rank, nx, nt, map)
    }
}

/// Standard monomial basis of the degree-`d` piece of `R^rank / M`, where
/// `gb` is a basis of `M` and basis vector `e_i` has degree `shifts[i]`.
pub fn graded_piece_basis<C: Field>(
    gb: &GroebnerBasis<C>,
    ring: &RingSpec,
    shifts: &[Vec<i64>],
    d: &[i64],
) -> Result<GradedPiece> {
    if shifts.len() != gb.rank() {
        return Err(Error::DimensionMismatch(
            "one shift per module component".into(),
        ));
    }
    let mut labels = Vec::new();
    for (pos, s) in shifts.iter().enumerate() {
        let e: Vec<i64> = d.iter().zip(s).map(|(a, b)| a - b).collect();
        for mono in monomials_of_multidegree(ring, &e)? {
            let key = ModMono { mono, pos };
            if gb.is_standard(&key) {
                labels.push(key);
            }
        }
    }
    Ok(GradedPiece::from_labels(labels))
}

/// Number of standard monomials of degree `d` for an ideal basis.
pub fn hilbert_function<C: Field>(
    gb: &GroebnerBasis<C>,
    ring: &RingSpec,
    d: &[i64],
) -> Result<usize> {
    let zero = vec![0i64; ring.grading_rank()];
    Ok(graded_piece_basis(gb, ring, &[zero], d)?.dim())
}

/// Ungraded finite-dimensionality test for `R / I`: every variable has a pure
/// power among the leading monomials.
pub fn is_zero_dimensional<C: Field>(gb: &GroebnerBasis<C>) -> bool {
    let n = gb.nx() + gb.nt();
    let leads = gb.leading_keys();
    (0..n).all(|v| {
        leads.iter().any(|k| {
            let e = k.mono.exponents();
            e[v] > 0 && e.iter().enumerate().all(|(i, &x)| i == v || x == 0)
        }) || leads.iter().any(|k| k.mono.is_one())
    })
}

/// Largest total degree of a standard monomial of a zero-dimensional ideal
/// (`None` for the unit ideal).
pub fn max_standard_degree<C: Field>(gb: &GroebnerBasis<C>) -> Result<Option<u32>> {
    if gb.is_unit_ideal() {
        return Ok(None);
    }
    if !is_zero_dimensional(gb) {
        return Err(Error::InfiniteDimensional(
            "ideal is not zero-dimensional".into(),
        ));
    }
    let n = gb.nx();
    let mut best = 0;
    let mut deg = 0u32;
    loop {
        let mut any = false;
        for exps in crate::polyring::monomials_of_degree(n, deg) {
            let key = ModMono {
                mono: Monomial::from_exponents(n, &exps),
                pos: 0,
            };
            if gb.is_standard(&key) {
                any = true;
                break;
            }
        }
        if !any {
            return Ok(Some(best));
        }
        best = deg;
        deg += 1;
    }
}

/// Every standard monomial of a zero-dimensional ideal basis, in
/// descending order. Empty for the unit ideal.
pub fn standard_monomials<C: Field>(gb: &GroebnerBasis<C>) -> Result<Vec<Monomial>> {
    if gb.is_unit_ideal() {
        return Ok(Vec::new());
    }
    if !is_zero_dimensional(gb) {
        return Err(Error::InfiniteDimensional(
            "ideal is not zero-dimensional".into(),
        ));
    }
    let (nx, nt) = (gb.nx(), gb.nt());
    let mut seen = std::collections::HashSet::new();
    let mut frontier = vec![Monomial::one(nx, nt)];
    seen.insert(Monomial::one(nx, nt));
    while let Some(m) = frontier.pop() {
        for v in 0..nx + nt {
            let next = m.mul(&Monomial::var(nx, nt, v));
            if seen.contains(&next) {
                continue;
            }
            if gb.is_standard(&ModMono {
                mono: next.clone(),
                pos: 0,
            }) {
                seen.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Polynomial;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn free_ring_piece() {
        let r = RingSpec::new(&["x0", "x1", "x2", "x3", "x4"]).unwrap();
        let gb = GroebnerBasis::<Q>::ideal(&[], 5, 0);
        assert_eq!(hilbert_function(&gb, &r, &[2]).unwrap(), 15);
        assert_eq!(hilbert_function(&gb, &r, &[-1]).unwrap(), 0);
    }

    #[test]
    fn monomial_ideal_counts() {
        let r = RingSpec::new(&["x", "y"]).unwrap();
        let gens: Vec<Polynomial<Q>> = ["x^2", "x*y", "y^2"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let gb = GroebnerBasis::ideal(&gens, 2, 0);
        assert_eq!(hilbert_function(&gb, &r, &[2]).unwrap(), 0);
        assert_eq!(hilbert_function(&gb, &r, &[1]).unwrap(), 2);
        assert_eq!(hilbert_function(&gb, &r, &[0]).unwrap(), 1);
        assert!(is_zero_dimensional(&gb));
        assert_eq!(max_standard_degree(&gb).unwrap(), Some(1));
        assert_eq!(standard_monomials(&gb).unwrap().len(), 3);
    }

    #[test]
    fn non_positive_grading_rejected() {
        let r = RingSpec::with_degrees(&["x", "y"], 1, vec![vec![1], vec![-1]]).unwrap();
        let gb = GroebnerBasis::<Q>::ideal(&[], 2, 0);
        assert_eq!(
            hilbert_function(&gb, &r, &[0]),
            Err(Error::NonPositiveGrading)
        );
    }
}
