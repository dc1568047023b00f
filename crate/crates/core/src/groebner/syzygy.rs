use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{Polynomial, RingSpec};

use super::buchberger::GroebnerBasis;
use super::matrix::PolyMatrix;
use super::vector::Vector;

/// Column degrees of `f`, read off its entries (row degrees default to zero).
/// `None` if some column is inhomogeneous or mixes degrees across rows.
pub fn infer_column_degrees<C: Field>(f: &PolyMatrix<C>, ring: &RingSpec) -> Option<Vec<Vec<i64>>> {
    if let Some(cd) = f.col_degrees() {
        return Some(cd.to_vec());
    }
    let zero = vec![0i64; ring.grading_rank()];
    let rd: Vec<Vec<i64>> = f
        .row_degrees()
        .map(|r| r.to_vec())
        .unwrap_or_else(|| vec![zero.clone(); f.rows()]);
    let mut out = Vec::with_capacity(f.cols());
    for j in 0..f.cols() {
        let mut deg: Option<Vec<i64>> = None;
        for (i, rdi) in rd.iter().enumerate() {
            let p = f.get(i, j);
            if p.is_zero() {
                continue;
            }
            let d: Vec<i64> = ring
                .multi_degree(p)?
                .iter()
                .zip(rdi)
                .map(|(a, b)| a + b)
                .collect();
            match &deg {
                None => deg = Some(d),
                Some(e) if *e != d => return None,
                _ => {}
            }
        }
        out.push(deg.unwrap_or_else(|| zero.clone()));
    }
    Some(out)
}

/// Degree of a module element of `R^m` whose basis vectors carry `shifts`.
fn vector_degree<C: Field>(
    v: &Vector<C>,
    shifts: &[Vec<i64>],
    ring: &RingSpec,
) -> Option<Vec<i64>> {
    let mut deg: Option<Vec<i64>> = None;
    for (k, _) in v.terms() {
        let d: Vec<i64> = ring
            .monomial_degree(&k.mono)?
            .iter()
            .zip(&shifts[k.pos])
            .map(|(a, b)| a + b)
            .collect();
        match &deg {
            None => deg = Some(d),
            Some(e) if *e != d => return None,
            _ => {}
        }
    }
    deg
}

/// Drop generators that lie in the submodule spanned by earlier kept ones.
///
/// With `shifts` (graded case) candidates are processed by increasing degree,
/// which yields a minimal generating set; otherwise the result still
/// generates but need not be minimal.
pub fn minimalize<C: Field>(
    cands: Vec<Vector<C>>,
    rank: usize,
    nx: usize,
    nt: usize,
    shifts: Option<(&[Vec<i64>], &RingSpec)>,
) -> Vec<Vector<C>> {
    let mut keyed: Vec<(i64, u32, usize, Vector<C>)> = cands
        .into_iter()
        .filter(|v| !v.is_zero())
        .enumerate()
        .map(|(idx, v)| {
            let w = shifts
                .and_then(|(s, r)| vector_degree(&v, s, r))
                .map(|d| RingSpec::weight(&d))
                .unwrap_or(0);
            let td = v.leading_key().unwrap().mono.total_degree();
            (w, td, idx, v)
        })
        .collect();
    keyed.sort_by_key(|k| (k.0, k.1, k.2));
    let mut kept: Vec<Vector<C>> = Vec::new();
    let mut gb = GroebnerBasis::new(&[], rank, nx, nt);
    for (_, _, _, v) in keyed {
        if gb.contains(&v) {
            continue;
        }
        kept.push(v);
        gb = GroebnerBasis::new(&kept, rank, nx, nt);
    }
    kept
}

/// Generators of the first syzygies of the columns of `f`: an `m x l` matrix
/// `R` with `f · R = 0` whose columns generate every relation.
///
/// For homogeneous input the columns are a minimal generating set and the
/// result carries degree data (rows: column degrees of `f`).
pub fn syzygy_matrix<C: Field>(f: &PolyMatrix<C>, ring: &RingSpec) -> PolyMatrix<C> {
    let (nx, nt) = (f.nx(), f.nt());
    let cols = f.column_vectors();
    let m = cols.len();
    let gb = GroebnerBasis::with_tracking(&cols, f.rows(), nx, nt);
    let raw = gb.original_syzygies();
    let degs = infer_column_degrees(f, ring);
    let syz = minimalize(raw, m, nx, nt, degs.as_deref().map(|d| (d, ring)));
    let out = PolyMatrix::from_column_vectors(&syz, m, nx, nt);
    match degs {
        Some(d) => {
            let cd: Option<Vec<Vec<i64>>> =
                syz.iter().map(|v| vector_degree(v, &d, ring)).collect();
            match cd {
                Some(cd) => out.with_degrees(d, cd),
                None => out,
            }
        }
        None => out,
    }
}

/// The trivial relations `f_j e_i - f_i e_j` (`i < j`) of a `1 x m` matrix.
pub fn koszul_syzygies<C: Field>(f: &PolyMatrix<C>) -> PolyMatrix<C> {
    assert_eq!(f.rows(), 1, "koszul syzygies need a single row");
    let (nx, nt) = (f.nx(), f.nt());
    let m = f.cols();
    let mut cols = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut col = vec![Polynomial::zero(nx, nt); m];
            col[i] = f.get(0, j).clone();
            col[j] = -f.get(0, i);
            cols.push(col);
        }
    }
    PolyMatrix::from_columns(&cols, m, nx, nt)
}

/// Reusable solver for `A · X ≡ B (mod J)`.
#[derive(Clone, Debug)]
pub struct Lifter<C> {
    gb: GroebnerBasis<C>,
    n: usize,
}

impl<C: Field> Lifter<C> {
    /// `a` is `r x n`; `ideal` (if any) is applied entrywise.
    pub fn new(a: &PolyMatrix<C>, ideal: Option<&[Polynomial<C>]>) -> Self {
        let (nx, nt) = (a.nx(), a.nt());
        let r = a.rows();
        let mut gens = a.column_vectors();
        if let Some(j) = ideal {
            for h in j {
                for i in 0..r {
                    gens.push(Vector::unit(r, i, h));
                }
            }
        }
        Lifter {
            gb: GroebnerBasis::with_tracking(&gens, r, nx, nt),
            n: a.cols(),
        }
    }

    pub fn basis(&self) -> &GroebnerBasis<C> {
        &self.gb
    }

    /// Normal form of `b` modulo `im A + J·R^r`.
    pub fn normal_form(&self, b: &Vector<C>) -> Vector<C> {
        self.gb.normal_form(b)
    }

    /// Some `x` with `A x ≡ b (mod J)`, or `None`.
    pub fn lift(&self, b: &Vector<C>) -> Option<Vector<C>> {
        self.lift_split(b).map(|(x, _)| x)
    }

    /// As [`lift`](Self::lift) but also returns the coefficients on the
    /// `J`-generators (ordered generator-major, then row).
    pub fn lift_split(&self, b: &Vector<C>) -> Option<(Vector<C>, Vector<C>)> {
        let (r, q) = self.gb.reduce_with_cofactors(b);
        if !r.is_zero() {
            return None;
        }
        let total = q.rank();
        Some((q.restrict(0..self.n), q.restrict(self.n..total)))
    }
}

/// Solve `A · X ≡ B (mod J)` column by column; `None` when some column has no solution.
pub fn module_quotient_lift<C: Field>(
    a: &PolyMatrix<C>,
    b: &PolyMatrix<C>,
    ideal: Option<&[Polynomial<C>]>,
) -> Result<Option<PolyMatrix<C>>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "lift of a {}-row matrix through a {}-row matrix",
            b.rows(),
            a.rows()
        )));
    }
    let lifter = Lifter::new(a, ideal);
    let mut cols = Vec::with_capacity(b.cols());
    for bj in b.column_vectors() {
        match lifter.lift(&bj) {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(PolyMatrix::from_column_vectors(
        &cols,
        a.cols(),
        a.nx(),
        a.nt(),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn row(r: &RingSpec, gens: &[&str]) -> PolyMatrix<Q> {
        let p: Vec<Polynomial<Q>> = gens.iter().map(|s| r.parse(s).unwrap()).collect();
        PolyMatrix::row_vector(&p, r.nx(), 0)
    }

    #[test]
    fn principal_has_no_syzygies() {
        let r = RingSpec::new(&["x", "y"]).unwrap();
        let s = syzygy_matrix(&row(&r, &["x^2 + y^3"]), &r);
        assert_eq!(s.cols(), 0);
    }

    #[test]
    fn koszul_pair() {
        let r = RingSpec::new(&["x", "y"]).unwrap();
        let f = row(&r, &["x", "y"]);
        let s = syzygy_matrix(&f, &r);
        assert_eq!(s.cols(), 1);
        assert!(f.try_mul(&s).unwrap().is_zero());
        let k = koszul_syzygies(&f);
        assert_eq!(
            k.column(0),
            vec![r.parse::<Q>("y").unwrap(), r.parse("-x").unwrap()]
        );
        assert_eq!(koszul_syzygies(&row(&r, &["x"])).cols(), 0);
    }

    #[test]
    fn lift_failure_and_success() {
        let r = RingSpec::new(&["x", "y"]).unwrap();
        let a = row(&r, &["x"]);
        let b = row(&r, &["1"]);
        assert!(module_quotient_lift(&a, &b, None).unwrap().is_none());
        let b2 = row(&r, &["x*y + x"]);
        let x = module_quotient_lift(&a, &b2, None).unwrap().unwrap();
        assert_eq!(a.try_mul(&x).unwrap(), b2);
        // modulo J = (y): 1 is not in (x, y) but x*y + x ≡ x is
        let j: Vec<Polynomial<Q>> = vec![r.parse("y").unwrap()];
        let b3 = row(&r, &["x + y^2"]);
        assert!(module_quotient_lift(&a, &b3, Some(&j)).unwrap().is_some());
        assert!(module_quotient_lift(&a, &b, Some(&j)).unwrap().is_none());
        assert!(module_quotient_lift(&a, &PolyMatrix::zeros(2, 1, 2, 0), None).is_err());
    }
}
