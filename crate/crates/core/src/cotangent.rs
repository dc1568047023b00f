//! Normal module, first-order deformations and obstruction spaces.
//!
//! Every space is computed one graded piece at a time: a homomorphism is
//! stored through the standard-monomial coordinates of its entries modulo
//! the ideal, its defining conditions become a scalar kernel, and the
//! trivial part is quotiented out with [`quotient_basis`].
//!
//! In local mode the relevant degrees are swept. The sweep stops above the
//! top degree of `S / (I + Jacobian minors)`, which must be finite.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactla::{quotient_basis, ScalarMatrix};
use crate::field::Field;
use crate::groebner::{
    infer_column_degrees, koszul_syzygies, module_quotient_lift, monomials_of_multidegree,
    standard_monomials, syzygy_matrix, GradedPiece, GroebnerBasis, ModMono, PolyMatrix, Vector,
};
use crate::polyring::{Polynomial, RingSpec};

/// Which part of a space a basis describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// The homogeneous piece of the given degree.
    GradedPiece(Vec<i64>),
    /// All degrees, under the finiteness hypothesis of an isolated singularity.
    Local,
}

/// Basis of a homomorphism space `Hom(-, S/I)`: each column is one
/// homomorphism, with entries in normal form modulo the ideal.
#[derive(Clone, Debug)]
pub struct TangentBasis<C> {
    pub columns: PolyMatrix<C>,
    pub mode: Mode,
    /// Degree of each column as a homomorphism.
    pub column_degrees: Vec<Vec<i64>>,
}

impl<C: Field> TangentBasis<C> {
    pub fn dim(&self) -> usize {
        self.columns.cols()
    }

    /// Rank of the free module the homomorphisms are defined on.
    pub fn ambient_rank(&self) -> usize {
        self.columns.rows()
    }
}

/// Degree data needed to enumerate graded pieces.
#[derive(Clone, Debug)]
struct Grading {
    ring: RingSpec,
    gens: Vec<Vec<i64>>,
    syz: Vec<Vec<i64>>,
}

/// Cached data for one ideal: its basis, its relations and the matrices
/// used for obstructions.
#[derive(Debug)]
pub struct Cotangent<C> {
    ring: RingSpec,
    gens: Vec<Polynomial<C>>,
    ideal: GroebnerBasis<C>,
    relations: PolyMatrix<C>,
    grading: Option<Grading>,
    obstruction: OnceLock<Result<Option<ObstructionData<C>>>>,
    local_bound: OnceLock<Result<Option<i64>>>,
}

/// `lambda` expresses the Koszul relations through the relations; `second`
/// are the relations among the relations. `None` means the Koszul relations
/// generate everything, so obstructions vanish.
#[derive(Clone, Debug)]
struct ObstructionData<C> {
    lambda: PolyMatrix<C>,
    second: PolyMatrix<C>,
}

impl<C: Field> Cotangent<C> {
    /// `f0` is the `1 x m` matrix of nonzero generators in `ring` (no parameters).
    pub fn new(ring: &RingSpec, f0: &PolyMatrix<C>) -> Result<Self> {
        if f0.rows() != 1 {
            return Err(Error::DimensionMismatch(format!(
                "generators must form a single row, got {} rows",
                f0.rows()
            )));
        }
        if f0.nx() != ring.nx() || f0.nt() != 0 {
            return Err(Error::RingMismatch(
                format!("{} variables", ring.nx()),
                format!("{} x and {} t variables", f0.nx(), f0.nt()),
            ));
        }
        let gens = f0.row(0);
        if gens.iter().any(|g| g.is_zero()) {
            return Err(Error::InvalidArgument("generators must be nonzero".into()));
        }
        let f0 = f0.clone().strip_degrees();
        let ideal = GroebnerBasis::ideal(&gens, ring.nx(), 0);
        let relations = syzygy_matrix(&f0, ring);
        let grading = if ring.is_positively_graded() {
            match (infer_column_degrees(&f0, ring), relations.col_degrees()) {
                (Some(g), Some(s)) => Some(Grading {
                    ring: ring.clone(),
                    gens: g,
                    syz: s.to_vec(),
                }),
                (Some(g), None) if relations.cols() == 0 => Some(Grading {
                    ring: ring.clone(),
                    gens: g,
                    syz: Vec::new(),
                }),
                _ => None,
            }
        } else {
            None
        };
        Ok(Cotangent {
            ring: ring.clone(),
            gens,
            ideal,
            relations,
            grading,
            obstruction: OnceLock::new(),
            local_bound: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.gens
    }

    pub fn ideal_basis(&self) -> &GroebnerBasis<C> {
        &self.ideal
    }

    /// Minimal relations among the generators (`m x l`).
    pub fn relations(&self) -> &PolyMatrix<C> {
        &self.relations
    }

    /// Whether every generator is homogeneous for a positive grading.
    pub fn is_graded(&self) -> bool {
        self.grading.is_some()
    }

    /// Degrees of the generators, when graded.
    pub fn generator_degrees(&self) -> Option<&[Vec<i64>]> {
        self.grading.as_ref().map(|g| g.gens.as_slice())
    }

    /// Degrees of the relations, when graded.
    pub fn relation_degrees(&self) -> Option<&[Vec<i64>]> {
        self.grading.as_ref().map(|g| g.syz.as_slice())
    }

    fn graded(&self) -> Result<&Grading> {
        if !self.ring.is_positively_graded() {
            return Err(Error::NonPositiveGrading);
        }
        self.grading.as_ref().ok_or_else(|| {
            Error::Ungraded("generators are not homogeneous for the declared grading".into())
        })
    }

    fn check_degree(&self, d: &[i64]) -> Result<()> {
        if d.len() != self.ring.grading_rank() {
            return Err(Error::DimensionMismatch(format!(
                "degree {d:?} has length {} but the grading has rank {}",
                d.len(),
                self.ring.grading_rank()
            )));
        }
        Ok(())
    }
}

fn shifted(d: &[i64], s: &[i64]) -> Vec<i64> {
    d.iter().zip(s).map(|(a, b)| a + b).collect()
}

impl<C: Field> Cotangent<C> {
    /// Coordinates for tuples whose entry `a` lies in `(S/I)_{d + shifts[a]}`.
    fn hom_piece(&self, g: &Grading, shifts: &[Vec<i64>], d: &[i64]) -> Result<GradedPiece> {
        let mut labels = Vec::new();
        for (pos, s) in shifts.iter().enumerate() {
            for mono in monomials_of_multidegree(&g.ring, &shifted(d, s))? {
                let key = ModMono { mono, pos: 0 };
                if self.ideal.is_standard(&key) {
                    labels.push(ModMono {
                        mono: key.mono,
                        pos,
                    });
                }
            }
        }
        Ok(GradedPiece::from_labels(labels))
    }

    fn reduce(&self, p: &Polynomial<C>) -> Polynomial<C> {
        self.ideal.normal_form_poly(p)
    }

    /// For each coordinate `(mu, a)` of `piece`, the reduced row `mu * mat[a, -]`.
    fn row_images(&self, piece: &GradedPiece, mat: &PolyMatrix<C>) -> Vec<Vec<Polynomial<C>>> {
        piece
            .labels()
            .iter()
            .map(|k| {
                (0..mat.cols())
                    .map(|j| self.reduce(&mat.get(k.pos, j).mul_term(&k.mono, &C::one())))
                    .collect()
            })
            .collect()
    }

    /// Scalar kernel of the map sending coordinate `k` to `images[k]`.
    fn kernel(&self, dim: usize, images: &[Vec<Polynomial<C>>]) -> Vec<Vec<C>> {
        let mut rows: HashMap<(usize, crate::polyring::Monomial), usize> = HashMap::new();
        for img in images {
            for (j, p) in img.iter().enumerate() {
                for (m, _) in p.terms() {
                    let next = rows.len();
                    rows.entry((j, m.clone())).or_insert(next);
                }
            }
        }
        let mut mat = ScalarMatrix::zeros(rows.len(), dim);
        for (k, img) in images.iter().enumerate() {
            for (j, p) in img.iter().enumerate() {
                for (m, c) in p.terms() {
                    mat[(rows[&(j, m.clone())], k)] = c.clone();
                }
            }
        }
        let ker = mat.kernel_basis();
        (0..ker.cols()).map(|c| ker.column(c)).collect()
    }

    /// Coordinates of reduced tuples that are known to lie in `piece`.
    fn coordinates(&self, piece: &GradedPiece, tuples: &[Vec<Polynomial<C>>]) -> Vec<Vec<C>> {
        tuples
            .iter()
            .map(|t| {
                let v = Vector::from_components(t, self.ring.nx(), 0);
                piece
                    .coordinates(&v)
                    .expect("image stays in its graded piece")
            })
            .collect()
    }

    fn to_basis(
        &self,
        piece: &GradedPiece,
        rank: usize,
        coords: &[Vec<C>],
        row_shifts: &[Vec<i64>],
        d: &[i64],
        mode: Mode,
    ) -> TangentBasis<C> {
        let nx = self.ring.nx();
        let cols: Vec<Vec<Polynomial<C>>> = coords
            .iter()
            .map(|c| piece.vector(c, rank, nx, 0).components())
            .collect();
        let rd = row_shifts
            .iter()
            .map(|s| s.iter().map(|x| -x).collect())
            .collect();
        let cd = vec![d.to_vec(); cols.len()];
        TangentBasis {
            columns: PolyMatrix::from_columns(&cols, rank, nx, 0).with_degrees(rd, cd.clone()),
            mode,
            column_degrees: cd,
        }
    }
}

impl<C: Field> Cotangent<C> {
    fn obstruction_data(&self) -> Result<Option<&ObstructionData<C>>> {
        let cell = self.obstruction.get_or_init(|| {
            let r0 = &self.relations;
            if r0.cols() == 0 {
                return Ok(None);
            }
            let f0 = PolyMatrix::row_vector(&self.gens, self.ring.nx(), 0);
            let k = koszul_syzygies(&f0);
            if k.cols() > 0
                && module_quotient_lift(&k, &r0.clone().strip_degrees(), None)?.is_some()
            {
                return Ok(None);
            }
            let lambda =
                module_quotient_lift(&r0.clone().strip_degrees(), &k, None)?.ok_or_else(|| {
                    Error::LiftFailed("Koszul relations outside the relation module".into())
                })?;
            let second = syzygy_matrix(r0, &self.ring);
            Ok(Some(ObstructionData { lambda, second }))
        });
        match cell {
            Ok(o) => Ok(o.as_ref()),
            Err(e) => Err(e.clone()),
        }
    }

    fn normal_piece(&self, g: &Grading, d: &[i64]) -> Result<(GradedPiece, Vec<Vec<C>>)> {
        let piece = self.hom_piece(g, &g.gens, d)?;
        let images = self.row_images(&piece, &self.relations);
        let ker = self.kernel(piece.dim(), &images);
        Ok((piece, ker))
    }

    fn normal_in(&self, g: &Grading, d: &[i64], mode: Mode) -> Result<TangentBasis<C>> {
        let (piece, ker) = self.normal_piece(g, d)?;
        let basis = quotient_basis(piece.dim(), &[], &ker);
        Ok(self.to_basis(&piece, self.gens.len(), &basis, &g.gens, d, mode))
    }

    fn t1_in(&self, g: &Grading, d: &[i64], mode: Mode) -> Result<TangentBasis<C>> {
        let (piece, ker) = self.normal_piece(g, d)?;
        let mut trivial = Vec::new();
        if piece.dim() > 0 {
            for v in 0..self.ring.nx() {
                let partials: Vec<Polynomial<C>> =
                    self.gens.iter().map(|f| f.partial_derivative(v)).collect();
                let hd = shifted(d, &g.ring.x_degrees()[v]);
                for h in monomials_of_multidegree(&g.ring, &hd)? {
                    let tuple: Vec<Polynomial<C>> = partials
                        .iter()
                        .map(|p| self.reduce(&p.mul_term(&h, &C::one())))
                        .collect();
                    trivial.push(tuple);
                }
            }
        }
        let trivial = self.coordinates(&piece, &trivial);
        let basis = quotient_basis(piece.dim(), &trivial, &ker);
        Ok(self.to_basis(&piece, self.gens.len(), &basis, &g.gens, d, mode))
    }

    fn t2_in(&self, g: &Grading, d: &[i64], mode: Mode) -> Result<TangentBasis<C>> {
        let l = self.relations.cols();
        let Some(ob) = self.obstruction_data()? else {
            let empty = GradedPiece::from_labels(Vec::new());
            return Ok(self.to_basis(&empty, l, &[], &g.syz, d, mode));
        };
        let piece = self.hom_piece(g, &g.syz, d)?;
        let mut images = self.row_images(&piece, &ob.lambda);
        for (img, extra) in images.iter_mut().zip(self.row_images(&piece, &ob.second)) {
            img.extend(extra);
        }
        let ker = self.kernel(piece.dim(), &images);
        let eta = self.hom_piece(g, &g.gens, d)?;
        let cob = self.row_images(&eta, &self.relations);
        let cob = self.coordinates(&piece, &cob);
        let basis = quotient_basis(piece.dim(), &cob, &ker);
        Ok(self.to_basis(&piece, l, &basis, &g.syz, d, mode))
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

struct Minors<'a, C> {
    jac: &'a [Vec<Polynomial<C>>],
    cache: HashMap<(Vec<usize>, Vec<usize>), Polynomial<C>>,
}

impl<C: Field> Minors<'_, C> {
    fn det(&mut self, rows: &[usize], cols: &[usize]) -> Polynomial<C> {
        if rows.len() == 1 {
            return self.jac[rows[0]][cols[0]].clone();
        }
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(p) = self.cache.get(&key) {
            return p.clone();
        }
        let nx = self.jac[0][0].nx();
        let mut acc = Polynomial::zero(nx, 0);
        for (i, &c) in cols.iter().enumerate() {
            let e = &self.jac[rows[0]][c];
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e * &self.det(&rows[1..], &rest);
            acc = if i % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        self.cache.insert(key, acc.clone());
        acc
    }
}

/// How far past the predicted top degree a local sweep may run.
const SWEEP_SLACK: i64 = 64;

impl<C: Field> Cotangent<C> {
    /// Generators of `I` plus the maximal Jacobian minors not lying in `I`.
    pub fn singular_locus_ideal(&self) -> Vec<Polynomial<C>> {
        let (m, n) = (self.gens.len(), self.ring.nx());
        let jac: Vec<Vec<Polynomial<C>>> = self
            .gens
            .iter()
            .map(|f| {
                (0..n)
                    .map(|v| self.reduce(&f.partial_derivative(v)))
                    .collect()
            })
            .collect();
        let mut minors = Minors {
            jac: &jac,
            cache: HashMap::new(),
        };
        let mut best: Vec<Polynomial<C>> = Vec::new();
        for c in 1..=m.min(n) {
            let mut found: Vec<Polynomial<C>> = Vec::new();
            for rows in combinations(m, c) {
                for cols in combinations(n, c) {
                    let p = self.reduce(&minors.det(&rows, &cols));
                    if !p.is_zero() {
                        let p = p.monic();
                        if !found.contains(&p) {
                            found.push(p);
                        }
                    }
                }
            }
            if found.is_empty() {
                break;
            }
            best = found;
        }
        let mut out = self.gens.clone();
        out.extend(best);
        out
    }

    /// Top coarse degree of `S / (I + minors)`; `None` when that ring is zero.
    fn local_top(&self, coarse: &Grading) -> Result<Option<i64>> {
        let cell = self.local_bound.get_or_init(|| {
            let q = GroebnerBasis::ideal(&self.singular_locus_ideal(), self.ring.nx(), 0);
            let std = standard_monomials(&q).map_err(|_| {
                Error::InfiniteDimensional("the singular locus is not an isolated point".into())
            })?;
            Ok(std
                .iter()
                .map(|m| coarse.ring.monomial_degree(m).map_or(0, |d| d[0]))
                .max())
        });
        cell.clone()
    }

    fn coarse(&self) -> Result<Grading> {
        let g = self.graded().map_err(|_| {
            Error::Ungraded("local mode needs generators homogeneous for a positive grading".into())
        })?;
        let flat = |ds: &[Vec<i64>]| -> Vec<Vec<i64>> {
            ds.iter().map(|d| vec![RingSpec::weight(d)]).collect()
        };
        Ok(Grading {
            ring: RingSpec::with_degrees(self.ring.x_vars(), 1, flat(self.ring.x_degrees()))?,
            gens: flat(&g.gens),
            syz: flat(&g.syz),
        })
    }

    fn sweep(
        &self,
        shifts_of: impl Fn(&Grading) -> &[Vec<i64>],
        piece: impl Fn(&Grading, &[i64]) -> Result<TangentBasis<C>>,
    ) -> Result<TangentBasis<C>> {
        let coarse = self.coarse()?;
        let shifts = shifts_of(&coarse).to_vec();
        let rank = shifts.len();
        let rd: Vec<Vec<i64>> = shifts.iter().map(|s| vec![-s[0]]).collect();
        let mut cols: Vec<Vec<Polynomial<C>>> = Vec::new();
        let mut degs: Vec<Vec<i64>> = Vec::new();
        if rank > 0 {
            if let Some(top) = self.local_top(&coarse)? {
                let lo = -shifts.iter().map(|s| s[0]).max().unwrap_or(0);
                let hi = top + 1;
                let mut d = lo;
                loop {
                    let b = piece(&coarse, &[d])?;
                    let empty = b.dim() == 0;
                    for j in 0..b.dim() {
                        cols.push(b.columns.column(j));
                        degs.push(vec![d]);
                    }
                    if d >= hi && empty {
                        break;
                    }
                    if d > hi + SWEEP_SLACK {
                        return Err(Error::InfiniteDimensional(
                            "nonzero pieces beyond the expected degree range".into(),
                        ));
                    }
                    d += 1;
                }
            }
        }
        Ok(TangentBasis {
            columns: PolyMatrix::from_columns(&cols, rank, self.ring.nx(), 0)
                .with_degrees(rd, degs.clone()),
            mode: Mode::Local,
            column_degrees: degs,
        })
    }

    /// Degree-`d` piece of `Hom(I, S/I)`.
    pub fn normal_matrix(&self, d: &[i64]) -> Result<TangentBasis<C>> {
        self.check_degree(d)?;
        let g = self.graded()?;
        self.normal_in(g, d, Mode::GradedPiece(d.to_vec()))
    }

    /// First-order deformations: `Hom(I, S/I)` modulo derivations.
    pub fn t1(&self, mode: &Mode) -> Result<TangentBasis<C>> {
        match mode {
            Mode::GradedPiece(d) => {
                self.check_degree(d)?;
                self.t1_in(self.graded()?, d, mode.clone())
            }
            Mode::Local => self.sweep(|g| &g.gens, |g, d| self.t1_in(g, d, Mode::Local)),
        }
    }

    /// Obstruction space: homomorphisms on the relation module vanishing on
    /// Koszul relations, modulo those induced from the generators.
    pub fn t2(&self, mode: &Mode) -> Result<TangentBasis<C>> {
        match mode {
            Mode::GradedPiece(d) => {
                self.check_degree(d)?;
                self.t2_in(self.graded()?, d, mode.clone())
            }
            Mode::Local => {
                if self.obstruction_data()?.is_none() {
                    let l = self.relations.cols();
                    return Ok(TangentBasis {
                        columns: PolyMatrix::zeros(l, 0, self.ring.nx(), 0),
                        mode: Mode::Local,
                        column_degrees: Vec::new(),
                    });
                }
                self.sweep(|g| &g.syz, |g, d| self.t2_in(g, d, Mode::Local))
            }
        }
    }
}

pub fn normal_matrix<C: Field>(
    ring: &RingSpec,
    f0: &PolyMatrix<C>,
    d: &[i64],
) -> Result<TangentBasis<C>> {
    Cotangent::new(ring, f0)?.normal_matrix(d)
}

pub fn cotangent1<C: Field>(
    ring: &RingSpec,
    f0: &PolyMatrix<C>,
    mode: &Mode,
) -> Result<TangentBasis<C>> {
    Cotangent::new(ring, f0)?.t1(mode)
}

pub fn cotangent2<C: Field>(
    ring: &RingSpec,
    f0: &PolyMatrix<C>,
    mode: &Mode,
) -> Result<TangentBasis<C>> {
    Cotangent::new(ring, f0)?.t2(mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn ctx(vars: &[&str], gens: &[&str]) -> Cotangent<Q> {
        let r = RingSpec::new(vars).unwrap();
        let g: Vec<Polynomial<Q>> = gens.iter().map(|s| r.parse(s).unwrap()).collect();
        Cotangent::new(&r, &PolyMatrix::row_vector(&g, r.nx(), 0)).unwrap()
    }

    #[test]
    fn normal_module_of_monomial_curves() {
        assert_eq!(
            ctx(&["x", "y"], &["x*y"])
                .normal_matrix(&[0])
                .unwrap()
                .dim(),
            2
        );
        let n = ctx(&["x", "y"], &["x"]).normal_matrix(&[0]).unwrap();
        assert_eq!(n.dim(), 1);
        assert_eq!(
            n.columns.get(0, 0),
            &RingSpec::new(&["x", "y"]).unwrap().parse::<Q>("y").unwrap()
        );
    }

    #[test]
    fn quadric_cone_has_constant_deformation() {
        let c = ctx(&["x", "y", "z"], &["x^2 + y^2 + z^2"]);
        let t1 = c.t1(&Mode::Local).unwrap();
        assert_eq!(t1.dim(), 1);
        assert!(t1.columns.get(0, 0).is_constant());
        assert_eq!(t1.column_degrees, vec![vec![-2]]);
        assert_eq!(c.t2(&Mode::Local).unwrap().dim(), 0);
    }

    #[test]
    fn smooth_and_complete_intersection() {
        let c = ctx(&["x", "y"], &["x"]);
        assert_eq!(c.t1(&Mode::Local).unwrap().dim(), 0);
        let ci = ctx(&["x", "y", "z", "w"], &["x*y", "z*w"]);
        assert_eq!(ci.t2(&Mode::Local).unwrap().dim(), 0);
        assert_eq!(ci.t2(&Mode::GradedPiece(vec![-2])).unwrap().dim(), 0);
        assert!(matches!(
            ci.t1(&Mode::Local),
            Err(Error::InfiniteDimensional(_))
        ));
    }

    #[test]
    fn ungraded_and_bad_degree() {
        let c = ctx(&["x", "y"], &["x^2 + y^3"]);
        assert!(matches!(
            c.t1(&Mode::GradedPiece(vec![0])),
            Err(Error::Ungraded(_))
        ));
        assert!(matches!(c.t1(&Mode::Local), Err(Error::Ungraded(_))));
        let h = ctx(&["x", "y"], &["x*y"]);
        assert!(matches!(
            h.t1(&Mode::GradedPiece(vec![0, 0])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn weighted_cusp() {
        let r = RingSpec::with_degrees(&["x", "y"], 1, vec![vec![3], vec![2]]).unwrap();
        let f: Polynomial<Q> = r.parse("x^2 - y^3").unwrap();
        let c = Cotangent::new(&r, &PolyMatrix::row_vector(&[f], 2, 0)).unwrap();
        let t1 = c.t1(&Mode::Local).unwrap();
        // S / (f, x, y^2) = span{1, y}
        assert_eq!(t1.dim(), 2);
        assert_eq!(t1.column_degrees, vec![vec![-6], vec![-4]]);
    }

    #[test]
    fn singular_locus_of_node() {
        let c = ctx(&["x", "y"], &["x*y"]);
        let q = c.singular_locus_ideal();
        let gb = GroebnerBasis::ideal(&q, 2, 0);
        assert_eq!(standard_monomials(&gb).unwrap().len(), 1);
    }
}
