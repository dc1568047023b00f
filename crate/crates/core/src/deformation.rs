//! Order-by-order lifting of first-order deformations.
//!
//! The state holds truncated power series in the parameters `t` for the
//! family `F`, its relations `R`, the base equations `G` and the
//! coefficient matrix `C`, subject to
//!
//! ```text
//! transpose(F · R) + C · G ≡ 0   mod (t)^(order + 1)
//! ```
//!
//! Each step solves for the next order in two parts: the error modulo the
//! relation module and the span of the obstruction representatives fixes
//! the corrections to `F` and `G`; what remains lies in the ideal and fixes
//! the corrections to `R`.

use std::collections::BTreeMap;

use crate::cotangent::{Cotangent, Mode, TangentBasis};
use crate::error::{Error, Result};
use crate::exactla::ScalarMatrix;
use crate::field::Field;
use crate::groebner::{GroebnerBasis, Lifter, ModMono, PolyMatrix, Vector};
use crate::polyring::{Monomial, Polynomial, RingSpec};

/// Matrix-valued power series in the parameters, stored by exact t-order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TOrderSeries<C> {
    rows: usize,
    cols: usize,
    nx: usize,
    nt: usize,
    pieces: Vec<PolyMatrix<C>>,
}

impl<C: Field> TOrderSeries<C> {
    pub fn new(rows: usize, cols: usize, nx: usize, nt: usize) -> Self {
        TOrderSeries {
            rows,
            cols,
            nx,
            nt,
            pieces: Vec::new(),
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn pieces(&self) -> &[PolyMatrix<C>] {
        &self.pieces
    }

    /// Piece of order `k`, zero when absent.
    pub fn piece(&self, k: usize) -> PolyMatrix<C> {
        self.pieces
            .get(k)
            .cloned()
            .unwrap_or_else(|| PolyMatrix::zeros(self.rows, self.cols, self.nx, self.nt))
    }

    /// Highest order with a nonzero piece.
    pub fn top_order(&self) -> Option<usize> {
        self.pieces.iter().rposition(|p| !p.is_zero())
    }

    /// Add `m` into the piece of order `k`.
    pub fn add_to_piece(&mut self, k: usize, m: &PolyMatrix<C>) {
        while self.pieces.len() <= k {
            self.pieces
                .push(PolyMatrix::zeros(self.rows, self.cols, self.nx, self.nt));
        }
        self.pieces[k] = self.pieces[k].try_add(m).expect("series piece shape");
    }

    /// Add every term of `p` at entry `(i, j)` into the piece matching its t-order.
    pub fn add_entry(&mut self, i: usize, j: usize, p: &Polynomial<C>) {
        let mut by_order: BTreeMap<u32, Vec<(Monomial, C)>> = BTreeMap::new();
        for (m, c) in p.terms() {
            by_order
                .entry(m.t_degree())
                .or_default()
                .push((m.clone(), c.clone()));
        }
        for (k, terms) in by_order {
            let k = k as usize;
            let mut m = PolyMatrix::zeros(self.rows, self.cols, self.nx, self.nt);
            m.set(i, j, Polynomial::from_terms(self.nx, self.nt, terms));
            self.add_to_piece(k, &m);
        }
    }

    pub fn sum(&self) -> PolyMatrix<C> {
        let mut acc = PolyMatrix::zeros(self.rows, self.cols, self.nx, self.nt);
        for p in &self.pieces {
            acc = acc.try_add(p).expect("series piece shape");
        }
        acc
    }

    /// Drop pieces above order `k`.
    pub fn truncate(&mut self, k: usize) {
        self.pieces.truncate(k + 1);
    }

    /// Every piece `j` contains only terms of t-degree `j`.
    pub fn is_order_homogeneous(&self) -> bool {
        self.pieces.iter().enumerate().all(|(j, m)| {
            m.entries()
                .iter()
                .all(|p| p.is_t_homogeneous_of_order(j as u32))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    InProgress,
    /// The defining identity holds exactly, with no truncation.
    Polynomial,
    /// Stopped at the order limit.
    Truncated,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::InProgress => "in-progress",
            Status::Polynomial => "polynomial",
            Status::Truncated => "truncated",
        }
    }
}

/// A solution of the deformation equation modulo `(t)^(order + 1)`.
#[derive(Clone, Debug)]
pub struct DeformationState<C> {
    /// The ring `S[t]`, parameters named `t1 .. tn`.
    pub ring: RingSpec,
    /// `1 x m`
    pub f: TOrderSeries<C>,
    /// `m x l`
    pub r: TOrderSeries<C>,
    /// `d x 1`, entries free of `x`
    pub g: TOrderSeries<C>,
    /// `l x d`
    pub c: TOrderSeries<C>,
    pub order: usize,
    pub status: Status,
}

impl<C: Field> DeformationState<C> {
    pub fn parameters(&self) -> usize {
        self.ring.nt()
    }

    /// `transpose(sum F · sum R) + sum C · sum G`, an `l x 1` matrix.
    pub fn residual(&self) -> PolyMatrix<C> {
        let fr = self
            .f
            .sum()
            .try_mul(&self.r.sum())
            .expect("F and R shapes")
            .transpose();
        let cg = self.c.sum().try_mul(&self.g.sum()).expect("C and G shapes");
        fr.try_add(&cg).expect("residual shapes").strip_degrees()
    }

    /// The base equations as polynomials in the parameters only.
    pub fn base_equations(&self) -> Vec<Polynomial<C>> {
        self.g.sum().column(0).iter().map(|p| p.t_only()).collect()
    }
}

/// Outcome of [`verify_state`].
#[derive(Clone, Debug)]
pub struct VerifyReport<C> {
    /// Nonzero residual entries `(row, value)` after reduction.
    pub residuals: Vec<(usize, Polynomial<C>)>,
    /// Whether the residual was checked without truncation.
    pub exact: bool,
    /// Named structural checks with their outcome.
    pub checks: Vec<(String, bool)>,
}

impl<C> VerifyReport<C> {
    pub fn ok(&self) -> bool {
        self.residuals.is_empty() && self.checks.iter().all(|(_, b)| *b)
    }
}

/// Recompute the deformation equation and the structural invariants.
pub fn verify_state<C: Field>(state: &DeformationState<C>) -> VerifyReport<C> {
    let exact = state.status == Status::Polynomial;
    let res = state.residual();
    let residuals = (0..res.rows())
        .filter_map(|i| {
            let p = res.get(i, 0);
            let p = if exact {
                p.clone()
            } else {
                p.t_truncate(state.order as u32)
            };
            (!p.is_zero()).then_some((i, p))
        })
        .collect();
    let (m, l, d) = (state.f.shape().1, state.r.shape().1, state.g.shape().0);
    let g_low = (0..2).all(|k| state.g.piece(k).is_zero());
    let g_free = state
        .g
        .sum()
        .entries()
        .iter()
        .all(|p| p.terms().iter().all(|(mono, _)| mono.x_degree() == 0));
    let within = |s: &TOrderSeries<C>| s.top_order().is_none_or(|k| k <= state.order);
    let checks = vec![
        (
            "shapes".to_string(),
            state.f.shape() == (1, m)
                && state.r.shape() == (m, l)
                && state.g.shape() == (d, 1)
                && state.c.shape() == (l, d),
        ),
        (
            "order homogeneity".to_string(),
            state.f.is_order_homogeneous()
                && state.r.is_order_homogeneous()
                && state.g.is_order_homogeneous()
                && state.c.is_order_homogeneous(),
        ),
        ("G vanishes below order 2".to_string(), g_low),
        ("G free of x".to_string(), g_free),
        (
            "pieces within order".to_string(),
            within(&state.f) && within(&state.r) && within(&state.g),
        ),
    ];
    VerifyReport {
        residuals,
        exact,
        checks,
    }
}

/// Precomputed data for lifting one ideal against a fixed obstruction basis.
#[derive(Debug)]
pub struct Lifting<C> {
    ring: RingSpec,
    gens: Vec<Polynomial<C>>,
    relations: PolyMatrix<C>,
    obstructions: PolyMatrix<C>,
    ideal: GroebnerBasis<C>,
    /// Solves against `rows(R0) + I · S^l`.
    relation_lifter: Option<Lifter<C>>,
    /// Normal forms of the obstruction columns modulo the same module.
    reduced_obstructions: Vec<Vector<C>>,
}

fn embed<C: Field>(p: &Polynomial<C>, nt: usize) -> Polynomial<C> {
    p.with_nt(nt)
}

/// Group the terms of `p` by their x-monomial, giving polynomials in `t` only.
fn split_by_x<C: Field>(p: &Polynomial<C>) -> BTreeMap<Monomial, Polynomial<C>> {
    let mut groups: BTreeMap<Monomial, Vec<(Monomial, C)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        groups
            .entry(m.x_part())
            .or_default()
            .push((m.t_part(), c.clone()));
    }
    groups
        .into_iter()
        .map(|(x, terms)| (x, Polynomial::from_terms(0, p.nt(), terms)))
        .collect()
}

impl<C: Field> Lifting<C> {
    /// `t2` columns live in `S^l` for the relations of `ctx`.
    pub fn new(ctx: &Cotangent<C>, t2: &TangentBasis<C>) -> Result<Self> {
        let relations = ctx.relations().clone().strip_degrees();
        let l = relations.cols();
        if t2.ambient_rank() != l {
            return Err(Error::DimensionMismatch(format!(
                "obstruction vectors have {} entries but there are {l} relations",
                t2.ambient_rank()
            )));
        }
        let gens = ctx.generators().to_vec();
        let nx = ctx.ring().nx();
        let ideal = GroebnerBasis::ideal_with_tracking(&gens, nx, 0);
        let (relation_lifter, reduced_obstructions) = if l > 0 {
            let lifter = Lifter::new(&relations.transpose().strip_degrees(), Some(&gens));
            let reduced = t2
                .columns
                .column_vectors()
                .iter()
                .map(|v| lifter.normal_form(v))
                .collect();
            (Some(lifter), reduced)
        } else {
            (None, Vec::new())
        };
        Ok(Lifting {
            ring: ctx.ring().clone(),
            gens,
            relations,
            obstructions: t2.columns.clone().strip_degrees(),
            ideal,
            relation_lifter,
            reduced_obstructions,
        })
    }

    /// Ring `S[t1..tn]`; parameter degrees are the negated column degrees
    /// when those match the grading.
    fn parameter_ring(&self, t1: &TangentBasis<C>) -> Result<RingSpec> {
        let names: Vec<String> = (1..=t1.dim()).map(|i| format!("t{i}")).collect();
        let rank = self.ring.grading_rank();
        let degrees = (t1.mode != Mode::Local && t1.column_degrees.iter().all(|d| d.len() == rank))
            .then(|| {
                t1.column_degrees
                    .iter()
                    .map(|d| d.iter().map(|x| -x).collect())
                    .collect()
            });
        self.ring.with_parameters(&names, degrees)
    }

    /// Order-one solution `F = F0 + Σ t_i φ_i` with matching relations.
    pub fn first_order(&self, t1: &TangentBasis<C>) -> Result<DeformationState<C>> {
        let (m, l, d) = (
            self.gens.len(),
            self.relations.cols(),
            self.obstructions.cols(),
        );
        if t1.ambient_rank() != m {
            return Err(Error::DimensionMismatch(format!(
                "tangent vectors have {} entries but there are {m} generators",
                t1.ambient_rank()
            )));
        }
        let ring = self.parameter_ring(t1)?;
        let (nx, nt) = (ring.nx(), ring.nt());
        let mut f = TOrderSeries::new(1, m, nx, nt);
        let mut r = TOrderSeries::new(m, l, nx, nt);
        let g = TOrderSeries::new(d, 1, nx, nt);
        let mut c = TOrderSeries::new(l, d, nx, nt);
        f.add_to_piece(0, &PolyMatrix::row_vector(&self.gens, nx, 0).with_nt(nt));
        r.add_to_piece(0, &self.relations.with_nt(nt));
        c.add_to_piece(0, &self.obstructions.with_nt(nt));
        for i in 0..nt {
            let t = Monomial::var(nx, nt, nx + i);
            let phi = t1.columns.column(i);
            for (a, p) in phi.iter().enumerate() {
                f.add_entry(0, a, &embed(p, nt).mul_term(&t, &C::one()));
            }
            for j in 0..l {
                let mut w = Polynomial::zero(nx, 0);
                for (a, p) in phi.iter().enumerate() {
                    w = &w + &(p * self.relations.get(a, j));
                }
                let (rest, cof) = self.ideal.reduce_poly_with_cofactors(&w);
                if !rest.is_zero() {
                    return Err(Error::LiftFailed(format!(
                        "tangent vector {} is not compatible with the relations",
                        i + 1
                    )));
                }
                for (a, q) in cof.iter().enumerate() {
                    add_nonzero(&mut r, a, j, &embed(q, nt).mul_term(&t, &-C::one()));
                }
            }
        }
        let status = if nt == 0 {
            Status::Polynomial
        } else {
            Status::InProgress
        };
        Ok(DeformationState {
            ring,
            f,
            r,
            g,
            c,
            order: 1,
            status,
        })
    }
}

fn add_nonzero<C: Field>(s: &mut TOrderSeries<C>, i: usize, j: usize, p: &Polynomial<C>) {
    if !p.is_zero() {
        s.add_entry(i, j, p);
    }
}

/// Entry-wise sum of products of pieces whose orders add up to `k`.
fn product_order_part<C: Field>(
    a: &TOrderSeries<C>,
    b: &TOrderSeries<C>,
    k: usize,
) -> Result<PolyMatrix<C>> {
    let (rows, cols) = (a.shape().0, b.shape().1);
    let (nx, nt) = (a.nx, a.nt);
    let mut acc = PolyMatrix::zeros(rows, cols, nx, nt);
    for (i, pa) in a.pieces().iter().enumerate().take(k + 1) {
        if pa.is_zero() {
            continue;
        }
        let Some(pb) = b.pieces().get(k - i) else {
            continue;
        };
        if pb.is_zero() {
            continue;
        }
        acc = acc.try_add(&pa.try_mul(pb)?)?;
    }
    Ok(acc)
}

impl<C: Field> Lifting<C> {
    /// The order-`k` part of `transpose(F R) + C G`, as `l` polynomials.
    fn error_at(&self, st: &DeformationState<C>, k: usize) -> Result<Vec<Polynomial<C>>> {
        let fr = product_order_part(&st.f, &st.r, k)?;
        let cg = product_order_part(&st.c, &st.g, k)?;
        Ok((0..fr.cols())
            .map(|j| fr.get(0, j) + cg.get(j, 0))
            .collect())
    }

    /// Advance `st` by one order. Returns whether any correction was nonzero.
    pub fn step(&self, st: &mut DeformationState<C>) -> Result<bool> {
        let next = st.order + 1;
        let (nx, nt) = (st.ring.nx(), st.ring.nt());
        let (m, l, d) = (
            self.gens.len(),
            self.relations.cols(),
            self.obstructions.cols(),
        );
        let mut error = self.error_at(st, next)?;
        let mut changed = false;

        // Reduce the error modulo the initial forms of the base equations.
        let gsum = st.g.sum();
        let mut initial: Vec<(usize, u32, Polynomial<C>)> = Vec::new();
        for k in 0..d {
            let p = gsum.get(k, 0);
            if let Some(o) = p.t_order() {
                initial.push((k, o, p.t_part_of_order(o).t_only()));
            }
        }
        if !initial.is_empty() {
            let polys: Vec<Polynomial<C>> = initial.iter().map(|(_, _, p)| p.clone()).collect();
            let jgb = GroebnerBasis::ideal_with_tracking(&polys, 0, nt);
            for (j, e) in error.iter_mut().enumerate() {
                let mut kept = Polynomial::zero(nx, nt);
                for (mu, coeff) in split_by_x(e) {
                    let mu = Monomial::join(&mu, &Monomial::one(0, nt));
                    let (rest, cof) = jgb.reduce_poly_with_cofactors(&coeff);
                    kept = &kept + &Polynomial::from_t_only(&rest, nx).mul_term(&mu, &C::one());
                    for ((k, _, _), q) in initial.iter().zip(&cof) {
                        let q = Polynomial::from_t_only(q, nx).mul_term(&mu, &-C::one());
                        if !q.is_zero() {
                            changed = true;
                            st.c.add_entry(j, *k, &q);
                        }
                    }
                }
                *e = kept;
            }
        }

        // Split by t-monomial and solve each coefficient separately.
        let mut groups: BTreeMap<Monomial, Vec<Polynomial<C>>> = BTreeMap::new();
        for (j, e) in error.iter().enumerate() {
            for (tau, xp) in e.split_by_t() {
                groups
                    .entry(tau)
                    .or_insert_with(|| vec![Polynomial::zero(nx, 0); l])[j] = xp;
            }
        }
        if let Some(lifter) = &self.relation_lifter {
            for (tau, comps) in groups.iter().rev() {
                let w = Vector::from_components(comps, nx, 0);
                let coeffs = self.obstruction_coefficients(lifter, &w, next)?;
                let mut target = w;
                for (k, a) in coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    changed = true;
                    target = target.add(&self.obstructions.column_vector(k).scale(a));
                    let tm = Polynomial::from_terms(
                        nx,
                        nt,
                        [(Monomial::join(&Monomial::one(nx, 0), tau), a.clone())],
                    );
                    st.g.add_entry(k, 0, &tm);
                }
                let (x, y) = lifter
                    .lift_split(&target)
                    .ok_or_else(|| Error::LiftFailed(format!("order {next} correction")))?;
                for (a, p) in x.components().iter().enumerate() {
                    if !p.is_zero() {
                        changed = true;
                        st.f.add_entry(0, a, &-Polynomial::attach_t(p, tau));
                    }
                }
                let ys = y.components();
                for a in 0..m {
                    for j in 0..l {
                        let p = &ys[a * l + j];
                        if !p.is_zero() {
                            changed = true;
                            st.r.add_entry(a, j, &-Polynomial::attach_t(p, tau));
                        }
                    }
                }
            }
        }
        st.order = next;
        Ok(changed)
    }

    /// Scalars `a` with `w + Σ a_k V_k` in the relation module plus `I · S^l`.
    fn obstruction_coefficients(
        &self,
        lifter: &Lifter<C>,
        w: &Vector<C>,
        order: usize,
    ) -> Result<Vec<C>> {
        let d = self.reduced_obstructions.len();
        let b = lifter.normal_form(w);
        if b.is_zero() {
            return Ok(vec![C::zero(); d]);
        }
        let mut keys: BTreeMap<ModMono, usize> = BTreeMap::new();
        for v in self.reduced_obstructions.iter().chain(std::iter::once(&b)) {
            for (k, _) in v.terms() {
                let n = keys.len();
                keys.entry(k.clone()).or_insert(n);
            }
        }
        let mut a = ScalarMatrix::zeros(keys.len(), d);
        for (col, v) in self.reduced_obstructions.iter().enumerate() {
            for (k, c) in v.terms() {
                a[(keys[k], col)] = c.clone();
            }
        }
        let mut rhs = vec![C::zero(); keys.len()];
        for (k, c) in b.terms() {
            rhs[keys[k]] = -c.clone();
        }
        a.solve(&rhs)?.ok_or(Error::UncoveredObstruction { order })
    }
}

/// Environment variable overriding the default order limit.
pub const MAX_ORDER_ENV: &str = "VERSAL_MAX_ORDER";
pub const DEFAULT_MAX_ORDER: usize = 20;

#[derive(Clone, Debug)]
pub struct Options {
    pub max_order: usize,
    /// 0 silent, 1 final status line, 2 one line per order.
    pub verbosity: u8,
}

impl Default for Options {
    fn default() -> Self {
        let max_order = std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_ORDER);
        Options {
            max_order,
            verbosity: 0,
        }
    }
}

impl<C: Field> Lifting<C> {
    /// Lift until the identity holds exactly or the order limit is reached.
    pub fn run(
        &self,
        mut st: DeformationState<C>,
        opts: &Options,
        log: &mut dyn FnMut(&str),
    ) -> Result<DeformationState<C>> {
        if st.status == Status::Polynomial {
            if opts.verbosity >= 1 {
                log("Solution is polynomial");
            }
            return Ok(st);
        }
        if opts.verbosity >= 2 {
            log("Starting lifting");
        }
        while st.order < opts.max_order {
            if opts.verbosity >= 2 {
                log(&format!("Order {}", st.order + 1));
            }
            self.step(&mut st)?;
            if st.residual().is_zero() {
                st.status = Status::Polynomial;
                break;
            }
        }
        if st.status != Status::Polynomial {
            st.status = Status::Truncated;
        }
        if opts.verbosity >= 1 {
            log(match st.status {
                Status::Polynomial => "Solution is polynomial",
                _ => "Solution truncated at the order limit",
            });
        }
        Ok(st)
    }
}

/// Versal deformation of the ideal in `ctx`. Omitted bases are computed
/// in local mode.
pub fn versal_deformation<C: Field>(
    ctx: &Cotangent<C>,
    t1: Option<TangentBasis<C>>,
    t2: Option<TangentBasis<C>>,
    opts: &Options,
    log: &mut dyn FnMut(&str),
) -> Result<DeformationState<C>> {
    if opts.max_order < 1 {
        return Err(Error::InvalidArgument(
            "the order limit must be at least 1".into(),
        ));
    }
    let verbose = opts.verbosity >= 2;
    let (t1, t2) = match (t1, t2) {
        (Some(a), Some(b)) => (a, b),
        (a, b) => {
            if verbose {
                log("Calculating first order deformations and obstruction space");
            }
            let a = match a {
                Some(a) => a,
                None => ctx.t1(&Mode::Local)?,
            };
            let b = match b {
                Some(b) => b,
                None => ctx.t2(&Mode::Local)?,
            };
            (a, b)
        }
    };
    let lifting = Lifting::new(ctx, &t2)?;
    if verbose {
        log("Calculating first order relations");
    }
    let st = lifting.first_order(&t1)?;
    lifting.run(st, opts, log)
}

/// Order-one state for the given bases.
pub fn first_order<C: Field>(
    ctx: &Cotangent<C>,
    t1: &TangentBasis<C>,
    t2: &TangentBasis<C>,
) -> Result<DeformationState<C>> {
    Lifting::new(ctx, t2)?.first_order(t1)
}

/// Advance `st` by one order.
pub fn lift_step<C: Field>(
    ctx: &Cotangent<C>,
    st: &mut DeformationState<C>,
    t2: &TangentBasis<C>,
) -> Result<bool> {
    Lifting::new(ctx, t2)?.step(st)
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

    fn quiet() -> Options {
        Options {
            max_order: 20,
            verbosity: 0,
        }
    }

    #[test]
    fn series_pieces_by_order() {
        let r = RingSpec::new(&["x"])
            .unwrap()
            .with_parameters(&["t1", "t2"], None)
            .unwrap();
        let p: Polynomial<Q> = r.parse("x + x*t1 + t1*t2 - t2^2 + 3").unwrap();
        let mut s = TOrderSeries::new(1, 1, 1, 2);
        s.add_entry(0, 0, &p);
        assert_eq!(s.pieces().len(), 3);
        assert!(s.is_order_homogeneous());
        assert_eq!(s.sum().get(0, 0), &p);
        assert_eq!(s.top_order(), Some(2));
        s.truncate(1);
        assert_eq!(s.sum().get(0, 0), &p.t_truncate(1));
    }

    #[test]
    fn quadric_is_unobstructed() {
        let c = ctx(&["x", "y", "z"], &["x^2 + y^2 + z^2"]);
        let mut log = Vec::new();
        let opts = Options {
            max_order: 20,
            verbosity: 2,
        };
        let st =
            versal_deformation(&c, None, None, &opts, &mut |s| log.push(s.to_string())).unwrap();
        assert_eq!(st.status, Status::Polynomial);
        assert_eq!(st.g.top_order(), None);
        assert_eq!(st.r.shape(), (1, 0));
        let f = st.f.sum();
        assert_eq!(st.ring.format(f.get(0, 0)), "x^2 + y^2 + z^2 + t1");
        assert_eq!(log.last().unwrap(), "Solution is polynomial");
        assert!(log.iter().any(|l| l == "Starting lifting"));
    }

    #[test]
    fn smooth_input_is_trivial() {
        let c = ctx(&["x", "y"], &["x"]);
        let st = versal_deformation(&c, None, None, &quiet(), &mut |_| {}).unwrap();
        assert_eq!(st.status, Status::Polynomial);
        assert_eq!(st.parameters(), 0);
        assert_eq!(st.order, 1);
    }

    #[test]
    fn order_limit_truncates() {
        let c = ctx(&["x", "y", "z"], &["x^2 + y^2 + z^2"]);
        let opts = Options {
            max_order: 1,
            verbosity: 0,
        };
        let st = versal_deformation(&c, None, None, &opts, &mut |_| {}).unwrap();
        assert_eq!(st.status, Status::Truncated);
        let zero = Options {
            max_order: 0,
            verbosity: 0,
        };
        assert!(versal_deformation(&c, None, None, &zero, &mut |_| {}).is_err());
    }

    #[test]
    fn corrupted_state_is_flagged() {
        let c = ctx(&["x", "y", "z"], &["x*y", "y*z", "x*z"]);
        let mut st = versal_deformation(&c, None, None, &quiet(), &mut |_| {}).unwrap();
        assert!(verify_state(&st).ok());
        let mut r1 = st.r.piece(1);
        let bump = r1.get(0, 0) + &Polynomial::var(3, st.parameters(), 3);
        r1.set(0, 0, bump);
        st.r.add_to_piece(1, &r1.try_add(&st.r.piece(1).neg()).unwrap());
        let rep = verify_state(&st);
        assert!(!rep.ok());
        assert!(!rep.residuals.is_empty());
    }
}
