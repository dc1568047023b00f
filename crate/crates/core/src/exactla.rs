//! Dense linear algebra over an exact field.
//!
//! Pivot selection is deterministic (first nonzero entry scanning columns
//! left to right), so every basis computed here is reproducible.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Field> fmt::Debug for ScalarMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ScalarMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<C: Field> ScalarMatrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(ScalarMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Build with an explicit column count (so zero-row matrices keep their width).
    pub fn from_row_vecs(cols: usize, rows: Vec<Vec<C>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        let n = rows.len();
        ScalarMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_row_vecs(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| C::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[C] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<C>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<C> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[C]) -> Result<Vec<C>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(C::zero(), |acc, (a, b)| acc + a.clone() * b)
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv();
            for k in c..self.cols {
                if !self[(r, k)].is_zero() {
                    self[(r, k)] = self[(r, k)].clone() * &inv;
                }
            }
            let pivot_row: Vec<(usize, C)> = (c..self.cols)
                .filter(|&k| !self[(r, k)].is_zero())
                .map(|k| (k, self[(r, k)].clone()))
                .collect();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for (k, v) in &pivot_row {
                    self[(i, *k)] = self[(i, *k)].clone() - f.clone() * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of `{v : M v = 0}`, one per free column.
    pub fn kernel_basis(&self) -> Self {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k[(f, j)] = C::one();
            for (i, &p) in pivots.iter().enumerate() {
                k[(p, j)] = -red[(i, f)].clone();
            }
        }
        k
    }

    /// Some `x` with `M x = b`, free variables set to zero; `None` when inconsistent.
    pub fn solve(&self, b: &[C]) -> Result<Option<Vec<C>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} rows but right-hand side of length {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![C::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }
}

impl<C> std::ops::Index<(usize, usize)> for ScalarMatrix<C> {
    type Output = C;
    fn index(&self, (r, c): (usize, usize)) -> &C {
        &self.data[r * self.cols + c]
    }
}

impl<C> std::ops::IndexMut<(usize, usize)> for ScalarMatrix<C> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C {
        &mut self.data[r * self.cols + c]
    }
}

/// Incrementally maintained row space in reduced echelon form.
///
/// Used to choose canonical representatives of quotients `W / U`: insert a
/// basis of `U`, then reduce candidate vectors against it.
#[derive(Clone, Debug)]
pub struct RowSpace<C> {
    dim: usize,
    rows: Vec<(usize, Vec<C>)>,
}

impl<C: Field> RowSpace<C> {
    pub fn new(dim: usize) -> Self {
        RowSpace {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminate every pivot coordinate of the space from `v`.
    pub fn reduce(&self, v: &mut [C]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (k, rv) in row.iter().enumerate().skip(*p) {
                if !rv.is_zero() {
                    v[k] = v[k].clone() - f.clone() * rv;
                }
            }
        }
    }

    /// Insert `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, mut v: Vec<C>) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for c in v.iter_mut().skip(p) {
            if !c.is_zero() {
                *c = c.clone() * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (k, vv) in v.iter().enumerate().skip(p) {
                if !vv.is_zero() {
                    row[k] = row[k].clone() - f.clone() * vv;
                }
            }
        }
        let pos = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(pos, (p, v));
        true
    }

    pub fn contains(&self, v: &[C]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }
}

/// Canonical basis of `span(candidates) / span(sub)` in the given coordinates:
/// candidates are reduced modulo `sub`, then brought to reduced echelon form.
pub fn quotient_basis<C: Field>(dim: usize, sub: &[Vec<C>], candidates: &[Vec<C>]) -> Vec<Vec<C>> {
    let mut base = RowSpace::new(dim);
    for v in sub {
        base.insert(v.clone());
    }
    let reduced: Vec<Vec<C>> = candidates
        .iter()
        .map(|v| {
            let mut w = v.clone();
            base.reduce(&mut w);
            w
        })
        .collect();
    if reduced.is_empty() {
        return Vec::new();
    }
    let m = ScalarMatrix::from_row_vecs(dim, reduced);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type M = ScalarMatrix<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    #[test]
    fn rref_examples() {
        let (r, p) = M::identity(3).rref();
        assert_eq!(r, M::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = M::from_i64(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, M::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);

        let (r, _) = M::from_i64(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r, M::identity(2));
    }

    #[test]
    fn kernel_examples() {
        let k = M::from_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, M::from_i64(&[&[-1], &[1]]));
        assert_eq!(M::from_i64(&[&[2, 1], &[1, 1]]).kernel_basis().cols(), 0);
        assert_eq!(M::zeros(2, 3).kernel_basis().cols(), 3);
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3), q(-1), q(7)];
        assert_eq!(M::identity(3).solve(&b).unwrap(), Some(b));
        assert_eq!(
            M::from_i64(&[&[1, 1]]).solve(&[q(2)]).unwrap(),
            Some(vec![q(2), q(0)])
        );
        assert_eq!(
            M::from_i64(&[&[1], &[0]]).solve(&[q(0), q(1)]).unwrap(),
            None
        );
        assert!(M::identity(2).solve(&[q(1)]).is_err());
    }

    #[test]
    fn quotient_basis_is_canonical() {
        // span{e0, e1} / span{e0 + e1} in Q^2 has a single representative.
        let sub = vec![vec![q(1), q(1)]];
        let a = quotient_basis(2, &sub, &[vec![q(1), q(0)], vec![q(0), q(1)]]);
        let b = quotient_basis(2, &sub, &[vec![q(0), q(5)]]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 1);
    }
}
