use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyring::{Polynomial, RingSpec};

use super::vector::Vector;

/// Matrix of polynomials, row-major. Columns are read as elements of the free
/// module `R^rows`.
///
/// Optional degree data follow the convention that entry `(i, j)` is
/// homogeneous of degree `col_degree(j) - row_degree(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<C> {
    rows: usize,
    cols: usize,
    nx: usize,
    nt: usize,
    entries: Vec<Polynomial<C>>,
    row_degrees: Option<Vec<Vec<i64>>>,
    col_degrees: Option<Vec<Vec<i64>>>,
}

impl<C: Field> PolyMatrix<C> {
    pub fn zeros(rows: usize, cols: usize, nx: usize, nt: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nx,
            nt,
            entries: vec![Polynomial::zero(nx, nt); rows * cols],
            row_degrees: None,
            col_degrees: None,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial<C>>>, nx: usize, nt: usize) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged polynomial matrix".into()));
        }
        if rows.iter().flatten().any(|p| p.nx() != nx || p.nt() != nt) {
            return Err(Error::RingMismatch(
                format!("{nx} x, {nt} t"),
                "matrix entries".into(),
            ));
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            nx,
            nt,
            entries: rows.into_iter().flatten().collect(),
            row_degrees: None,
            col_degrees: None,
        })
    }

    /// A `1 x m` matrix holding the given generators.
    pub fn row_vector(gens: &[Polynomial<C>], nx: usize, nt: usize) -> Self {
        Self::from_rows(vec![gens.to_vec()], nx, nt).expect("uniform ring")
    }

    pub fn from_columns(cols: &[Vec<Polynomial<C>>], rows: usize, nx: usize, nt: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len(), nx, nt);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        m
    }

    pub fn from_column_vectors(cols: &[Vector<C>], rows: usize, nx: usize, nt: usize) -> Self {
        let comps: Vec<Vec<Polynomial<C>>> = cols.iter().map(|v| v.components()).collect();
        Self::from_columns(&comps, rows, nx, nt)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<C> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<C>) {
        assert!(
            p.nx() == self.nx && p.nt() == self.nt,
            "entry ring mismatch"
        );
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial<C>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial<C>> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<C>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn column_vector(&self, j: usize) -> Vector<C> {
        Vector::from_components(&self.column(j), self.nx, self.nt)
    }

    pub fn column_vectors(&self) -> Vec<Vector<C>> {
        (0..self.cols).map(|j| self.column_vector(j)).collect()
    }

    pub fn row_degrees(&self) -> Option<&[Vec<i64>]> {
        self.row_degrees.as_deref()
    }

    pub fn col_degrees(&self) -> Option<&[Vec<i64>]> {
        self.col_degrees.as_deref()
    }

    pub fn with_degrees(mut self, row_degrees: Vec<Vec<i64>>, col_degrees: Vec<Vec<i64>>) -> Self {
        assert_eq!(row_degrees.len(), self.rows);
        assert_eq!(col_degrees.len(), self.cols);
        self.row_degrees = Some(row_degrees);
        self.col_degrees = Some(col_degrees);
        self
    }

    pub fn strip_degrees(mut self) -> Self {
        self.row_degrees = None;
        self.col_degrees = None;
        self
    }

    /// Checks the degree convention `deg(i,j) = col_degree(j) - row_degree(i)`.
    pub fn degrees_consistent(&self, ring: &RingSpec) -> bool {
        let (Some(rd), Some(cd)) = (&self.row_degrees, &self.col_degrees) else {
            return true;
        };
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let p = self.get(i, j);
                if p.is_zero() {
                    return true;
                }
                let want: Vec<i64> = cd[j].iter().zip(&rd[i]).map(|(a, b)| a - b).collect();
                ring.multi_degree(p) == Some(want)
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.nx, self.nt);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t.row_degrees = self
            .col_degrees
            .as_ref()
            .map(|d| d.iter().map(|v| v.iter().map(|x| -x).collect()).collect());
        t.col_degrees = self
            .row_degrees
            .as_ref()
            .map(|d| d.iter().map(|v| v.iter().map(|x| -x).collect()).collect());
        t
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols, self.nx, self.nt);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.nx, self.nt);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &a.try_mul(b)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} plus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            entries,
            row_degrees: None,
            col_degrees: None,
            ..self.clone()
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|p| -p)
    }

    pub fn map(&self, f: impl Fn(&Polynomial<C>) -> Polynomial<C>) -> Self {
        let entries: Vec<_> = self.entries.iter().map(f).collect();
        let (nx, nt) = entries
            .first()
            .map_or((self.nx, self.nt), |p| (p.nx(), p.nt()));
        PolyMatrix {
            entries,
            nx,
            nt,
            ..self.clone()
        }
    }

    /// Side-by-side concatenation.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hconcat row counts differ".into()));
        }
        let mut cols: Vec<Vec<Polynomial<C>>> = (0..self.cols).map(|j| self.column(j)).collect();
        cols.extend((0..other.cols).map(|j| other.column(j)));
        Ok(Self::from_columns(&cols, self.rows, self.nx, self.nt))
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let cols: Vec<_> = idx.iter().map(|&j| self.column(j)).collect();
        let mut m = Self::from_columns(&cols, self.rows, self.nx, self.nt);
        if let (Some(rd), Some(cd)) = (&self.row_degrees, &self.col_degrees) {
            m = m.with_degrees(rd.clone(), idx.iter().map(|&j| cd[j].clone()).collect());
        }
        m
    }

    pub fn with_nt(&self, nt: usize) -> Self {
        let mut m = self.map(|p| p.with_nt(nt));
        m.nt = nt;
        m
    }

    pub fn t_truncate(&self, k: u32) -> Self {
        self.map(|p| p.t_truncate(k))
    }

    pub fn t_part_of_order(&self, k: u32) -> Self {
        self.map(|p| p.t_part_of_order(k))
    }
}
