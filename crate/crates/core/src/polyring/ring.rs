use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Field;

use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// Variable names and multigrading for `S[t] = k[x_0..][t_0..]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    x_vars: Vec<String>,
    t_vars: Vec<String>,
    rank: usize,
    x_degrees: Vec<Vec<i64>>,
    t_degrees: Option<Vec<Vec<i64>>>,
    declared: bool,
}

impl RingSpec {
    /// Standard Z-grading on the x-block, no parameters.
    pub fn new<S: AsRef<str>>(x_vars: &[S]) -> Result<Self> {
        let names: Vec<String> = x_vars.iter().map(|s| s.as_ref().to_string()).collect();
        let degrees = vec![vec![1]; names.len()];
        let mut r = Self::with_degrees(&names, 1, degrees)?;
        r.declared = false;
        Ok(r)
    }

    /// Explicit multigrading of rank `rank` on the x-block.
    pub fn with_degrees<S: AsRef<str>>(
        x_vars: &[S],
        rank: usize,
        x_degrees: Vec<Vec<i64>>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRing("grading rank must be positive".into()));
        }
        if x_degrees.len() != x_vars.len() {
            return Err(Error::InvalidRing(format!(
                "{} degrees given for {} variables",
                x_degrees.len(),
                x_vars.len()
            )));
        }
        if let Some(d) = x_degrees.iter().find(|d| d.len() != rank) {
            return Err(Error::InvalidRing(format!(
                "degree {d:?} does not have length {rank}"
            )));
        }
        let spec = RingSpec {
            x_vars: x_vars.iter().map(|s| s.as_ref().to_string()).collect(),
            t_vars: Vec::new(),
            rank,
            x_degrees,
            t_degrees: None,
            declared: true,
        };
        spec.check_names()?;
        Ok(spec)
    }

    fn check_names(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for v in self.x_vars.iter().chain(self.t_vars.iter()) {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(())
    }

    /// The same x-block with parameters `t_vars` attached.
    pub fn with_parameters<S: AsRef<str>>(
        &self,
        t_vars: &[S],
        t_degrees: Option<Vec<Vec<i64>>>,
    ) -> Result<Self> {
        if let Some(td) = &t_degrees {
            if td.len() != t_vars.len() || td.iter().any(|d| d.len() != self.rank) {
                return Err(Error::InvalidRing("parameter degrees do not match".into()));
            }
        }
        let spec = RingSpec {
            t_vars: t_vars.iter().map(|s| s.as_ref().to_string()).collect(),
            t_degrees,
            ..self.clone()
        };
        spec.check_names()?;
        Ok(spec)
    }

    /// A ring whose x-block is this ring's parameter block (used for base-space
    /// computations in `k[t]`), standard graded.
    pub fn parameter_ring(&self) -> Result<Self> {
        RingSpec::new(&self.t_vars)
    }

    pub fn x_vars(&self) -> &[String] {
        &self.x_vars
    }

    pub fn t_vars(&self) -> &[String] {
        &self.t_vars
    }

    pub fn nx(&self) -> usize {
        self.x_vars.len()
    }

    pub fn nt(&self) -> usize {
        self.t_vars.len()
    }

    pub fn grading_rank(&self) -> usize {
        self.rank
    }

    /// Whether degrees were given explicitly rather than defaulted.
    pub fn degrees_declared(&self) -> bool {
        self.declared
    }

    pub fn x_degrees(&self) -> &[Vec<i64>] {
        &self.x_degrees
    }

    pub fn t_degrees(&self) -> Option<&[Vec<i64>]> {
        self.t_degrees.as_deref()
    }

    /// Every variable degree is nonzero and componentwise non-negative, which
    /// makes every graded piece of `S` finite-dimensional.
    pub fn is_positively_graded(&self) -> bool {
        self.x_degrees
            .iter()
            .all(|d| d.iter().all(|&e| e >= 0) && d.iter().any(|&e| e > 0))
    }

    /// Index of a variable in the combined (x then t) numbering.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.x_vars
            .iter()
            .chain(self.t_vars.iter())
            .position(|v| v == name)
    }

    pub fn var_name(&self, i: usize) -> &str {
        if i < self.nx() {
            &self.x_vars[i]
        } else {
            &self.t_vars[i - self.nx()]
        }
    }

    pub fn var<C: Field>(&self, name: &str) -> Result<Polynomial<C>> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(self.nx(), self.nt(), i))
    }

    pub fn zero<C: Field>(&self) -> Polynomial<C> {
        Polynomial::zero(self.nx(), self.nt())
    }

    /// Multidegree of a monomial; `None` if it involves an ungraded parameter.
    pub fn monomial_degree(&self, m: &Monomial) -> Option<Vec<i64>> {
        let mut d = vec![0i64; self.rank];
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let w = if i < self.nx() {
                &self.x_degrees[i]
            } else {
                &self.t_degrees.as_ref()?[i - self.nx()]
            };
            for (acc, wi) in d.iter_mut().zip(w) {
                *acc += e as i64 * wi;
            }
        }
        Some(d)
    }

    /// The common multidegree of all terms, or `None` if `p` is inhomogeneous
    /// (or zero).
    pub fn multi_degree<C: Field>(&self, p: &Polynomial<C>) -> Option<Vec<i64>> {
        let mut it = p.terms().iter();
        let first = self.monomial_degree(&it.next()?.0)?;
        for (m, _) in it {
            if self.monomial_degree(m)? != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn is_homogeneous<C: Field>(&self, p: &Polynomial<C>) -> bool {
        p.is_zero() || self.multi_degree(p).is_some()
    }

    /// Degree vectors of the x-block, borrowed in the shape [`Monomial::weighted_degree`] wants.
    pub(crate) fn x_degree_refs(&self) -> Vec<&[i64]> {
        self.x_degrees.iter().map(|d| d.as_slice()).collect()
    }

    /// Total weight of an x-degree tuple (sum of components), positive on
    /// every variable of a positively graded ring.
    pub fn weight(d: &[i64]) -> i64 {
        d.iter().sum()
    }
}
