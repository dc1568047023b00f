use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;

use super::monomial::Monomial;

/// Sparse polynomial over `C` in the variables `x_0..x_{nx-1}, t_0..t_{nt-1}`.
///
/// Terms are stored in strictly descending monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    nx: u16,
    nt: u16,
    terms: Vec<(Monomial, C)>,
}

impl<C: Field> Polynomial<C> {
    pub fn zero(nx: usize, nt: usize) -> Self {
        Polynomial {
            nx: nx as u16,
            nt: nt as u16,
            terms: Vec::new(),
        }
    }

    pub fn constant(nx: usize, nt: usize, c: C) -> Self {
        Self::term(Monomial::one(nx, nt), c)
    }

    pub fn one(nx: usize, nt: usize) -> Self {
        Self::constant(nx, nt, C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let (nx, nt) = (m.nx() as u16, m.nt() as u16);
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial { nx, nt, terms }
    }

    pub fn var(nx: usize, nt: usize, i: usize) -> Self {
        Self::term(Monomial::var(nx, nt, i), C::one())
    }

    /// Build from arbitrary terms; duplicates are merged and zeros dropped.
    pub fn from_terms(
        nx: usize,
        nt: usize,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!((m.nx(), m.nt()), (nx, nt));
            match acc.get_mut(&m) {
                Some(v) => *v = v.clone() + c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            nx: nx as u16,
            nt: nt as u16,
            terms,
        }
    }

    /// Trusts the caller that `terms` is strictly descending and zero free.
    pub(crate) fn from_sorted_terms(nx: usize, nt: usize, terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            nx: nx as u16,
            nt: nt as u16,
            terms,
        }
    }

    pub fn nx(&self) -> usize {
        self.nx as usize
    }

    pub fn nt(&self) -> usize {
        self.nt as usize
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| C::zero())
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        self.nx == other.nx && self.nt == other.nt
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                format!("{} x, {} t", self.nx, self.nt),
                format!("{} x, {} t", other.nx, other.nt),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let neg = |c: &C| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), neg(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        a[i].1.clone() - &b[j].1
                    } else {
                        a[i].1.clone() + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), neg(c))));
        Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms: out,
        }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nx(), self.nt());
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = v.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms,
        }
    }

    /// Multiply by `c * m`; order is preserved since the order is multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nx(), self.nt());
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.mul(m), v.clone() * c))
            .collect();
        Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nx(), self.nt());
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), v.clone() * c))
            .collect();
        Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms,
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nx(), self.nt());
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Formal partial derivative with respect to the variable with combined index `v`.
    pub fn partial_derivative(&self, v: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[v];
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[v] -= 1;
            Some((
                Monomial::from_exponents(m.nx(), &exps),
                c.clone() * &C::from_i64(e as i64),
            ))
        });
        Self::from_terms(self.nx(), self.nt(), terms)
    }

    /// Minimal total t-degree of a term; `None` for zero.
    pub fn t_order(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.t_degree()).min()
    }

    pub fn max_t_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.t_degree()).max()
    }

    /// Drop every term of total t-degree above `k`.
    pub fn t_truncate(&self, k: u32) -> Self {
        self.filter_terms(|m| m.t_degree() <= k)
    }

    /// Terms of total t-degree exactly `k`.
    pub fn t_part_of_order(&self, k: u32) -> Self {
        self.filter_terms(|m| m.t_degree() == k)
    }

    pub fn is_t_homogeneous_of_order(&self, k: u32) -> bool {
        self.terms.iter().all(|(m, _)| m.t_degree() == k)
    }

    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .cloned()
                .collect(),
        }
    }

    /// Re-embed into the ring with `nt` parameters (padding with zero exponents).
    pub fn with_nt(&self, nt: usize) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.with_nt(nt), c.clone()));
        Self::from_terms(self.nx(), nt, terms)
    }

    /// Group terms by their t-monomial: `self = Σ τ · coeff_τ` with `coeff_τ ∈ S`.
    pub fn split_by_t(&self) -> BTreeMap<Monomial, Polynomial<C>> {
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, C)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.t_part())
                .or_default()
                .push((m.x_part(), c.clone()));
        }
        groups
            .into_iter()
            .map(|(t, terms)| (t, Polynomial::from_sorted_terms(self.nx(), 0, terms)))
            .collect()
    }

    /// Inverse of [`split_by_t`](Self::split_by_t) for a single group: `x_poly · τ`.
    pub fn attach_t(x_poly: &Polynomial<C>, tau: &Monomial) -> Self {
        assert_eq!(x_poly.nt(), 0);
        let terms = x_poly
            .terms
            .iter()
            .map(|(m, c)| (Monomial::join(m, tau), c.clone()))
            .collect();
        Polynomial {
            nx: x_poly.nx,
            nt: tau.nt() as u16,
            terms,
        }
    }

    /// Substitute values for all parameters, landing in the x-only ring.
    pub fn eval_t(&self, values: &[C]) -> Polynomial<C> {
        assert_eq!(values.len(), self.nt());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut v = c.clone();
            for (e, val) in m.t_exponents().iter().zip(values) {
                for _ in 0..*e {
                    v = v * val;
                }
            }
            (m.x_part(), v)
        });
        Polynomial::from_terms(self.nx(), 0, terms)
    }

    /// View a polynomial in the parameters only as an x-free polynomial
    /// whose variables are the parameters (`nx = 0`).
    pub fn t_only(&self) -> Polynomial<C> {
        assert!(self.terms.iter().all(|(m, _)| m.x_degree() == 0));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.t_part(), c.clone()))
            .collect();
        Polynomial::from_sorted_terms(0, self.nt(), terms)
    }

    /// Inverse of [`t_only`](Self::t_only): place a parameter polynomial into `S[t]`.
    pub fn from_t_only(p: &Polynomial<C>, nx: usize) -> Polynomial<C> {
        assert_eq!(p.nx(), 0);
        let one = Monomial::one(nx, 0);
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| (Monomial::join(&one, m), c.clone()))
            .collect();
        Polynomial::from_sorted_terms(nx, p.nt(), terms)
    }
}

impl<C: Field> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<C: Field> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<C: Field> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Polynomial {
            nx: self.nx,
            nt: self.nt,
            terms,
        }
    }
}

impl<C: Field> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        &self + &rhs
    }
}

impl<C: Field> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        &self - &rhs
    }
}

impl<C: Field> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Field> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    fn x(i: usize) -> P {
        P::var(3, 2, i)
    }

    #[test]
    fn cancellation_and_identity() {
        let one = P::one(3, 2);
        let p = &x(0) + &one;
        assert_eq!(&p + &(-&x(0)), one);
        assert_eq!(&p + &P::zero(3, 2), p);
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        let rhs = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(lhs, rhs);
        let sq = (&x(0) + &P::one(3, 2)).pow(2);
        let expect = &(&x(0).pow(2) + &x(0).scale(&q(2))) + &P::one(3, 2);
        assert_eq!(sq, expect);
    }

    #[test]
    fn t_order_and_truncation() {
        let t1 = P::var(3, 2, 3);
        let t2 = P::var(3, 2, 4);
        let p = &t1 * &x(1);
        assert_eq!(p.t_order(), Some(1));
        let s = &(&P::one(3, 2) + &t1) + &(&t1 * &t2);
        assert_eq!(s.t_truncate(1), &P::one(3, 2) + &t1);
        assert_eq!(s.t_truncate(10), s);
        let cube = &(&t1 * &t2) * &t1;
        assert!(cube.t_truncate(2).is_zero());
    }

    #[test]
    fn derivative() {
        // d/dx1 (x1^2 - x0 x2) = 2 x1
        let f = &x(1).pow(2) - &(&x(0) * &x(2));
        assert_eq!(f.partial_derivative(1), x(1).scale(&q(2)));
        assert!(f.partial_derivative(4).is_zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = P::var(2, 0, 0);
        let b = P::var(3, 0, 0);
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn split_and_reassemble() {
        let t1 = P::var(3, 2, 3);
        let p = &(&(&t1 * &x(0)) + &t1) + &x(2);
        let parts = p.split_by_t();
        assert_eq!(parts.len(), 2);
        let back = parts
            .iter()
            .fold(P::zero(3, 2), |acc, (tau, c)| &acc + &P::attach_t(c, tau));
        assert_eq!(back, p);
    }
}
