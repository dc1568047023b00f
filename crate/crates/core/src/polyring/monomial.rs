use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

pub type Exp = u16;

/// Exponent vector over the two variable blocks `x_0..x_{nx-1}, t_0..t_{nt-1}`.
///
/// `Ord` is the monomial order of the crate: graded reverse lexicographic
/// on the x-block, ties broken by graded reverse lexicographic on the t-block.
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: SmallVec<[Exp; 24]>,
    nx: u16,
    xdeg: u32,
    tdeg: u32,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.nx == other.nx && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nx.hash(state);
        self.exps.hash(state);
    }
}

fn grevlex(a: &[Exp], da: u32, b: &[Exp], db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let nx = self.nx as usize;
        grevlex(&self.exps[..nx], self.xdeg, &other.exps[..nx], other.xdeg)
            .then_with(|| grevlex(&self.exps[nx..], self.tdeg, &other.exps[nx..], other.tdeg))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one(nx: usize, nt: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nx + nt),
            nx: nx as u16,
            xdeg: 0,
            tdeg: 0,
        }
    }

    pub fn from_exponents(nx: usize, exps: &[Exp]) -> Self {
        assert!(nx <= exps.len());
        let xdeg = exps[..nx].iter().map(|&e| e as u32).sum();
        let tdeg = exps[nx..].iter().map(|&e| e as u32).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            nx: nx as u16,
            xdeg,
            tdeg,
        }
    }

    /// The variable with combined index `i` (x-block first).
    pub fn var(nx: usize, nt: usize, i: usize) -> Self {
        let mut m = Monomial::one(nx, nt);
        m.exps[i] = 1;
        if i < nx {
            m.xdeg = 1;
        } else {
            m.tdeg = 1;
        }
        m
    }

    pub fn exponents(&self) -> &[Exp] {
        &self.exps
    }

    pub fn nx(&self) -> usize {
        self.nx as usize
    }

    pub fn nt(&self) -> usize {
        self.exps.len() - self.nx as usize
    }

    pub fn x_exponents(&self) -> &[Exp] {
        &self.exps[..self.nx as usize]
    }

    pub fn t_exponents(&self) -> &[Exp] {
        &self.exps[self.nx as usize..]
    }

    pub fn x_degree(&self) -> u32 {
        self.xdeg
    }

    /// Total degree in the parameters.
    pub fn t_degree(&self) -> u32 {
        self.tdeg
    }

    pub fn total_degree(&self) -> u32 {
        self.xdeg + self.tdeg
    }

    pub fn is_one(&self) -> bool {
        self.xdeg == 0 && self.tdeg == 0
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.nx == other.nx && self.exps.len() == other.exps.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.same_shape(other));
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            nx: self.nx,
            xdeg: self.xdeg + other.xdeg,
            tdeg: self.tdeg + other.tdeg,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.xdeg <= other.xdeg
            && self.tdeg <= other.tdeg
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            nx: self.nx,
            xdeg: other.xdeg - self.xdeg,
            tdeg: other.tdeg - self.tdeg,
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let exps: SmallVec<[Exp; 24]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exponents(self.nx as usize, &exps)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Keep only the x-block, dropping parameters entirely.
    pub fn x_part(&self) -> Self {
        let nx = self.nx as usize;
        Monomial::from_exponents(nx, &self.exps[..nx])
    }

    /// Keep only the t-block, as a monomial with an empty x-block.
    pub fn t_part(&self) -> Self {
        Monomial::from_exponents(0, &self.exps[self.nx as usize..])
    }

    /// Concatenate an x-only monomial with a t-only monomial.
    pub fn join(x: &Monomial, t: &Monomial) -> Self {
        let mut exps: SmallVec<[Exp; 24]> = SmallVec::from_slice(&x.exps[..x.nx as usize]);
        exps.extend_from_slice(&t.exps[t.nx as usize..]);
        Monomial {
            exps,
            nx: x.nx,
            xdeg: x.xdeg,
            tdeg: t.tdeg,
        }
    }

    /// Re-embed into a ring with `nt` parameters, padding or requiring zeros.
    pub fn with_nt(&self, nt: usize) -> Self {
        let nx = self.nx as usize;
        let mut exps: SmallVec<[Exp; 24]> = SmallVec::from_slice(&self.exps[..nx]);
        let old = &self.exps[nx..];
        for i in 0..nt {
            exps.push(old.get(i).copied().unwrap_or(0));
        }
        assert!(
            old.iter().skip(nt).all(|&e| e == 0),
            "dropping a used parameter"
        );
        Monomial::from_exponents(nx, &exps)
    }

    /// Weighted degree under per-variable degree vectors (x then t).
    pub fn weighted_degree(&self, degrees: &[&[i64]], rank: usize) -> Vec<i64> {
        let mut d = vec![0i64; rank];
        for (e, w) in self.exps.iter().zip(degrees.iter()) {
            if *e != 0 {
                for (acc, wi) in d.iter_mut().zip(w.iter()) {
                    *acc += *e as i64 * wi;
                }
            }
        }
        d
    }
}

/// All monomials in `n` variables of total degree `deg`, in no particular order.
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<Vec<Exp>> {
    let mut out = Vec::new();
    let mut cur = vec![0 as Exp; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<Exp>, out: &mut Vec<Vec<Exp>>) {
        if i + 1 == cur.len() {
            cur[i] = left as Exp;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as Exp;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, deg, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[Exp]) -> Monomial {
        Monomial::from_exponents(e.len(), e)
    }

    #[test]
    fn grevlex_basics() {
        // x1^2 > x0*x2 in grevlex with x0 > x1 > x2
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        assert!(m(&[0, 0, 0]) < m(&[0, 0, 1]));
    }

    #[test]
    fn x_block_dominates_t_block() {
        let a = Monomial::from_exponents(1, &[1, 0]);
        let b = Monomial::from_exponents(1, &[0, 5]);
        assert!(a > b);
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(5, 2).len(), 15);
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 1).len(), 0);
    }
}
