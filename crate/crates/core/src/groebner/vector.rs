use std::cmp::Ordering;
use std::collections::HashMap;

use crate::field::Field;
use crate::polyring::{Monomial, Polynomial};

/// A monomial times a basis vector `e_pos` of a free module.
///
/// Ordered term-over-position: monomials compare first, and on ties
/// `e_0 > e_1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMono {
    pub mono: Monomial,
    pub pos: usize,
}

impl Ord for ModMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mono
            .cmp(&other.mono)
            .then_with(|| other.pos.cmp(&self.pos))
    }
}

impl PartialOrd for ModMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse element of the free module `R^rank`, terms strictly descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<C> {
    rank: usize,
    nx: usize,
    nt: usize,
    terms: Vec<(ModMono, C)>,
}

impl<C: Field> Vector<C> {
    pub fn zero(rank: usize, nx: usize, nt: usize) -> Self {
        Vector {
            rank,
            nx,
            nt,
            terms: Vec::new(),
        }
    }

    /// `p · e_pos`.
    pub fn unit(rank: usize, pos: usize, p: &Polynomial<C>) -> Self {
        assert!(pos < rank);
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                (
                    ModMono {
                        mono: m.clone(),
                        pos,
                    },
                    c.clone(),
                )
            })
            .collect();
        Vector {
            rank,
            nx: p.nx(),
            nt: p.nt(),
            terms,
        }
    }

    pub fn from_components(comps: &[Polynomial<C>], nx: usize, nt: usize) -> Self {
        let mut terms: Vec<(ModMono, C)> = comps
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                debug_assert_eq!((p.nx(), p.nt()), (nx, nt));
                p.terms().iter().map(move |(m, c)| {
                    (
                        ModMono {
                            mono: m.clone(),
                            pos,
                        },
                        c.clone(),
                    )
                })
            })
            .collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Vector {
            rank: comps.len(),
            nx,
            nt,
            terms,
        }
    }

    pub(crate) fn from_map(rank: usize, nx: usize, nt: usize, map: HashMap<ModMono, C>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Vector {
            rank,
            nx,
            nt,
            terms,
        }
    }

    pub(crate) fn from_sorted(rank: usize, nx: usize, nt: usize, terms: Vec<(ModMono, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Vector {
            rank,
            nx,
            nt,
            terms,
        }
    }

    pub fn components(&self) -> Vec<Polynomial<C>> {
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); self.rank];
        for (k, c) in &self.terms {
            buckets[k.pos].push((k.mono.clone(), c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| Polynomial::from_sorted_terms(self.nx, self.nt, t))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn terms(&self) -> &[(ModMono, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(ModMono, C)> {
        self.terms.first()
    }

    pub fn leading_key(&self) -> Option<&ModMono> {
        self.terms.first().map(|(k, _)| k)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.rank, other.rank, "module rank mismatch");
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sgn = |c: &C| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.clone() + sgn(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(k, c)| (k.clone(), sgn(c))));
        Vector {
            rank: self.rank,
            nx: self.nx,
            nt: self.nt,
            terms: out,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank, self.nx, self.nt);
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.clone() * c))
                .collect(),
            ..self.clone()
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank, self.nx, self.nt);
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    (
                        ModMono {
                            mono: k.mono.mul(m),
                            pos: k.pos,
                        },
                        v.clone() * c,
                    )
                })
                .collect(),
            ..self.clone()
        }
    }

    pub fn mul_poly(&self, p: &Polynomial<C>) -> Self {
        let mut acc: HashMap<ModMono, C> = HashMap::new();
        for (m, c) in p.terms() {
            for (k, v) in &self.terms {
                let key = ModMono {
                    mono: k.mono.mul(m),
                    pos: k.pos,
                };
                let val = v.clone() * c;
                match acc.get_mut(&key) {
                    Some(e) => *e = e.clone() + val,
                    None => {
                        acc.insert(key, val);
                    }
                }
            }
        }
        Self::from_map(self.rank, self.nx, self.nt, acc)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Keep only components `range`, renumbered from zero.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| range.contains(&k.pos))
            .map(|(k, c)| {
                (
                    ModMono {
                        mono: k.mono.clone(),
                        pos: k.pos - range.start,
                    },
                    c.clone(),
                )
            })
            .collect();
        Vector {
            rank: range.len(),
            nx: self.nx,
            nt: self.nt,
            terms,
        }
    }
}
