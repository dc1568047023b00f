use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};

use crate::field::Field;
use crate::polyring::{Monomial, Polynomial};

use super::vector::{ModMono, Vector};

/// Reduced Gröbner basis of a submodule of `R^rank` under the
/// term-over-position extension of the ring's monomial order.
///
/// When built with tracking, every basis element carries its expression in
/// terms of the original generators, which is what syzygies and lifts need.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<C> {
    rank: usize,
    nx: usize,
    nt: usize,
    elems: Vec<Vector<C>>,
    cofactors: Option<Vec<Vector<C>>>,
    originals: Vec<Vector<C>>,
    // lead position -> indices into elems
    by_pos: HashMap<usize, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u32,
    lcm: ModMono,
    i: usize,
    j: usize,
}

fn s_vector<C: Field>(f: &Vector<C>, g: &Vector<C>) -> (Vector<C>, Monomial, C, Monomial, C) {
    let (kf, cf) = f.leading().expect("nonzero");
    let (kg, cg) = g.leading().expect("nonzero");
    let l = kf.mono.lcm(&kg.mono);
    let uf = kf.mono.quotient_of(&l).unwrap();
    let ug = kg.mono.quotient_of(&l).unwrap();
    let af = cf.inv();
    let ag = cg.inv();
    let s = f.mul_term(&uf, &af).sub(&g.mul_term(&ug, &ag));
    (s, uf, af, ug, -ag)
}

impl<C: Field> GroebnerBasis<C> {
    /// Gröbner basis of the submodule generated by `gens` (all of rank `rank`).
    pub fn new(gens: &[Vector<C>], rank: usize, nx: usize, nt: usize) -> Self {
        Self::build(gens, rank, nx, nt, false)
    }

    /// As [`new`](Self::new), additionally recording cofactors.
    pub fn with_tracking(gens: &[Vector<C>], rank: usize, nx: usize, nt: usize) -> Self {
        Self::build(gens, rank, nx, nt, true)
    }

    pub fn ideal(gens: &[Polynomial<C>], nx: usize, nt: usize) -> Self {
        let v: Vec<_> = gens.iter().map(|p| Vector::unit(1, 0, p)).collect();
        Self::new(&v, 1, nx, nt)
    }

    pub fn ideal_with_tracking(gens: &[Polynomial<C>], nx: usize, nt: usize) -> Self {
        let v: Vec<_> = gens.iter().map(|p| Vector::unit(1, 0, p)).collect();
        Self::with_tracking(&v, 1, nx, nt)
    }

    fn empty(rank: usize, nx: usize, nt: usize, track: bool, originals: Vec<Vector<C>>) -> Self {
        GroebnerBasis {
            rank,
            nx,
            nt,
            elems: Vec::new(),
            cofactors: if track { Some(Vec::new()) } else { None },
            originals,
            by_pos: HashMap::new(),
        }
    }

    fn build(gens: &[Vector<C>], rank: usize, nx: usize, nt: usize, track: bool) -> Self {
        for g in gens {
            assert_eq!(g.rank(), rank, "generator rank mismatch");
        }
        let s = gens.len();
        let mut gb = Self::empty(
            rank,
            nx,
            nt,
            track,
            if track { gens.to_vec() } else { Vec::new() },
        );
        let mut heap: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();

        for (idx, g) in gens.iter().enumerate() {
            let cof = track.then(|| Vector::unit(s, idx, &Polynomial::one(nx, nt)));
            gb.add_reduced(g.clone(), cof, &mut heap, &mut pending);
        }

        while let Some(Reverse(pair)) = heap.pop() {
            let (i, j) = (pair.i, pair.j);
            pending.remove(&(i, j));
            if gb.chain_criterion(i, j, &pair.lcm, &pending) {
                continue;
            }
            let (sv, ui, ai, uj, aj) = s_vector(&gb.elems[i], &gb.elems[j]);
            let cof = gb
                .cofactors
                .as_ref()
                .map(|cs| cs[i].mul_term(&ui, &ai).add(&cs[j].mul_term(&uj, &aj)));
            gb.add_reduced(sv, cof, &mut heap, &mut pending);
        }
        gb.interreduce();
        gb
    }

    fn add_reduced(
        &mut self,
        v: Vector<C>,
        cof: Option<Vector<C>>,
        heap: &mut BinaryHeap<Reverse<PairKey>>,
        pending: &mut HashSet<(usize, usize)>,
    ) {
        let (r, q) = self.reduce_impl(&v, cof.is_some(), true);
        if r.is_zero() {
            return;
        }
        let lc_inv = r.leading().unwrap().1.inv();
        let new_idx = self.elems.len();
        let key = r.leading_key().unwrap().clone();
        if let Some(cs) = self.cofactors.as_mut() {
            let total = cof.unwrap().sub(&q.unwrap());
            cs.push(total.scale(&lc_inv));
        }
        self.elems.push(r.scale(&lc_inv));
        let same: Vec<usize> = self.by_pos.get(&key.pos).cloned().unwrap_or_default();
        for i in same {
            let li = self.elems[i].leading_key().unwrap();
            let lcm = li.mono.lcm(&key.mono);
            if self.rank == 1 && li.mono.is_coprime(&key.mono) {
                continue;
            }
            let pk = PairKey {
                degree: lcm.total_degree(),
                lcm: ModMono {
                    mono: lcm,
                    pos: key.pos,
                },
                i,
                j: new_idx,
            };
            pending.insert((i, new_idx));
            heap.push(Reverse(pk));
        }
        self.by_pos.entry(key.pos).or_default().push(new_idx);
    }

    fn chain_criterion(
        &self,
        i: usize,
        j: usize,
        lcm: &ModMono,
        pending: &HashSet<(usize, usize)>,
    ) -> bool {
        let Some(idx) = self.by_pos.get(&lcm.pos) else {
            return false;
        };
        idx.iter().any(|&k| {
            k != i
                && k != j
                && self.elems[k].leading_key().unwrap().mono.divides(&lcm.mono)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        })
    }

    fn interreduce(&mut self) {
        let n = self.elems.len();
        let keys: Vec<ModMono> = self
            .elems
            .iter()
            .map(|e| e.leading_key().unwrap().clone())
            .collect();
        let mut keep: Vec<usize> = (0..n)
            .filter(|&i| {
                !(0..n).any(|j| {
                    j != i
                        && keys[j].pos == keys[i].pos
                        && keys[j].mono.divides(&keys[i].mono)
                        && (keys[j].mono != keys[i].mono || j < i)
                })
            })
            .collect();
        keep.sort_by(|&a, &b| keys[b].cmp(&keys[a]));

        let elems: Vec<Vector<C>> = keep.iter().map(|&i| self.elems[i].clone()).collect();
        let cofs: Option<Vec<Vector<C>>> = self
            .cofactors
            .as_ref()
            .map(|cs| keep.iter().map(|&i| cs[i].clone()).collect());
        self.elems = elems;
        self.cofactors = cofs;
        self.rebuild_index();

        // tail reduction; leading terms are untouched since they are minimal
        for i in 0..self.elems.len() {
            let e = self.elems[i].clone();
            let (lead_key, lead_c) = e.leading().unwrap().clone();
            let tail = Vector::from_sorted(self.rank, self.nx, self.nt, e.terms()[1..].to_vec());
            let (r, q) = self.reduce_excluding(&tail, self.cofactors.is_some(), i);
            let mut terms = vec![(lead_key, lead_c)];
            terms.extend(r.terms().iter().cloned());
            self.elems[i] = Vector::from_sorted(self.rank, self.nx, self.nt, terms);
            if let (Some(cs), Some(q)) = (self.cofactors.as_mut(), q) {
                cs[i] = cs[i].sub(&q);
            }
        }
    }

    fn rebuild_index(&mut self) {
        self.by_pos.clear();
        for (i, e) in self.elems.iter().enumerate() {
            self.by_pos
                .entry(e.leading_key().unwrap().pos)
                .or_default()
                .push(i);
        }
    }

    fn find_divisor(&self, k: &ModMono, exclude: Option<usize>) -> Option<usize> {
        self.by_pos.get(&k.pos)?.iter().copied().find(|&i| {
            Some(i) != exclude && self.elems[i].leading_key().unwrap().mono.divides(&k.mono)
        })
    }

    fn reduce_excluding(
        &self,
        v: &Vector<C>,
        track: bool,
        exclude: usize,
    ) -> (Vector<C>, Option<Vector<C>>) {
        self.reduce_core(v, track, true, Some(exclude))
    }

    fn reduce_impl(
        &self,
        v: &Vector<C>,
        track: bool,
        full: bool,
    ) -> (Vector<C>, Option<Vector<C>>) {
        self.reduce_core(v, track, full, None)
    }

    /// Returns `(remainder, cofactor)` with `v = remainder + Σ cofactor_i · original_i`
    /// (the cofactor is present only when tracking).
    fn reduce_core(
        &self,
        v: &Vector<C>,
        track: bool,
        full: bool,
        exclude: Option<usize>,
    ) -> (Vector<C>, Option<Vector<C>>) {
        let mut work: BTreeMap<ModMono, C> = v.terms().iter().cloned().collect();
        let mut rem: Vec<(ModMono, C)> = Vec::new();
        let mut quot: HashMap<usize, Vec<(Monomial, C)>> = HashMap::new();
        while let Some((k, c)) = work.pop_last() {
            match self.find_divisor(&k, exclude) {
                Some(j) => {
                    let g = &self.elems[j];
                    let (gk, gc) = g.leading().unwrap();
                    let q = gk.mono.quotient_of(&k.mono).unwrap();
                    let a = c / gc;
                    for (tk, tc) in &g.terms()[1..] {
                        let key = ModMono {
                            mono: tk.mono.mul(&q),
                            pos: tk.pos,
                        };
                        let delta = a.clone() * tc;
                        match work.get_mut(&key) {
                            Some(e) => {
                                let nv = e.clone() - delta;
                                if nv.is_zero() {
                                    work.remove(&key);
                                } else {
                                    *e = nv;
                                }
                            }
                            None => {
                                work.insert(key, -delta);
                            }
                        }
                    }
                    if track {
                        quot.entry(j).or_default().push((q, a));
                    }
                }
                None => {
                    rem.push((k, c));
                    if !full {
                        rem.extend(work.into_iter().rev());
                        break;
                    }
                }
            }
        }
        let rem = Vector::from_sorted(self.rank, self.nx, self.nt, rem);
        let cof = if track {
            let cs = self
                .cofactors
                .as_ref()
                .expect("basis was built without tracking");
            let s = self.originals.len();
            let mut acc = Vector::zero(s, self.nx, self.nt);
            let mut js: Vec<_> = quot.into_iter().collect();
            js.sort_by_key(|(j, _)| *j);
            for (j, terms) in js {
                let p = Polynomial::from_terms(self.nx, self.nt, terms);
                acc = acc.add(&cs[j].mul_poly(&p));
            }
            Some(acc)
        } else {
            None
        };
        (rem, cof)
    }

    /// Fully reduced normal form.
    pub fn normal_form(&self, v: &Vector<C>) -> Vector<C> {
        self.reduce_impl(v, false, true).0
    }

    /// Normal form together with cofactors: `v = nf + Σ cof_i · gen_i`.
    pub fn reduce_with_cofactors(&self, v: &Vector<C>) -> (Vector<C>, Vector<C>) {
        let (r, q) = self.reduce_impl(v, true, true);
        (r, q.unwrap())
    }

    pub fn contains(&self, v: &Vector<C>) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn normal_form_poly(&self, p: &Polynomial<C>) -> Polynomial<C> {
        debug_assert_eq!(self.rank, 1);
        let v = Vector::unit(1, 0, p);
        self.normal_form(&v).components().pop().unwrap()
    }

    /// For an ideal basis: `p = nf + Σ cof_i · gen_i`.
    pub fn reduce_poly_with_cofactors(
        &self,
        p: &Polynomial<C>,
    ) -> (Polynomial<C>, Vec<Polynomial<C>>) {
        let (r, q) = self.reduce_with_cofactors(&Vector::unit(1, 0, p));
        (r.components().pop().unwrap(), q.components())
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

    pub fn elements(&self) -> &[Vector<C>] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn originals(&self) -> &[Vector<C>] {
        &self.originals
    }

    pub fn cofactors(&self) -> Option<&[Vector<C>]> {
        self.cofactors.as_deref()
    }

    /// For an ideal basis, the generators as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial<C>> {
        self.elems
            .iter()
            .map(|v| v.components().swap_remove(0))
            .collect()
    }

    /// Leading monomials (with positions): the staircase corners.
    pub fn leading_keys(&self) -> Vec<ModMono> {
        self.elems
            .iter()
            .map(|e| e.leading_key().unwrap().clone())
            .collect()
    }

    /// Whether the unit vector is in the module for some position, i.e. the
    /// ideal is the whole ring (rank 1 only).
    pub fn is_unit_ideal(&self) -> bool {
        self.rank == 1
            && self
                .elems
                .iter()
                .any(|e| e.leading_key().unwrap().mono.is_one())
    }

    /// `mono · e_pos` is a standard monomial (not divisible by any leading term).
    pub fn is_standard(&self, key: &ModMono) -> bool {
        self.find_divisor(key, None).is_none()
    }

    /// Syzygies of the original generators, from the S-vectors of the basis
    /// and the reductions of the generators (Schreyer). Requires tracking.
    /// Not minimal; see [`super::syzygy::minimalize`].
    pub fn original_syzygies(&self) -> Vec<Vector<C>> {
        let cs = self
            .cofactors
            .as_ref()
            .expect("basis was built without tracking");
        let s = self.originals.len();
        let mut out = Vec::new();
        let n = self.elems.len();
        let keys = self.leading_keys();
        for j in 0..n {
            for i in 0..j {
                if keys[i].pos != keys[j].pos {
                    continue;
                }
                let lcm = keys[i].mono.lcm(&keys[j].mono);
                // redundant when a third lead divides the lcm with strictly smaller sub-lcms
                let redundant = (0..n).any(|k| {
                    k != i
                        && k != j
                        && keys[k].pos == keys[i].pos
                        && keys[k].mono.divides(&lcm)
                        && keys[k].mono.lcm(&keys[i].mono) != lcm
                        && keys[k].mono.lcm(&keys[j].mono) != lcm
                });
                if redundant {
                    continue;
                }
                let (sv, ui, ai, uj, aj) = s_vector(&self.elems[i], &self.elems[j]);
                let cof = cs[i].mul_term(&ui, &ai).add(&cs[j].mul_term(&uj, &aj));
                let (r, q) = self.reduce_with_cofactors(&sv);
                debug_assert!(r.is_zero());
                let syz = cof.sub(&q);
                if !syz.is_zero() {
                    out.push(syz);
                }
            }
        }
        for (idx, g) in self.originals.iter().enumerate() {
            let (r, q) = self.reduce_with_cofactors(g);
            debug_assert!(r.is_zero());
            let syz = Vector::unit(s, idx, &Polynomial::one(self.nx, self.nt)).sub(&q);
            if !syz.is_zero() {
                out.push(syz);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RingSpec;
    use num_rational::BigRational;

    type Q = BigRational;

    fn ring(vars: &[&str]) -> RingSpec {
        RingSpec::new(vars).unwrap()
    }

    #[test]
    fn already_reduced_basis_is_unchanged() {
        let r = ring(&["x", "y"]);
        let gens: Vec<Polynomial<Q>> = vec![r.parse("x").unwrap(), r.parse("y").unwrap()];
        let gb = GroebnerBasis::ideal(&gens, 2, 0);
        assert_eq!(gb.polynomials(), gens);
    }

    #[test]
    fn one_reduction_step() {
        let r = ring(&["x", "y"]);
        let gens: Vec<Polynomial<Q>> = vec![r.parse("x^2 - y").unwrap(), r.parse("y").unwrap()];
        let gb = GroebnerBasis::ideal(&gens, 2, 0);
        let mut got: Vec<String> = gb.polynomials().iter().map(|p| r.format(p)).collect();
        got.sort();
        assert_eq!(got, vec!["x^2", "y"]);
    }

    #[test]
    fn cofactors_reconstruct_input() {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<Polynomial<Q>> = ["x*y - z^2", "y^2 - x*z", "x^2*z - y*z^2 + 1"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let gb = GroebnerBasis::ideal_with_tracking(&gens, 3, 0);
        for (e, cof) in gb.elements().iter().zip(gb.cofactors().unwrap()) {
            let comb = cof
                .components()
                .iter()
                .zip(&gens)
                .fold(Polynomial::zero(3, 0), |acc, (c, g)| &acc + &(c * g));
            assert_eq!(Vector::unit(1, 0, &comb), *e);
        }
        let p: Polynomial<Q> = r.parse("x^3*y + z^5 - 7").unwrap();
        let (nf, cof) = gb.reduce_poly_with_cofactors(&p);
        let comb = cof
            .iter()
            .zip(&gens)
            .fold(nf.clone(), |acc, (c, g)| &acc + &(c * g));
        assert_eq!(comb, p);
    }

    #[test]
    fn unit_ideal_detected() {
        let r = ring(&["x", "y"]);
        let gens: Vec<Polynomial<Q>> = vec![r.parse("x*y - 1").unwrap(), r.parse("x").unwrap()];
        assert!(GroebnerBasis::ideal(&gens, 2, 0).is_unit_ideal());
    }
}
