//! Sparse exact elimination to a diagonal form.
//!
//! The matrix is held as a set of sparse vectors (its rows or its columns,
//! whichever set is smaller) over a common coordinate space. Operations on
//! vectors and on coordinates are both invertible, so the diagonal that comes
//! out is an equivalent form of the input; over a Euclidean domain it can be
//! turned into the invariant factors by [`divisibility_chain`].

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) trait Domain {
    type E: Clone + std::fmt::Debug;

    fn zero(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_unit(&self, a: &Self::E) -> bool;
    /// Pivot preference: smaller sorts first.
    fn magnitude_cmp(&self, a: &Self::E, b: &Self::E) -> Ordering;
    /// A `q` making `a - q b` as small as possible; exact when `b` is a unit.
    fn quotient(&self, a: &Self::E, b: &Self::E) -> Result<Self::E, Overflow>;
    /// `a - q b`.
    fn sub_mul(&self, a: &Self::E, q: &Self::E, b: &Self::E) -> Result<Self::E, Overflow>;
}

/// Integers in machine words; every operation is checked.
pub(crate) struct SmallZ;

impl Domain for SmallZ {
    type E = i64;

    fn zero(&self) -> i64 {
        0
    }
    fn is_zero(&self, a: &i64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &i64) -> bool {
        *a == 1 || *a == -1
    }
    fn magnitude_cmp(&self, a: &i64, b: &i64) -> Ordering {
        a.unsigned_abs().cmp(&b.unsigned_abs())
    }
    fn quotient(&self, a: &i64, b: &i64) -> Result<i64, Overflow> {
        let (a, b) = (*a as i128, *b as i128);
        let mut q = a.div_euclid(b);
        let r = a.rem_euclid(b);
        if 2 * r > b.abs() {
            q += b.signum();
        }
        i64::try_from(q).map_err(|_| Overflow)
    }
    fn sub_mul(&self, a: &i64, q: &i64, b: &i64) -> Result<i64, Overflow> {
        q.checked_mul(*b)
            .and_then(|p| a.checked_sub(p))
            .ok_or(Overflow)
    }
}

/// Arbitrary-precision integers.
pub(crate) struct BigZ;

impl Domain for BigZ {
    type E = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn magnitude_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.magnitude().cmp(b.magnitude())
    }
    fn quotient(&self, a: &BigInt, b: &BigInt) -> Result<BigInt, Overflow> {
        let (mut q, r) = a.div_mod_floor(b);
        // r has the sign of b; round to nearest.
        let r2: BigInt = r.abs() * 2;
        if r2 > b.abs() {
            q += 1;
        }
        Ok(q)
    }
    fn sub_mul(&self, a: &BigInt, q: &BigInt, b: &BigInt) -> Result<BigInt, Overflow> {
        Ok(a - q * b)
    }
}

/// The prime field Z/p.
pub(crate) struct Fp(pub u64);

impl Fp {
    fn inv(&self, a: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a % self.0;
        let mut e = self.0 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = ((acc as u128 * base as u128) % self.0 as u128) as u64;
            }
            base = ((base as u128 * base as u128) % self.0 as u128) as u64;
            e >>= 1;
        }
        acc
    }
}

impl Domain for Fp {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn magnitude_cmp(&self, _: &u64, _: &u64) -> Ordering {
        Ordering::Equal
    }
    fn quotient(&self, a: &u64, b: &u64) -> Result<u64, Overflow> {
        Ok(((*a as u128 * self.inv(*b) as u128) % self.0 as u128) as u64)
    }
    fn sub_mul(&self, a: &u64, q: &u64, b: &u64) -> Result<u64, Overflow> {
        let p = self.0 as u128;
        let qb = (*q as u128 * *b as u128) % p;
        Ok(((*a as u128 + p - qb) % p) as u64)
    }
}

type SVec<E> = Vec<(u32, E)>;

struct Elim<'a, D: Domain> {
    dom: &'a D,
    vecs: Vec<SVec<D::E>>,
    alive: Vec<bool>,
    /// coordinate -> vectors that may contain it (stale and repeated ids allowed)
    index: Vec<Vec<u32>>,
    /// coordinate -> exact number of live vectors containing it
    count: Vec<u32>,
    diag: Vec<D::E>,
}

impl<'a, D: Domain> Elim<'a, D> {
    fn new(dom: &'a D, dim: usize, vecs: Vec<SVec<D::E>>) -> Self {
        let mut index = vec![Vec::new(); dim];
        let mut count = vec![0u32; dim];
        let mut alive = Vec::with_capacity(vecs.len());
        for (i, v) in vecs.iter().enumerate() {
            alive.push(!v.is_empty());
            for (c, _) in v {
                index[*c as usize].push(i as u32);
                count[*c as usize] += 1;
            }
        }
        Elim {
            dom,
            vecs,
            alive,
            index,
            count,
            diag: Vec::new(),
        }
    }

    fn value_at(v: &SVec<D::E>, c: u32) -> Option<&D::E> {
        v.binary_search_by_key(&c, |(cc, _)| *cc)
            .ok()
            .map(|i| &v[i].1)
    }

    /// `w -= q * p`, keeping the coordinate index and counts in step.
    fn axpy(&mut self, w: u32, q: &D::E, p: &SVec<D::E>) -> Result<(), Overflow> {
        let old = std::mem::take(&mut self.vecs[w as usize]);
        let mut out: SVec<D::E> = Vec::with_capacity(old.len() + p.len());
        let (mut i, mut j) = (0, 0);
        while i < old.len() || j < p.len() {
            let take_old = j == p.len() || (i < old.len() && old[i].0 < p[j].0);
            let take_p = i == old.len() || (j < p.len() && p[j].0 < old[i].0);
            if take_old {
                out.push(old[i].clone());
                i += 1;
            } else if take_p {
                let (c, ref b) = p[j];
                let v = self.dom.sub_mul(&self.dom.zero(), q, b)?;
                if !self.dom.is_zero(&v) {
                    out.push((c, v));
                    self.count[c as usize] += 1;
                    self.index[c as usize].push(w);
                }
                j += 1;
            } else {
                let c = old[i].0;
                let v = self.dom.sub_mul(&old[i].1, q, &p[j].1)?;
                if self.dom.is_zero(&v) {
                    self.count[c as usize] -= 1;
                } else {
                    out.push((c, v));
                }
                i += 1;
                j += 1;
            }
        }
        if out.is_empty() {
            self.alive[w as usize] = false;
        }
        self.vecs[w as usize] = out;
        Ok(())
    }

    /// Reduces coordinate `c` of every other live vector by the pivot vector
    /// `v`. Returns the vectors that changed.
    fn clear_coordinate(&mut self, v: u32, c: u32) -> Result<Vec<u32>, Overflow> {
        let pv = self.vecs[v as usize].clone();
        let pc = Self::value_at(&pv, c).expect("pivot present").clone();
        let candidates = std::mem::take(&mut self.index[c as usize]);
        let mut keep = vec![v];
        let mut touched = Vec::new();
        for w in candidates {
            if w == v || !self.alive[w as usize] {
                continue;
            }
            let Some(wc) = Self::value_at(&self.vecs[w as usize], c).cloned() else {
                continue;
            };
            let q = self.dom.quotient(&wc, &pc)?;
            if !self.dom.is_zero(&q) {
                self.axpy(w, &q, &pv)?;
                touched.push(w);
            }
            if self.alive[w as usize] && Self::value_at(&self.vecs[w as usize], c).is_some() {
                keep.push(w);
            }
        }
        keep.sort_unstable();
        keep.dedup();
        self.index[c as usize] = keep;
        Ok(touched)
    }

    /// Drops pivot vector `v` once coordinate `c` appears nowhere else and
    /// every other entry of `v` is a multiple of the pivot.
    fn retire(&mut self, v: u32, c: u32) {
        let pv = std::mem::take(&mut self.vecs[v as usize]);
        for (cc, _) in &pv {
            self.count[*cc as usize] -= 1;
        }
        self.alive[v as usize] = false;
        let pc = Self::value_at(&pv, c).expect("pivot present").clone();
        self.diag.push(pc);
    }

    fn unit_phase(&mut self) -> Result<(), Overflow> {
        let mut heap: BinaryHeap<Reverse<(usize, u32)>> = self
            .vecs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty())
            .map(|(i, v)| Reverse((v.len(), i as u32)))
            .collect();
        while let Some(Reverse((len, v))) = heap.pop() {
            if !self.alive[v as usize] || self.vecs[v as usize].len() != len {
                continue;
            }
            let pivot = self.vecs[v as usize]
                .iter()
                .filter(|(_, x)| self.dom.is_unit(x))
                .min_by_key(|(c, _)| self.count[*c as usize])
                .map(|(c, _)| *c);
            let Some(c) = pivot else { continue };
            let touched = self.clear_coordinate(v, c)?;
            self.retire(v, c);
            for w in touched {
                if self.alive[w as usize] {
                    heap.push(Reverse((self.vecs[w as usize].len(), w)));
                }
            }
        }
        Ok(())
    }

    fn euclid_phase(&mut self) -> Result<(), Overflow> {
        loop {
            let mut best: Option<(u32, u32)> = None;
            for (i, vec) in self.vecs.iter().enumerate() {
                if !self.alive[i] {
                    continue;
                }
                for (c, x) in vec {
                    let better = match best {
                        None => true,
                        Some((bv, bc)) => {
                            let y = Self::value_at(&self.vecs[bv as usize], bc).unwrap();
                            match self.dom.magnitude_cmp(x, y) {
                                Ordering::Less => true,
                                Ordering::Greater => false,
                                Ordering::Equal => {
                                    let cost = vec.len() * (self.count[*c as usize] as usize);
                                    let best_cost = self.vecs[bv as usize].len()
                                        * (self.count[bc as usize] as usize);
                                    cost < best_cost
                                }
                            }
                        }
                    };
                    if better {
                        best = Some((i as u32, *c));
                    }
                }
            }
            let Some((v, c)) = best else { return Ok(()) };
            self.clear_coordinate(v, c)?;
            if self.count[c as usize] > 1 {
                continue;
            }
            // Coordinate c now lives only in v: reduce v's other entries by
            // coordinate operations, which touch no other vector.
            let pc = Self::value_at(&self.vecs[v as usize], c).unwrap().clone();
            let mut reduced: SVec<D::E> = Vec::new();
            let mut dirty = false;
            for (cc, x) in std::mem::take(&mut self.vecs[v as usize]) {
                if cc == c {
                    reduced.push((cc, x));
                    continue;
                }
                let q = self.dom.quotient(&x, &pc)?;
                let r = self.dom.sub_mul(&x, &q, &pc)?;
                if self.dom.is_zero(&r) {
                    self.count[cc as usize] -= 1;
                } else {
                    dirty = true;
                    reduced.push((cc, r));
                }
            }
            self.vecs[v as usize] = reduced;
            if !dirty {
                self.retire(v, c);
            }
        }
    }
}

/// Diagonalizes the matrix whose vectors are `vecs` over coordinates
/// `0..dim`. Returns the nonzero diagonal entries (one per unit of rank).
pub(crate) fn diagonalize<D: Domain>(
    dom: &D,
    dim: usize,
    vecs: Vec<SVec<D::E>>,
) -> Result<Vec<D::E>, Overflow> {
    let mut e = Elim::new(dom, dim, vecs);
    e.unit_phase()?;
    e.euclid_phase()?;
    Ok(e.diag)
}

/// Turns a list of nonzero diagonal entries into invariant factors
/// `d1 | d2 | ...` (absolute values, units included).
pub(crate) fn divisibility_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for x in d.iter_mut() {
        *x = x.abs();
    }
    d.sort();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if d[i].is_one() {
                break;
            }
            if (&d[j] % &d[i]).is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d.sort();
    d
}
