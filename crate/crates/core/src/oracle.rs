//! Reference Gröbner bases, computed independently of the prolongation loop.
//!
//! [`buchberger`] is plain pair completion: no pair criteria, pairs taken
//! smallest lcm monomial first, each pair contributing the S-vector and the
//! lcm-type combination so that the completed set is a strong basis. It is
//! practical only for small instances, since coefficients swell.
//!
//! [`lattice_basis`] works by linear algebra over a growing degree window and
//! stops on the Buchberger criterion, which certifies the result.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::{
    ext_gcd, inter_reduce, lcm_svector, reduce_by_basis, svector, IntPoly, Monomial, PolyMatrix,
    PolyVec,
};
use crate::verify::{is_groebner, is_groebner_cols};
use crate::zhnf::hnf_columns;
use crate::{Error, Result};

/// Upper bound on processed pairs before giving up.
pub const PAIR_LIMIT: usize = 100_000;

/// A Gröbner basis of the column module of `f` (not inter-reduced).
pub fn buchberger(f: &PolyMatrix) -> Result<PolyMatrix> {
    let mut state = Completion::default();
    for c in f.cols() {
        state.insert(c.clone());
    }
    if state.basis.iter().all(Option::is_none) {
        return Err(Error::ZeroModule);
    }
    let mut processed = 0;
    while let Some((i, j)) = state.pairs.pop() {
        let (Some(a), Some(b)) = (&state.basis[i], &state.basis[j]) else {
            continue;
        };
        processed += 1;
        if processed > PAIR_LIMIT {
            return Err(Error::ResourceLimit(format!("more than {PAIR_LIMIT} pairs")));
        }
        let (s, l) = (svector(a, b)?, lcm_svector(a, b)?);
        state.insert(s);
        state.insert(l);
    }
    PolyMatrix::new(f.nrows(), state.basis.into_iter().flatten().collect())
}

#[derive(Default)]
struct Pairs {
    heap: BinaryHeap<Reverse<(Monomial, usize, usize, usize)>>,
    created: usize,
}

impl Pairs {
    fn push(&mut self, lcm: Monomial, i: usize, j: usize) {
        self.heap.push(Reverse((lcm, self.created, i, j)));
        self.created += 1;
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        self.heap.pop().map(|Reverse((_, _, i, j))| (i, j))
    }
}

/// Basis under completion. Removed elements leave `None` so that queued
/// pairs keep valid indices.
#[derive(Default)]
struct Completion {
    basis: Vec<Option<PolyVec>>,
    pairs: Pairs,
}

impl Completion {
    fn active_except(&self, skip: Option<usize>) -> Vec<PolyVec> {
        self.basis
            .iter()
            .enumerate()
            .filter(|&(i, g)| g.is_some() && Some(i) != skip)
            .map(|(_, g)| g.clone().unwrap())
            .collect()
    }

    /// Adds the normal form of `v`. Every replacement below is unimodular, so
    /// the module never changes:
    /// - an element with the same leading monomial is merged with the new one
    ///   by a Bézout step, giving a gcd leading coefficient and a remainder;
    /// - elements whose leading term becomes reducible are taken out and
    ///   inserted again;
    /// - elements whose tails become reducible are replaced by their normal
    ///   form (as fresh entries, so that their pairs are formed again).
    fn insert(&mut self, v: PolyVec) {
        let mut pending = vec![v];
        while let Some(v) = pending.pop() {
            let r = reduce_by_basis(&v, &self.active_except(None));
            let Ok(lt) = r.leading_term() else {
                continue;
            };
            let twin = self.basis.iter().position(|g| {
                g.as_ref().is_some_and(|g| g.leading_monomial() == Some(lt.monomial()))
            });
            if let Some(i) = twin {
                let g = self.basis[i].take().unwrap();
                let gc = g.leading_coeff().unwrap().clone();
                let (c, u, w) = ext_gcd(&gc, &lt.coeff);
                let mut low = g.scale(&(&lt.coeff / &c));
                low.add_scaled_shifted(&-(&gc / &c), 0, &r);
                let mut merged = g.scale(&u);
                merged.add_scaled_shifted(&w, 0, &r);
                pending.push(low);
                pending.push(merged);
                continue;
            }
            for i in 0..self.basis.len() {
                let Some(g) = &self.basis[i] else { continue };
                if !g.leading_term().unwrap().is_reduced_by(&lt) {
                    pending.push(self.basis[i].take().unwrap());
                }
            }
            self.push(r);
            for i in 0..self.basis.len() - 1 {
                let Some(g) = &self.basis[i] else { continue };
                let t = reduce_by_basis(g, &self.active_except(Some(i)));
                if &t != g {
                    self.basis[i] = None;
                    self.push(t);
                }
            }
        }
    }

    fn push(&mut self, r: PolyVec) {
        let lt = r.leading_term().expect("pushed elements are nonzero");
        let k = self.basis.len();
        for (i, g) in self.basis.iter().enumerate() {
            let Some(g) = g else { continue };
            let gt = g.leading_term().unwrap();
            if gt.row == lt.row {
                let lcm = Monomial { row: lt.row, degree: gt.degree.max(lt.degree) };
                self.pairs.push(lcm, i, k);
            }
        }
        self.basis.push(Some(r));
    }
}

/// Largest degree window tried by [`lattice_basis`].
pub const WINDOW_LIMIT: usize = 4096;

/// A Gröbner basis of the column module of `f` by linear algebra: for a
/// growing degree window `K`, the Hermite basis of the `Z`-span of all
/// `x^k f_j` of degree `≤ K` is inter-reduced, and accepted once the result
/// passes the Buchberger criterion and reduces every lattice vector to zero.
/// The lattice contains the columns of `f`, so the accepted set generates
/// the same module.
pub fn lattice_basis(f: &PolyMatrix) -> Result<PolyMatrix> {
    let n = f.nrows();
    let gens: Vec<&PolyVec> = f.cols().iter().filter(|c| !c.is_zero()).collect();
    let Some(d) = gens.iter().filter_map(|c| c.degree()).max() else {
        return Err(Error::ZeroModule);
    };
    let mut window = d.max(1);
    while window <= WINDOW_LIMIT {
        let width = window + 1;
        let mut cols = Vec::new();
        for g in &gens {
            for k in 0..=window - g.degree().unwrap() {
                let mut flat = vec![BigInt::zero(); n * width];
                for (i, p) in g.entries().iter().enumerate() {
                    for (e, c) in p.coeffs().iter().enumerate() {
                        flat[i * width + e + k] = c.clone();
                    }
                }
                cols.push(flat);
            }
        }
        let lattice: Vec<PolyVec> = hnf_columns(n * width, cols, false)
            .basis
            .into_iter()
            .map(|flat| {
                PolyVec::new(
                    flat.chunks(width).map(|c| IntPoly::from_coeffs(c.to_vec())).collect(),
                )
            })
            .collect();
        let candidate = inter_reduce(lattice.clone());
        if is_groebner_cols(&candidate)
            && lattice.iter().all(|v| reduce_by_basis(v, &candidate).is_zero())
        {
            return PolyMatrix::new(n, candidate);
        }
        window += (window / 2).max(1);
    }
    Err(Error::ResourceLimit(format!("degree window above {WINDOW_LIMIT}")))
}

/// The reduced Gröbner basis with positive leading coefficients, ascending
/// under `≺`. Fails if `g` does not pass the Buchberger criterion.
pub fn interreduce(g: &PolyMatrix) -> Result<PolyMatrix> {
    if !is_groebner(g) {
        return Err(Error::NotGroebner);
    }
    PolyMatrix::new(g.nrows(), inter_reduce(g.cols().to_vec()))
}
