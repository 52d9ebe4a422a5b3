//! Column Hermite normal form of integer matrices.
//!
//! A matrix `H` is in column HNF when its zero columns come first and every
//! nonzero column `j` has a pivot row `f(j)` (its last nonzero row) such that
//! `f` is strictly increasing, `h[f(j)][j] ≥ 1` and `0 ≤ h[f(j)][k] < h[f(j)][j]`
//! for every later column `k`. Entries of non-pivot rows are unconstrained.
//!
//! The engine inserts columns one at a time into an echelon basis keyed by
//! pivot row, combining colliding pivots with Bézout steps, and finishes with a
//! right-reduction of the pivot rows. Every step is a unimodular column
//! operation, so the transform `U` with `A·U = [0 | H]` can be tracked on
//! request.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::ext_gcd;
use crate::{Error, Result};

/// Dense row-major integer matrix. A matrix with zero columns (but any number
/// of rows) is the empty matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows<R, T>(rows: &[R]) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Clone + Into<BigInt>,
    {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from columns, each of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<BigInt>]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Dimension(format!(
                    "column {j} has {} entries, expected {rows}",
                    c.len()
                )));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_cols(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_col_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_zero())
    }

    /// Columns `range` as a new matrix.
    pub fn select_cols(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = range.map(|j| self.col(j)).collect();
        Self::from_cols(self.rows, &cols).expect("columns have the right length")
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * prev })
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let (n, m) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..m {
            let Some(p) = (rank..n).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            for i in rank + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                let pv = a[rank][c].clone();
                for j in c..m {
                    let v = &a[i][j] * &pv - &f * &a[rank][j];
                    a[i][j] = v;
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Column HNF `A·U = [0 | H]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfResult {
    /// The nonzero columns of the HNF.
    pub h: IntMatrix,
    /// The unimodular transform, when tracked. Its first `m - rank` columns
    /// are the syzygy basis.
    pub u: Option<IntMatrix>,
    /// Pivot row of each column of `h`, strictly increasing.
    pub pivot_rows: Vec<usize>,
}

impl HnfResult {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// A `Z`-basis of `{y : A·y = 0}`: the first `m - rank` columns of `U`.
    pub fn syzygies(&self) -> Option<IntMatrix> {
        let u = self.u.as_ref()?;
        Some(u.select_cols(0..u.cols() - self.rank()))
    }

    /// `[0 | H]` with the zero columns restored.
    pub fn full_h(&self, m: usize) -> IntMatrix {
        let zeros = m - self.h.cols();
        let mut cols = vec![vec![BigInt::zero(); self.h.rows()]; zeros];
        cols.extend(self.h.to_cols());
        IntMatrix::from_cols(self.h.rows(), &cols).expect("consistent dimensions")
    }
}

/// Column HNF without the transform.
pub fn hnf(a: &IntMatrix) -> HnfResult {
    run(a, false)
}

/// Column HNF together with a unimodular `U` satisfying `A·U = [0 | H]`.
pub fn hnf_with_transform(a: &IntMatrix) -> HnfResult {
    run(a, true)
}

fn run(a: &IntMatrix, track: bool) -> HnfResult {
    let out = hnf_columns(a.rows(), a.to_cols(), track);
    let h = IntMatrix::from_cols(a.rows(), &out.basis).expect("basis columns have full length");
    let u = out.transforms.map(|(syz, basis)| {
        let mut cols = syz;
        cols.extend(basis);
        IntMatrix::from_cols(a.cols(), &cols).expect("transform columns have full length")
    });
    HnfResult {
        h,
        u,
        pivot_rows: out.pivots,
    }
}

/// Output of [`hnf_columns`].
pub(crate) struct ColumnHnf {
    /// Nonzero HNF columns, ascending pivot.
    pub basis: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    /// `(syzygy columns of U, columns of U producing basis)` when tracked.
    pub transforms: Option<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)>,
}

struct Entry {
    v: Vec<BigInt>,
    t: Vec<BigInt>,
}

fn last_nonzero(v: &[BigInt]) -> Option<usize> {
    v.iter().rposition(|x| !x.is_zero())
}

/// `dst += c·src` over `dst[..len]`.
fn axpy(dst: &mut [BigInt], c: &BigInt, src: &[BigInt], len: usize) {
    for (d, s) in dst[..len].iter_mut().zip(&src[..len]) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

/// Brings the entries of `e` at the pivot rows below `top` into
/// `[0, pivot)`, highest row first. Keeps intermediate entries small.
fn reduce_below(e: &mut Entry, top: usize, basis: &BTreeMap<usize, Entry>, m: usize) {
    for (&p, w) in basis.range(..top).rev() {
        let q = e.v[p].div_floor(&w.v[p]);
        if q.is_zero() {
            continue;
        }
        let q = -q;
        axpy(&mut e.v, &q, &w.v, p + 1);
        if !e.t.is_empty() {
            axpy(&mut e.t, &q, &w.t, m);
        }
    }
}

/// Column HNF of the matrix whose columns are `cols` (each of length `rows`).
pub(crate) fn hnf_columns(rows: usize, cols: Vec<Vec<BigInt>>, track: bool) -> ColumnHnf {
    let m = cols.len();
    let mut basis: BTreeMap<usize, Entry> = BTreeMap::new();
    let mut syz: Vec<Vec<BigInt>> = Vec::new();

    for (idx, v) in cols.into_iter().enumerate() {
        debug_assert_eq!(v.len(), rows);
        let t = if track {
            let mut t = vec![BigInt::zero(); m];
            t[idx] = BigInt::one();
            t
        } else {
            Vec::new()
        };
        let mut cur = Entry { v, t };
        loop {
            let Some(p) = last_nonzero(&cur.v) else {
                if track {
                    syz.push(cur.t);
                }
                break;
            };
            let Some(mut w) = basis.remove(&p) else {
                if cur.v[p].is_negative() {
                    cur.v.iter_mut().for_each(|x| *x = -&*x);
                    cur.t.iter_mut().for_each(|x| *x = -&*x);
                }
                reduce_below(&mut cur, p, &basis, m);
                basis.insert(p, cur);
                break;
            };
            let (wp, vp) = (w.v[p].clone(), cur.v[p].clone());
            if vp.is_multiple_of(&wp) {
                let q = -(&vp / &wp);
                axpy(&mut cur.v, &q, &w.v, p + 1);
                if track {
                    axpy(&mut cur.t, &q, &w.t, m);
                }
            } else {
                // [w, v] <- [s·w + c·v, (wp/g)·v - (vp/g)·w], determinant 1
                let (g, s, c) = ext_gcd(&wp, &vp);
                let (a, b) = (&wp / &g, -(&vp / &g));
                let combine = |x: &[BigInt], y: &[BigInt], len: usize| -> (Vec<BigInt>, Vec<BigInt>) {
                    let mut nw = Vec::with_capacity(x.len());
                    let mut nv = Vec::with_capacity(x.len());
                    for i in 0..x.len() {
                        if i >= len || (x[i].is_zero() && y[i].is_zero()) {
                            nw.push(BigInt::zero());
                            nv.push(BigInt::zero());
                        } else {
                            nw.push(&s * &x[i] + &c * &y[i]);
                            nv.push(&a * &y[i] + &b * &x[i]);
                        }
                    }
                    (nw, nv)
                };
                let (nw, nv) = combine(&w.v, &cur.v, p + 1);
                w.v = nw;
                cur.v = nv;
                if track {
                    let (nw, nv) = combine(&w.t, &cur.t, m);
                    w.t = nw;
                    cur.t = nv;
                }
                reduce_below(&mut w, p, &basis, m);
            }
            basis.insert(p, w);
        }
    }

    let pivots: Vec<usize> = basis.keys().copied().collect();
    let mut entries: Vec<Entry> = basis.into_values().collect();
    for k in 1..entries.len() {
        let (done, rest) = entries.split_at_mut(k);
        let col = &mut rest[0];
        for j in (0..k).rev() {
            let p = pivots[j];
            let q = col.v[p].div_floor(&done[j].v[p]);
            if q.is_zero() {
                continue;
            }
            let q = -q;
            axpy(&mut col.v, &q, &done[j].v, p + 1);
            if track {
                axpy(&mut col.t, &q, &done[j].t, m);
            }
        }
    }

    let transforms = track.then(|| {
        let basis_t = entries.iter_mut().map(|e| std::mem::take(&mut e.t)).collect();
        (syz, basis_t)
    });
    ColumnHnf {
        basis: entries.into_iter().map(|e| e.v).collect(),
        pivots,
        transforms,
    }
}

/// Checks the column HNF shape, allowing leading zero columns.
pub fn is_hnf_int(h: &IntMatrix) -> bool {
    let zeros = (0..h.cols()).take_while(|&j| h.is_col_zero(j)).count();
    let mut pivots = Vec::with_capacity(h.cols() - zeros);
    for j in zeros..h.cols() {
        let col = h.col(j);
        let Some(p) = last_nonzero(&col) else {
            return false;
        };
        if !col[p].is_positive() || pivots.last().is_some_and(|&q| q >= p) {
            return false;
        }
        pivots.push(p);
    }
    for (jj, &p) in pivots.iter().enumerate() {
        let pivot = h.get(p, zeros + jj);
        for k in zeros + jj + 1..h.cols() {
            let e = h.get(p, k);
            if e.is_negative() || e >= pivot {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn check(a: &IntMatrix) -> HnfResult {
        let r = hnf_with_transform(a);
        let u = r.u.as_ref().unwrap();
        assert_eq!(a.mul(u).unwrap(), r.full_h(a.cols()));
        assert!(u.det().unwrap().abs().is_one());
        assert!(is_hnf_int(&r.h));
        r
    }

    #[test]
    fn single_row() {
        let a = m(&[&[4, 2]]);
        let r = check(&a);
        assert_eq!(r.h, m(&[&[2]]));
        let syz = r.syzygies().unwrap();
        assert!(a.mul(&syz).unwrap().is_zero());
        assert_eq!(syz.cols(), 1);
    }

    #[test]
    fn identity_is_fixed() {
        let r = check(&IntMatrix::identity(2));
        assert_eq!(r.h, IntMatrix::identity(2));
        assert_eq!(r.syzygies().unwrap().cols(), 0);
    }

    #[test]
    fn zero_matrix() {
        let r = check(&IntMatrix::zeros(2, 3));
        assert_eq!(r.h.cols(), 0);
        assert_eq!(r.syzygies().unwrap().cols(), 3);
    }

    #[test]
    fn coefficient_matrix_example() {
        // columns: 6x^3+3x^2+12, 6x^3+3x^2+6x, 6x^3+15x^2, 6x^3+3x^2
        let a = m(&[&[12, 0, 0, 0], &[0, 6, 0, 0], &[3, 3, 15, 3], &[6, 6, 6, 6]]);
        let r = check(&a);
        assert_eq!(r.h, m(&[&[12, 0, 0, 0], &[0, 6, 0, 0], &[0, 0, 12, 3], &[0, 0, 0, 6]]));
        assert_eq!(r.pivot_rows, vec![0, 1, 2, 3]);
    }

    #[test]
    fn shape_predicate() {
        assert!(is_hnf_int(&m(&[&[2, 0], &[0, 3]])));
        assert!(is_hnf_int(&m(&[&[2, 1], &[0, 3]])));
        assert!(!is_hnf_int(&m(&[&[2, 2], &[0, 3]])));
        assert!(is_hnf_int(&m(&[&[0, 2], &[0, 0]])));
        assert!(!is_hnf_int(&m(&[&[2, 0], &[0, 0]])));
        assert!(!is_hnf_int(&m(&[&[-2]])));
    }

    #[test]
    fn det_and_rank() {
        assert_eq!(m(&[&[2, 1], &[7, 4]]).det().unwrap(), BigInt::one());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), -BigInt::one());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).det().unwrap(), BigInt::from(-3));
    }
}
