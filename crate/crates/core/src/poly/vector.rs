use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::int_poly::log2_abs;
use super::IntPoly;
use crate::{Error, Result};

/// `x^degree · e_row`. Rows are 0-based. The derived order compares the row
/// first and then the degree, which is the module order `≺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub row: usize,
    pub degree: usize,
}

/// `coeff · x^degree · e_row` with `coeff ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigInt,
    pub degree: usize,
    pub row: usize,
}

impl Term {
    pub fn monomial(&self) -> Monomial {
        Monomial {
            row: self.row,
            degree: self.degree,
        }
    }

    /// The term order: monomials first, then `|coeff|`. Terms with the same
    /// monomial and opposite coefficients compare equal.
    pub fn cmp_order(&self, other: &Term) -> Ordering {
        self.monomial()
            .cmp(&other.monomial())
            .then_with(|| self.coeff.abs().cmp(&other.coeff.abs()))
    }

    /// `self` divides `other` as terms of `Z[x]^n`.
    pub fn divides(&self, other: &Term) -> bool {
        self.row == other.row
            && self.degree <= other.degree
            && other.coeff.is_multiple_of(&self.coeff)
    }

    /// A term `a·x^α·e_i` is irreducible by `b·x^β·e_j` unless `i = j`,
    /// `α ≥ β` and `a ∉ [0, |b|)`.
    pub fn is_reduced_by(&self, divisor: &Term) -> bool {
        coeff_is_reduced(&self.coeff, self.row, self.degree, divisor)
    }
}

pub(crate) fn coeff_is_reduced(a: &BigInt, row: usize, degree: usize, divisor: &Term) -> bool {
    row != divisor.row
        || degree < divisor.degree
        || (!a.is_negative() && a < &divisor.coeff.abs())
}

/// A column vector in `Z[x]^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVec {
    entries: Vec<IntPoly>,
}

impl PolyVec {
    pub fn new(entries: Vec<IntPoly>) -> Self {
        PolyVec { entries }
    }

    pub fn zero(n: usize) -> Self {
        PolyVec {
            entries: vec![IntPoly::zero(); n],
        }
    }

    /// `e_row` in `Z[x]^n`.
    pub fn unit(n: usize, row: usize) -> Self {
        let mut v = Self::zero(n);
        v.entries[row] = IntPoly::one();
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[IntPoly] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [IntPoly] {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<IntPoly> {
        self.entries
    }

    pub fn entry(&self, row: usize) -> &IntPoly {
        &self.entries[row]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(IntPoly::is_zero)
    }

    /// Deepest row with a nonzero entry.
    pub fn pivot_row(&self) -> Option<usize> {
        self.entries.iter().rposition(|e| !e.is_zero())
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        let row = self.pivot_row()?;
        Some(Monomial {
            row,
            degree: self.entries[row].degree().unwrap(),
        })
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        let row = self.pivot_row()?;
        self.entries[row].leading_coeff()
    }

    /// The `≺`-largest term: deepest nonzero row, then highest degree.
    pub fn leading_term(&self) -> Result<Term> {
        let m = self.leading_monomial().ok_or(Error::ZeroVector)?;
        Ok(Term {
            coeff: self.entries[m.row].leading_coeff().unwrap().clone(),
            degree: m.degree,
            row: m.row,
        })
    }

    /// Maximum entry degree, `None` for the zero vector.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(IntPoly::degree).max()
    }

    pub fn height(&self) -> f64 {
        log2_abs(&self.max_abs_coeff())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.entries
            .iter()
            .map(IntPoly::max_abs_coeff)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in ascending `≺` order.
    pub fn terms(&self) -> impl Iterator<Item = Term> + '_ {
        self.entries.iter().enumerate().flat_map(|(row, e)| {
            e.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(degree, c)| Term {
                    coeff: c.clone(),
                    degree,
                    row,
                })
        })
    }

    pub fn shift(&self, k: usize) -> PolyVec {
        PolyVec {
            entries: self.entries.iter().map(|e| e.shift(k)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> PolyVec {
        PolyVec {
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> PolyVec {
        PolyVec {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// `self += c · x^k · other`.
    pub fn add_scaled_shifted(&mut self, c: &BigInt, k: usize, other: &PolyVec) {
        debug_assert_eq!(self.len(), other.len());
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            a.add_scaled_shifted(c, k, b);
        }
    }

    /// `self += q · other` for a polynomial multiplier `q`.
    pub fn add_poly_multiple(&mut self, q: &IntPoly, other: &PolyVec) {
        for (k, c) in q.coeffs().iter().enumerate() {
            if !c.is_zero() {
                self.add_scaled_shifted(c, k, other);
            }
        }
    }

    pub fn add(&self, other: &PolyVec) -> PolyVec {
        let mut out = self.clone();
        out.add_scaled_shifted(&BigInt::from(1), 0, other);
        out
    }

    pub fn sub(&self, other: &PolyVec) -> PolyVec {
        let mut out = self.clone();
        out.add_scaled_shifted(&BigInt::from(-1), 0, other);
        out
    }

    /// Dot product with a row of polynomials.
    pub fn dot(&self, row: &[IntPoly]) -> IntPoly {
        let mut acc = IntPoly::zero();
        for (a, b) in self.entries.iter().zip(row) {
            acc = &acc + &(a * b);
        }
        acc
    }
}

impl fmt::Display for PolyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// An `n × m` matrix over `Z[x]`, stored as columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    nrows: usize,
    cols: Vec<PolyVec>,
}

impl PolyMatrix {
    pub fn new(nrows: usize, cols: Vec<PolyVec>) -> Result<Self> {
        if let Some((j, _)) = cols.iter().enumerate().find(|(_, c)| c.len() != nrows) {
            return Err(Error::Dimension(format!(
                "column {j} has {} rows, expected {nrows}",
                cols[j].len()
            )));
        }
        Ok(PolyMatrix { nrows, cols })
    }

    pub fn empty(nrows: usize) -> Self {
        PolyMatrix {
            nrows,
            cols: Vec::new(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let mut cols = vec![Vec::with_capacity(nrows); ncols];
        for row in rows {
            for (j, e) in row.into_iter().enumerate() {
                cols[j].push(e);
            }
        }
        Ok(PolyMatrix {
            nrows,
            cols: cols.into_iter().map(PolyVec::new).collect(),
        })
    }

    /// Parses each entry with [`IntPoly::from_str`](std::str::FromStr).
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<IntPoly>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    /// A `1 × m` polynomial vector.
    pub fn from_polys(polys: Vec<IntPoly>) -> Self {
        PolyMatrix {
            nrows: 1,
            cols: polys.into_iter().map(|p| PolyVec::new(vec![p])).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix {
            nrows: n,
            cols: (0..n).map(|i| PolyVec::unit(n, i)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn cols(&self) -> &[PolyVec] {
        &self.cols
    }

    pub fn into_cols(self) -> Vec<PolyVec> {
        self.cols
    }

    pub fn col(&self, j: usize) -> &PolyVec {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &IntPoly {
        self.cols[j].entry(i)
    }

    pub fn push(&mut self, col: PolyVec) {
        assert_eq!(col.len(), self.nrows, "column length mismatch");
        self.cols.push(col);
    }

    pub fn row(&self, i: usize) -> Vec<IntPoly> {
        self.cols.iter().map(|c| c.entry(i).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(PolyVec::is_zero)
    }

    /// Same matrix without its zero columns.
    pub fn without_zero_cols(&self) -> PolyMatrix {
        PolyMatrix {
            nrows: self.nrows,
            cols: self.cols.iter().filter(|c| !c.is_zero()).cloned().collect(),
        }
    }

    /// Maximum entry degree, `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.cols.iter().filter_map(PolyVec::degree).max()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.cols
            .iter()
            .map(PolyVec::max_abs_coeff)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn height(&self) -> f64 {
        log2_abs(&self.max_abs_coeff())
    }

    /// Maximum degree of row `i` over all columns.
    pub fn row_degree(&self, i: usize) -> Option<usize> {
        self.cols.iter().filter_map(|c| c.entry(i).degree()).max()
    }

    /// `self · v` for a column of polynomials `v`.
    pub fn mul_vec(&self, v: &PolyVec) -> Result<PolyVec> {
        if v.len() != self.ncols() {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.ncols()
            )));
        }
        let mut out = PolyVec::zero(self.nrows);
        for (col, q) in self.cols.iter().zip(v.entries()) {
            out.add_poly_multiple(q, col);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        let cols = other
            .cols
            .iter()
            .map(|c| self.mul_vec(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            nrows: self.nrows,
            cols,
        })
    }

    /// Columns permuted: column `j` of the result is column `perm[j]`.
    pub fn permute_cols(&self, perm: &[usize]) -> PolyMatrix {
        PolyMatrix {
            nrows: self.nrows,
            cols: perm.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }
}

impl fmt::Display for PolyMatrix {
    /// Row-major, e.g. `[[24x + 5, -9x - 2], [-2, x + 1]]`; a `1 × m` matrix
    /// prints as the flat list `[12, 6x, 3x^2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_row = |f: &mut fmt::Formatter<'_>, i: usize| -> fmt::Result {
            write!(f, "[")?;
            for (j, c) in self.cols.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", c.entry(i))?;
            }
            write!(f, "]")
        };
        if self.nrows == 1 {
            return fmt_row(f, 0);
        }
        write!(f, "[")?;
        for i in 0..self.nrows {
            if i > 0 {
                write!(f, ", ")?;
            }
            fmt_row(f, i)?;
        }
        write!(f, "]")
    }
}
