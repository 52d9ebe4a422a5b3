//! Predicates: GHNF shape, the Buchberger criterion, the structure of reduced
//! bases in `Z[x]`, and module membership.

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::poly::{
    content_primpart, is_reduced_by, reduce_by_basis, svector, PolyMatrix, PolyVec, Term,
};
use crate::{Error, Result};

/// A failed GHNF condition. Indices are 1-based: `block` counts row blocks
/// of the staircase, `col` and `col2` count columns within the block.
/// Condition 0 is the staircase shape itself (nonzero columns, ascending
/// order, positive leading coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: u8,
    pub block: usize,
    pub col: usize,
    pub col2: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} violated at (i={}, j={}", self.condition, self.block, self.col)?;
        if let Some(j2) = self.col2 {
            write!(f, ", j'={j2}")?;
        }
        write!(f, ")")
    }
}

/// Every violated GHNF condition, in condition order. Empty iff `c` is a GHNF.
pub fn ghnf_violations(c: &PolyMatrix) -> Vec<Violation> {
    let mut out = Vec::new();
    let cols = c.cols();

    let mut lts: Vec<Term> = Vec::with_capacity(cols.len());
    for (j, col) in cols.iter().enumerate() {
        match col.leading_term() {
            Ok(t) if t.coeff.is_positive() => lts.push(t),
            _ => {
                out.push(Violation { condition: 0, block: 0, col: j + 1, col2: None });
                return out;
            }
        }
    }
    for j in 1..lts.len() {
        if lts[j].row < lts[j - 1].row {
            out.push(Violation { condition: 0, block: 0, col: j + 1, col2: None });
            return out;
        }
    }

    // blocks of consecutive columns sharing a pivot row
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (j, t) in lts.iter().enumerate() {
        match blocks.last_mut() {
            Some(b) if lts[b[0]].row == t.row => b.push(j),
            _ => blocks.push(vec![j]),
        }
    }

    for (bi, b) in blocks.iter().enumerate() {
        for w in 1..b.len() {
            if lts[b[w]].degree <= lts[b[w - 1]].degree {
                out.push(Violation { condition: 1, block: bi + 1, col: w, col2: Some(w + 1) });
            }
        }
    }
    for (bi, b) in blocks.iter().enumerate() {
        for w in 1..b.len() {
            if !lts[b[w - 1]].coeff.is_multiple_of(&lts[b[w]].coeff) {
                out.push(Violation { condition: 2, block: bi + 1, col: w, col2: Some(w + 1) });
            }
        }
    }
    for (bi, b) in blocks.iter().enumerate() {
        for j1 in 0..b.len() {
            for j2 in j1 + 1..b.len() {
                let (f, g) = (&cols[b[j1]], &cols[b[j2]]);
                let (a1, a2) = (&lts[b[j1]], &lts[b[j2]]);
                if a2.degree < a1.degree || !a1.coeff.is_multiple_of(&a2.coeff) {
                    continue;
                }
                let mut s = f.shift(a2.degree - a1.degree);
                s.add_scaled_shifted(&-(&a1.coeff / &a2.coeff), 0, g);
                if !reduce_by_basis(&s, cols).is_zero() {
                    out.push(Violation { condition: 3, block: bi + 1, col: j1 + 1, col2: Some(j2 + 1) });
                }
            }
        }
    }
    for (bi, b) in blocks.iter().enumerate() {
        for (w, &j) in b.iter().enumerate() {
            let reduced = lts
                .iter()
                .enumerate()
                .all(|(k, lt)| k == j || is_reduced_by(&cols[j], lt));
            if !reduced {
                out.push(Violation { condition: 4, block: bi + 1, col: w + 1, col2: None });
            }
        }
    }
    out
}

/// True iff `c` is a GHNF: the columns are the reduced Gröbner basis of their
/// module with positive leading coefficients, ascending under `≺`.
pub fn is_ghnf(c: &PolyMatrix) -> bool {
    ghnf_violations(c).is_empty()
}

/// Buchberger criterion: every pairwise S-vector reduces to zero.
/// Zero columns are ignored.
pub fn is_groebner(g: &PolyMatrix) -> bool {
    is_groebner_cols(g.cols())
}

pub(crate) fn is_groebner_cols(cols: &[PolyVec]) -> bool {
    let nz: Vec<&PolyVec> = cols.iter().filter(|c| !c.is_zero()).collect();
    for i in 0..nz.len() {
        for j in i + 1..nz.len() {
            let s = svector(nz[i], nz[j]).expect("nonzero columns");
            if !s.is_zero() && !reduce_by_basis(&s, cols).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Structure of a reduced basis `b_1 ≺ … ≺ b_k` of an ideal of `Z[x]` with
/// leading terms `c_i x^(d_i)`: strictly increasing degrees, a strict
/// divisibility chain `c_k | … | c_1`, `(c_i/c_k) | b_i`, and the primitive
/// part of `b_1` dividing every `b_i`.
pub fn structure_check_zx(g: &PolyMatrix) -> bool {
    if g.nrows() != 1 || g.ncols() == 0 {
        return false;
    }
    let b: Vec<_> = g.cols().iter().map(|c| c.entry(0).clone()).collect();
    if b.iter().any(|p| p.is_zero()) {
        return false;
    }
    let k = b.len();
    for i in 1..k {
        if b[i].degree() <= b[i - 1].degree() {
            return false;
        }
        let (prev, cur) = (b[i - 1].leading_coeff().unwrap(), b[i].leading_coeff().unwrap());
        if prev.abs() == cur.abs() || !prev.is_multiple_of(cur) {
            return false;
        }
    }
    let ck = b[k - 1].leading_coeff().unwrap();
    for p in &b[..k - 1] {
        let ratio = p.leading_coeff().unwrap() / ck;
        if !p.is_multiple_of_scalar(&ratio) {
            return false;
        }
    }
    let (_, prim) = content_primpart(&b[..1]).expect("b_1 is nonzero");
    b.iter().all(|p| prim.divides(p))
}

/// `f` reduces to zero by `g`. With `checked`, `g` must pass the Buchberger
/// criterion, since otherwise the answer can be a false negative.
pub fn membership(f: &PolyVec, g: &PolyMatrix, checked: bool) -> Result<bool> {
    if f.len() != g.nrows() {
        return Err(Error::Dimension(format!(
            "vector of length {} against {} rows",
            f.len(),
            g.nrows()
        )));
    }
    if checked && !is_groebner(g) {
        return Err(Error::NotGroebner);
    }
    Ok(f.is_zero() || reduce_by_basis(f, g.cols()).is_zero())
}
