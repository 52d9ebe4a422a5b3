//! Reduction of vectors in `Z[x]^n` by single vectors and by bases, S-vectors,
//! and inter-reduction of Gröbner bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::vector::coeff_is_reduced;
use super::{IntPoly, PolyVec, Term};
use crate::{Error, Result};

/// Remainder and quotient of `f` by `g`: `remainder = f - quotient·g` and every
/// term of `remainder` is reduced by `LT(g)`.
pub fn reduce_term_by(f: &PolyVec, g: &PolyVec) -> Result<(PolyVec, IntPoly)> {
    let lt = g.leading_term().map_err(|_| Error::ZeroDivisor)?;
    let mut r = f.clone();
    let q = reduce_in_place(&mut r, g, &lt);
    Ok((r, q))
}

/// Reduces `f` by `g` (whose leading term is `lt`) in place and returns the
/// quotient.
///
/// Subtracting `q·x^(α-β)·g` touches only positions below `x^α e_row`, so one
/// sweep from the top degree down is enough.
pub(crate) fn reduce_in_place(f: &mut PolyVec, g: &PolyVec, lt: &Term) -> IntPoly {
    let row = lt.row;
    let b = &lt.coeff;
    let b_abs = b.abs();
    let mut quotient = Vec::new();
    let Some(top) = f.entry(row).degree() else {
        return IntPoly::zero();
    };
    let mut alpha = top;
    while alpha >= lt.degree {
        if let Some(a) = f.entry(row).coeff(alpha) {
            if a.is_negative() || a >= &b_abs {
                let mut q = a.div_floor(&b_abs);
                if b.is_negative() {
                    q = -q;
                }
                let shift = alpha - lt.degree;
                if quotient.len() <= shift {
                    quotient.resize(shift + 1, BigInt::zero());
                }
                f.add_scaled_shifted(&-&q, shift, g);
                quotient[shift] = q;
            }
        }
        if alpha == 0 {
            break;
        }
        alpha -= 1;
    }
    IntPoly::from_coeffs(quotient)
}

/// True when every term of `f` is reduced by `LT(g)` (`g ≠ 0`).
pub fn is_reduced_by(f: &PolyVec, lt: &Term) -> bool {
    let e = f.entry(lt.row);
    e.coeffs()
        .iter()
        .enumerate()
        .skip(lt.degree)
        .all(|(deg, a)| a.is_zero() || coeff_is_reduced(a, lt.row, deg, lt))
}

/// Normal form of `f` by `basis` (columns ascending under `≺`): reduce by the
/// last column down to the first, repeated until nothing changes. Zero
/// columns are ignored.
pub fn reduce_by_basis(f: &PolyVec, basis: &[PolyVec]) -> PolyVec {
    let lts: Vec<(usize, Term)> = basis
        .iter()
        .enumerate()
        .filter_map(|(i, g)| g.leading_term().ok().map(|t| (i, t)))
        .collect();
    let mut r = f.clone();
    loop {
        let mut changed = false;
        for (i, lt) in lts.iter().rev() {
            if !is_reduced_by(&r, lt) {
                reduce_in_place(&mut r, &basis[*i], lt);
                changed = true;
            }
        }
        if !changed || r.is_zero() {
            return r;
        }
    }
}

/// True when `f` is reduced by every nonzero column of `basis`.
pub fn is_reduced_by_basis(f: &PolyVec, basis: &[PolyVec]) -> bool {
    basis
        .iter()
        .filter_map(|g| g.leading_term().ok())
        .all(|lt| is_reduced_by(f, &lt))
}

/// Bézout coefficients: `(g, u, v)` with `g = gcd(a, b) > 0` and `u·a + v·b = g`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// The S-vector of two nonzero vectors.
///
/// Zero when the leading terms sit in different rows. Otherwise, with
/// `LT(f) = a·x^k`, `LT(g) = b·x^s` and `s ≤ k` (the arguments are swapped if
/// needed): `f - (a/b)x^(k-s)g` if `b | a`, `(b/a)f - x^(k-s)g` if `a | b`, and
/// `u·f + v·x^(k-s)·g` with `ua + vb = gcd(a, b)` otherwise.
pub fn svector(f: &PolyVec, g: &PolyVec) -> Result<PolyVec> {
    let (mut f, mut g) = (f, g);
    let mut lf = f.leading_term()?;
    let mut lg = g.leading_term()?;
    if lf.row != lg.row {
        return Ok(PolyVec::zero(f.len()));
    }
    if lg.degree > lf.degree {
        std::mem::swap(&mut f, &mut g);
        std::mem::swap(&mut lf, &mut lg);
    }
    let (a, b) = (&lf.coeff, &lg.coeff);
    let shift = lf.degree - lg.degree;
    let mut out;
    if a.is_multiple_of(b) {
        out = f.clone();
        out.add_scaled_shifted(&-(a / b), shift, g);
    } else if b.is_multiple_of(a) {
        out = f.scale(&(b / a));
        out.add_scaled_shifted(&-BigInt::one(), shift, g);
    } else {
        let (_, u, v) = ext_gcd(a, b);
        out = f.scale(&u);
        out.add_scaled_shifted(&v, shift, g);
    }
    Ok(out)
}

/// The lcm-type combination `(l/a)f - (l/b)x^(k-s)g`, `l = lcm(a, b)`, for two
/// vectors with leading terms in the same row. Used by the reference
/// completion alongside [`svector`].
pub fn lcm_svector(f: &PolyVec, g: &PolyVec) -> Result<PolyVec> {
    let (mut f, mut g) = (f, g);
    let mut lf = f.leading_term()?;
    let mut lg = g.leading_term()?;
    if lf.row != lg.row {
        return Ok(PolyVec::zero(f.len()));
    }
    if lg.degree > lf.degree {
        std::mem::swap(&mut f, &mut g);
        std::mem::swap(&mut lf, &mut lg);
    }
    let l = lf.coeff.lcm(&lg.coeff);
    let mut out = f.scale(&(&l / &lf.coeff));
    out.add_scaled_shifted(&-(&l / &lg.coeff), lf.degree - lg.degree, g);
    Ok(out)
}

/// Turns a Gröbner basis into the reduced one: positive leading coefficients,
/// no leading term divisible by another, every column reduced by the others,
/// sorted ascending under `≺`. Zero columns are dropped.
///
/// The input is not checked to be a Gröbner basis.
pub fn inter_reduce(cols: Vec<PolyVec>) -> Vec<PolyVec> {
    let mut cols: Vec<(Term, PolyVec)> = cols
        .into_iter()
        .filter(|c| !c.is_zero())
        .map(|c| {
            let c = if c.leading_coeff().unwrap().is_negative() { c.neg() } else { c };
            (c.leading_term().unwrap(), c)
        })
        .collect();
    cols.sort_by(|a, b| a.0.cmp_order(&b.0));

    let mut minimal: Vec<(Term, PolyVec)> = Vec::with_capacity(cols.len());
    for (lt, c) in cols {
        if minimal.iter().any(|(kept, _)| kept.divides(&lt)) {
            continue;
        }
        // a later column can only divide an earlier one when the monomials tie
        minimal.retain(|(kept, _)| !lt.divides(kept));
        minimal.push((lt, c));
    }
    minimal.sort_by(|a, b| a.0.cmp_order(&b.0));

    // a column is only reducible by columns with smaller leading monomials, so
    // one ascending pass reaches the fixpoint
    let mut done: Vec<PolyVec> = Vec::with_capacity(minimal.len());
    for (_, c) in minimal {
        let r = reduce_by_basis(&c, &done);
        done.push(r);
    }
    done
}
