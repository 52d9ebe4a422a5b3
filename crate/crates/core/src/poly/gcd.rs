//! GCDs in `Z[x]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::{Error, Result};

/// Content and primitive part of a family: the content is the gcd of all
/// coefficients and the primitive part is `gcd(fs) / content`, normalized to a
/// positive leading coefficient.
pub fn content_primpart(fs: &[IntPoly]) -> Result<(BigInt, IntPoly)> {
    let mut g = IntPoly::zero();
    for f in fs {
        g = poly_gcd(&g, f);
    }
    if g.is_zero() {
        return Err(Error::ZeroFamily);
    }
    Ok(split(&g))
}

fn split(f: &IntPoly) -> (BigInt, IntPoly) {
    if f.is_zero() {
        return (BigInt::zero(), IntPoly::zero());
    }
    let c = f.content();
    let mut p = f.div_scalar_exact(&c).expect("content divides every coefficient");
    if p.leading_coeff().unwrap().is_negative() {
        p = -p;
    }
    (c, p)
}

/// `gcd(f, g)` in `Z[x]`, normalized to a positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &IntPoly, g: &IntPoly) -> IntPoly {
    if f.is_zero() {
        return normalize(g.clone());
    }
    if g.is_zero() {
        return normalize(f.clone());
    }
    let (cf, pf) = split(f);
    let (cg, pg) = split(g);
    let c = cf.gcd(&cg);
    primitive_gcd(pf, pg).scale(&c)
}

fn normalize(f: IntPoly) -> IntPoly {
    match f.leading_coeff() {
        Some(lc) if lc.is_negative() => -f,
        _ => f,
    }
}

/// Subresultant PRS on primitive inputs.
fn primitive_gcd(a: IntPoly, b: IntPoly) -> IntPoly {
    let (mut a, mut b) = if a.degree() >= b.degree() { (a, b) } else { (b, a) };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return split(&b).1;
        }
        if r.degree() == Some(0) {
            return IntPoly::one();
        }
        let denom = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.div_scalar_exact(&denom).expect("subresultant division is exact");
        g = a.leading_coeff().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta);
            let den = num_traits::pow(h, delta - 1);
            num / den
        };
    }
}
