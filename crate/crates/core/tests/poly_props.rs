use std::cmp::Ordering;

use ghnf_core::poly::{
    content_primpart, inter_reduce, is_reduced_by_basis, poly_gcd, reduce_by_basis,
    reduce_term_by, svector,
};
use ghnf_core::oracle::buchberger;
use ghnf_core::{IntPoly, PolyMatrix, PolyVec, Term};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-30i64..=30, 0..6).prop_map(|c| IntPoly::from_i64s(&c))
}

fn vector(n: usize) -> impl Strategy<Value = PolyVec> {
    prop::collection::vec(poly(), n).prop_map(PolyVec::new)
}

fn nonzero_vector(n: usize) -> impl Strategy<Value = PolyVec> {
    vector(n).prop_filter("nonzero", |v| !v.is_zero())
}

fn term() -> impl Strategy<Value = Term> {
    (-9i64..=9, 0usize..4, 0usize..3)
        .prop_filter("nonzero", |(c, _, _)| *c != 0)
        .prop_map(|(c, degree, row)| Term { coeff: BigInt::from(c), degree, row })
}

/// Termwise check of the reduction condition, written out directly.
fn term_is_reduced(a: &BigInt, row: usize, degree: usize, lt: &Term) -> bool {
    row != lt.row || degree < lt.degree || (!a.is_negative() && a < &lt.coeff.abs())
}

fn fully_reduced(f: &PolyVec, basis: &[PolyVec]) -> bool {
    basis.iter().filter(|g| !g.is_zero()).all(|g| {
        let lt = g.leading_term().unwrap();
        f.entries().iter().enumerate().all(|(row, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .all(|(deg, a)| a.is_zero() || term_is_reduced(a, row, deg, &lt))
        })
    })
}

proptest! {
    #[test]
    fn remainder_reconstructs(f in vector(2), g in nonzero_vector(2)) {
        let (r, q) = reduce_term_by(&f, &g).unwrap();
        let mut back = r.clone();
        back.add_poly_multiple(&q, &g);
        prop_assert_eq!(back, f);
        prop_assert!(fully_reduced(&r, std::slice::from_ref(&g)));
    }

    #[test]
    fn basis_reduction_is_reduced(f in vector(2), basis in prop::collection::vec(nonzero_vector(2), 1..4)) {
        let r = reduce_by_basis(&f, &basis);
        prop_assert!(fully_reduced(&r, &basis));
        prop_assert!(is_reduced_by_basis(&r, &basis));
    }

    #[test]
    fn term_order_is_total(a in term(), b in term(), c in term()) {
        let ab = a.cmp_order(&b);
        prop_assert_eq!(ab, b.cmp_order(&a).reverse());
        if ab != Ordering::Greater && b.cmp_order(&c) != Ordering::Greater {
            prop_assert_ne!(a.cmp_order(&c), Ordering::Greater);
        }
        if ab == Ordering::Equal {
            prop_assert_eq!(a.monomial(), b.monomial());
        }
    }

    #[test]
    fn svector_cancels_leading_terms(f in nonzero_vector(2), g in nonzero_vector(2)) {
        let (lf, lg) = (f.leading_term().unwrap(), g.leading_term().unwrap());
        let s = svector(&f, &g).unwrap();
        if lf.row != lg.row {
            prop_assert!(s.is_zero());
        } else if !s.is_zero() {
            let top = lf.degree.max(lg.degree);
            let m = s.leading_monomial().unwrap();
            let gcd_case = !lf.coeff.is_multiple_of(&lg.coeff) && !lg.coeff.is_multiple_of(&lf.coeff);
            if gcd_case {
                // the gcd combination keeps the common monomial with coefficient gcd(a, b)
                prop_assert_eq!((m.row, m.degree), (lf.row, top));
                prop_assert_eq!(s.leading_coeff().unwrap(), &lf.coeff.gcd(&lg.coeff));
            } else {
                prop_assert!(m.row < lf.row || m.degree < top);
            }
        }
    }

    #[test]
    fn content_times_primpart_is_gcd(fs in prop::collection::vec(poly(), 1..4)) {
        prop_assume!(fs.iter().any(|f| !f.is_zero()));
        let (c, p) = content_primpart(&fs).unwrap();
        prop_assert!(c.is_positive());
        prop_assert!(p.content() == BigInt::from(1));
        let g = fs.iter().fold(IntPoly::zero(), |acc, f| poly_gcd(&acc, f));
        let prod = p.scale(&c);
        prop_assert!(prod == g || prod == -&g);
        for f in &fs {
            prop_assert!(prod.divides(f));
        }
    }

    #[test]
    fn inter_reduce_is_idempotent_on_bases(cols in prop::collection::vec(nonzero_vector(1), 1..4)) {
        let g = buchberger(&PolyMatrix::new(1, cols).unwrap()).unwrap();
        let once = inter_reduce(g.into_cols());
        prop_assert_eq!(inter_reduce(once.clone()), once);
    }
}
