use ghnf_core::zhnf::is_hnf_int;
use ghnf_core::{hnf, hnf_with_transform, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(max_dim: usize, range: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-range..=range, c), r)
            .prop_map(|rows| IntMatrix::from_rows(&rows).unwrap())
    })
}

/// Products of two small random factors, so that rank deficiency is common.
fn low_rank_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=8, 1usize..=8, 1usize..=3).prop_flat_map(|(r, c, k)| {
        (
            prop::collection::vec(prop::collection::vec(-5i64..=5, k), r),
            prop::collection::vec(prop::collection::vec(-5i64..=5, c), k),
        )
            .prop_map(|(a, b)| {
                let a = IntMatrix::from_rows(&a).unwrap();
                a.mul(&IntMatrix::from_rows(&b).unwrap()).unwrap()
            })
    })
}

/// Elementary column operations: swap, negate, or add a multiple of one
/// column to another.
fn unimodular(m: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..m, 0..m, -3i64..=3, 0u8..3), 0..12).prop_map(move |ops| {
        let mut v = IntMatrix::identity(m);
        for (i, j, k, kind) in ops {
            let mut e = IntMatrix::identity(m);
            match kind {
                0 => {
                    e.set(i, i, BigInt::zero());
                    e.set(j, j, BigInt::zero());
                    e.set(i, j, BigInt::one());
                    e.set(j, i, BigInt::one());
                }
                1 => e.set(i, i, -BigInt::one()),
                _ if i != j => e.set(i, j, BigInt::from(k)),
                _ => {}
            }
            v = v.mul(&e).unwrap();
        }
        v
    })
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if a.get(0, j).is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| a.get(i, c).clone()).collect())
            .collect();
        let minor = if minor.is_empty() {
            IntMatrix::zeros(0, 0)
        } else {
            IntMatrix::from_rows(&minor).unwrap()
        };
        let term = a.get(0, j) * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn check_transform(a: &IntMatrix) -> Result<(), TestCaseError> {
    let res = hnf_with_transform(a);
    let u = res.u.clone().unwrap();
    prop_assert_eq!(a.mul(&u).unwrap(), res.full_h(a.cols()));
    prop_assert!(u.det().unwrap().abs().is_one());
    prop_assert!(is_hnf_int(&res.h));
    let syz = res.syzygies().unwrap();
    prop_assert_eq!(syz.cols(), a.cols() - a.rank());
    prop_assert_eq!(syz.rank(), syz.cols());
    prop_assert!(a.mul(&syz).unwrap().is_zero());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reconstruction_and_unimodularity(a in matrix(12, 100)) {
        check_transform(&a)?;
    }

    #[test]
    fn rank_deficient_inputs(a in low_rank_matrix()) {
        check_transform(&a)?;
    }

    #[test]
    fn canonical_under_unimodular_columns((a, v) in matrix(6, 20).prop_flat_map(|a| {
        let m = a.cols();
        (Just(a), unimodular(m))
    })) {
        prop_assert_eq!(hnf(&a).h, hnf(&a.mul(&v).unwrap()).h);
    }

    #[test]
    fn hnf_is_idempotent(a in matrix(8, 50)) {
        let h = hnf(&a).h;
        prop_assert_eq!(hnf(&h).h, h);
    }

    #[test]
    fn bareiss_matches_cofactors(a in (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, n), n)
            .prop_map(|rows| IntMatrix::from_rows(&rows).unwrap())
    })) {
        prop_assert_eq!(a.det().unwrap(), cofactor_det(&a));
    }
}
