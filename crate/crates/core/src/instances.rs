//! Seeded random instances with every entry of exact degree `d`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{IntPoly, PolyMatrix};

/// Entries have coefficients uniform in `[-range, range]`; the leading
/// coefficient is resampled until nonzero, so each entry has degree exactly
/// `d`. `range` must be positive.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, d: usize, range: i64) -> PolyMatrix {
    assert!(range > 0, "coefficient range must be positive");
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let mut row = Vec::with_capacity(m);
        for _ in 0..m {
            let mut coeffs: Vec<BigInt> =
                (0..d).map(|_| BigInt::from(rng.gen_range(-range..=range))).collect();
            let lead = loop {
                let c = rng.gen_range(-range..=range);
                if c != 0 {
                    break c;
                }
            };
            coeffs.push(BigInt::from(lead));
            row.push(IntPoly::from_coeffs(coeffs));
        }
        rows.push(row);
    }
    PolyMatrix::from_rows(rows).expect("rows have equal length")
}

/// The instance for a given seed, reproducible across platforms.
pub fn seeded_matrix(seed: u64, n: usize, m: usize, d: usize, range: i64) -> PolyMatrix {
    random_matrix(&mut ChaCha8Rng::seed_from_u64(seed), n, m, d, range)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_degree_and_range() {
        let f = seeded_matrix(3, 2, 3, 4, 5);
        assert_eq!((f.nrows(), f.ncols()), (2, 3));
        for c in f.cols() {
            for p in c.entries() {
                assert_eq!(p.degree(), Some(4));
                assert!(p.max_abs_coeff() <= BigInt::from(5));
            }
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(seeded_matrix(9, 1, 3, 2, 20), seeded_matrix(9, 1, 3, 2, 20));
        assert_ne!(seeded_matrix(9, 1, 3, 2, 20), seeded_matrix(10, 1, 3, 2, 20));
    }
}
