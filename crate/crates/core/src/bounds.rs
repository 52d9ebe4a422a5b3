//! Closed-form degree, height and loop bounds. Logarithms are base 2.
//!
//! The formulas assume `d ≥ 1`; for `d = 0` the degree bounds are evaluated
//! as is and `d` inside logarithms and height formulas is clamped to 1.

use serde::Serialize;

fn log2(x: f64) -> f64 {
    x.max(1.0).log2()
}

/// Degree and height bounds for the pivot entries of the GHNF in pivot row
/// `r` (1-based) of a rank-`n` module generated in degree `d`, height `h`.
pub fn ghnf_bounds(n: usize, d: usize, h: f64, r: usize) -> (usize, f64) {
    assert!((1..=n).contains(&r), "pivot row {r} outside 1..={n}");
    let k = (n - r + 1) as f64;
    let dc = d.max(1) as f64;
    let height = 6.0 * k.powi(3) * dc * dc * (h + 1.0 + log2(k * k * dc));
    ((n - r + 1) * d, height)
}

/// `D = 73 n^8 d^5 (h + 1 + log(n^2 d))`, the degree bound for the transform.
pub fn transform_degree_bound(n: usize, d: usize, h: f64) -> f64 {
    let (nf, df) = (n as f64, d.max(1) as f64);
    73.0 * nf.powi(8) * df.powi(5) * (h + 1.0 + log2(nf * nf * df))
}

/// Loop bound: `73 d^5 (h + log d + 1) + d` for one row, `D + n d` otherwise.
pub fn loop_bound(n: usize, d: usize, h: f64) -> f64 {
    let df = d.max(1) as f64;
    if n == 1 {
        73.0 * df.powi(5) * (h + log2(df) + 1.0) + d as f64
    } else {
        transform_degree_bound(n, d, h) + (n * d) as f64
    }
}

/// Heights of a gcd of polynomials of degree `≤ d`, height `≤ h`, and of the
/// GHNF of such polynomials in `Z[x]`.
pub fn scalar_height_bounds(d: usize, h: f64) -> (f64, f64) {
    let df = d as f64;
    let gcd = 0.5 * log2(df + 1.0) + df + h;
    let zx = (2.0 * df + 1.0) * (h + df + log2(df + 1.0));
    (gcd, zx)
}

/// All bounds for one input, as reported by the CLI.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub h: f64,
    /// Indexed by pivot row `1..=n`.
    pub ghnf_degree_bound: Vec<usize>,
    pub ghnf_height_bound: Vec<f64>,
    pub transform_degree_bound: f64,
    pub loop_bound: f64,
    pub gcd_height_bound: f64,
    pub zx_height_bound: f64,
}

impl BoundReport {
    pub fn new(n: usize, m: usize, d: usize, h: f64) -> Self {
        let (degs, heights) = (1..=n).map(|r| ghnf_bounds(n, d, h, r)).unzip();
        let (gcd, zx) = scalar_height_bounds(d, h);
        BoundReport {
            n,
            m,
            d,
            h,
            ghnf_degree_bound: degs,
            ghnf_height_bound: heights,
            transform_degree_bound: transform_degree_bound(n, d, h),
            loop_bound: loop_bound(n, d, h),
            gcd_height_bound: gcd,
            zx_height_bound: zx,
        }
    }

    pub fn for_matrix(f: &crate::PolyMatrix) -> Self {
        Self::new(f.nrows(), f.ncols(), f.degree().unwrap_or(0), f.height())
    }
}
