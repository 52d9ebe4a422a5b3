//! GHNF by iterated prolongation over integer HNFs.
//!
//! A matrix over `Z[x]` is flattened into its coefficient matrix (one integer
//! row per module row and degree), triangularized by the integer HNF and
//! expanded back: that is the PHNF. Iterating PHNF over prolongations
//! `[G, x·G']` converges to a basis whose leading coefficient staircase is
//! final, and a pick/reduce pass extracts the reduced Gröbner basis.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::poly::{inter_reduce, reduce_by_basis, IntPoly, PolyMatrix, PolyVec};
use crate::verify::{is_ghnf, is_groebner_cols};
use crate::zhnf::{hnf_columns, IntMatrix};
use crate::{Error, Result};

/// Per-row degree caps of a coefficient matrix. Block `i` holds degrees
/// `0..=caps[i]` of module row `i`, ascending, and starts at `offsets[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffLayout {
    caps: Vec<usize>,
    offsets: Vec<usize>,
}

impl CoeffLayout {
    pub fn new(caps: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(caps.len());
        let mut s = 0;
        for &c in &caps {
            offsets.push(s);
            s += c + 1;
        }
        CoeffLayout { caps, offsets }
    }

    /// The smallest layout holding every entry of `cols`.
    pub fn for_cols(n: usize, cols: &[PolyVec]) -> Self {
        let caps = (0..n)
            .map(|i| {
                cols.iter()
                    .filter_map(|c| c.entry(i).degree())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        Self::new(caps)
    }

    pub fn row_degree_caps(&self) -> &[usize] {
        &self.caps
    }

    pub fn block_offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn nrows(&self) -> usize {
        self.caps.len()
    }

    /// Total number of coefficient rows.
    pub fn size(&self) -> usize {
        self.caps.iter().map(|c| c + 1).sum()
    }

    fn flatten(&self, v: &PolyVec) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.size()];
        for (i, p) in v.entries().iter().enumerate() {
            for (k, c) in p.coeffs().iter().enumerate() {
                out[self.offsets[i] + k] = c.clone();
            }
        }
        out
    }

    fn unflatten(&self, c: &[BigInt]) -> PolyVec {
        PolyVec::new(
            (0..self.nrows())
                .map(|i| {
                    let o = self.offsets[i];
                    IntPoly::from_coeffs(c[o..=o + self.caps[i]].to_vec())
                })
                .collect(),
        )
    }
}

/// The coefficient matrix `C` with `F = X_F·C`. Zero columns of `F` stay as
/// zero columns of `C`.
pub fn coeff_matrix(f: &PolyMatrix) -> (CoeffLayout, IntMatrix) {
    let layout = CoeffLayout::for_cols(f.nrows(), f.cols());
    let cols: Vec<Vec<BigInt>> = f.cols().iter().map(|c| layout.flatten(c)).collect();
    let c = IntMatrix::from_cols(layout.size(), &cols).expect("flattened columns fit the layout");
    (layout, c)
}

/// `X_F·H`, the inverse of [`coeff_matrix`].
pub fn expand(layout: &CoeffLayout, h: &IntMatrix) -> Result<PolyMatrix> {
    if h.rows() != layout.size() {
        return Err(Error::Dimension(format!(
            "{} coefficient rows for a layout of size {}",
            h.rows(),
            layout.size()
        )));
    }
    let cols = h.to_cols().iter().map(|c| layout.unflatten(c)).collect();
    PolyMatrix::new(layout.nrows(), cols)
}

/// The PHNF: expansion of the integer HNF of the coefficient matrix, zero
/// columns removed. Columns come out strictly ascending under `≺`.
pub fn phnf(f: &PolyMatrix) -> PolyMatrix {
    PolyMatrix::new(f.nrows(), phnf_cols(f.nrows(), f.cols())).expect("PHNF keeps the row count")
}

fn phnf_cols(n: usize, cols: &[PolyVec]) -> Vec<PolyVec> {
    let layout = CoeffLayout::for_cols(n, cols);
    let flat = cols.iter().map(|c| layout.flatten(c)).collect();
    let out = hnf_columns(layout.size(), flat, false);
    out.basis.iter().map(|c| layout.unflatten(c)).collect()
}

/// Prolongation strategy.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Prolong only columns whose pivot degree is below the row cap.
    #[default]
    Partial,
    /// Prolong every column.
    Full,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strategy::Partial => "partial",
            Strategy::Full => "full",
        })
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "partial" => Ok(Strategy::Partial),
            "full" => Ok(Strategy::Full),
            _ => Err(Error::Parse(format!("unknown strategy {s:?}"))),
        }
    }
}

/// Groups columns by pivot row, keeping their order. Block `t` holds the
/// columns whose deepest nonzero row is `t`.
pub fn divide(f: &PolyMatrix) -> Result<Vec<PolyMatrix>> {
    let n = f.nrows();
    let mut blocks = vec![PolyMatrix::empty(n); n];
    let mut keyed: Vec<(usize, usize, &PolyVec)> = Vec::with_capacity(f.ncols());
    for (j, c) in f.cols().iter().enumerate() {
        let lm = c.leading_monomial().ok_or(Error::ZeroColumn(j))?;
        keyed.push((lm.row, lm.degree, c));
    }
    // stable: equal degrees keep their input order
    keyed.sort_by_key(|&(row, degree, _)| (row, degree));
    for (row, _, c) in keyed {
        blocks[row].push(c.clone());
    }
    Ok(blocks)
}

/// Degree caps `d_t = (n - t + 1)·d` for 1-based `t`.
pub fn degree_caps(n: usize, d: usize) -> Vec<usize> {
    (0..n).map(|t| (n - t) * d).collect()
}

/// One prolongation step on a basis sorted ascending under `≺`.
///
/// Partial: for each row block `t`, the columns with pivot degree `≤ caps[t]`
/// followed by `x` times those with pivot degree `≤ caps[t] - 1`. Full:
/// `[G, x·G]`.
pub fn prolong(g: &PolyMatrix, caps: &[usize], strategy: Strategy) -> PolyMatrix {
    PolyMatrix::new(g.nrows(), prolong_cols(g.cols(), caps, strategy).0)
        .expect("prolongation keeps the row count")
}

/// Prolonged columns plus, for each, `(source index, shifted)`.
fn prolong_cols(
    g: &[PolyVec],
    caps: &[usize],
    strategy: Strategy,
) -> (Vec<PolyVec>, Vec<(usize, bool)>) {
    let mut out = Vec::with_capacity(2 * g.len());
    let mut src = Vec::with_capacity(2 * g.len());
    match strategy {
        Strategy::Full => {
            for (j, c) in g.iter().enumerate() {
                out.push(c.clone());
                src.push((j, false));
            }
            for (j, c) in g.iter().enumerate() {
                out.push(c.shift(1));
                src.push((j, true));
            }
        }
        Strategy::Partial => {
            let pivot = |c: &PolyVec| c.leading_monomial().expect("basis columns are nonzero");
            for (t, &cap) in caps.iter().enumerate() {
                let block: Vec<usize> = (0..g.len()).filter(|&j| pivot(&g[j]).row == t).collect();
                for &j in &block {
                    if pivot(&g[j]).degree <= cap {
                        out.push(g[j].clone());
                        src.push((j, false));
                    }
                }
                for &j in &block {
                    if pivot(&g[j]).degree < cap {
                        out.push(g[j].shift(1));
                        src.push((j, true));
                    }
                }
            }
        }
    }
    (out, src)
}

/// Options for [`ghnfn`].
#[derive(Clone, Debug, Default)]
pub struct GhnfOptions {
    pub strategy: Strategy,
    /// Keep every intermediate `G_k` in [`GhnfRun::trace`].
    pub record_trace: bool,
    /// Loop cap. Partial runs that hit it fall back to full prolongation;
    /// full runs that hit it fail with a resource error.
    pub max_loops: Option<usize>,
}

impl GhnfOptions {
    pub fn with_strategy(strategy: Strategy) -> Self {
        GhnfOptions {
            strategy,
            ..Default::default()
        }
    }
}

/// Result of a GHNF computation.
#[derive(Clone, Debug, PartialEq)]
pub struct GhnfRun {
    pub ghnf: PolyMatrix,
    /// Loop index `k` at termination.
    pub loops: usize,
    /// Column count of `P_k`, one per loop.
    pub widths: Vec<usize>,
    /// Height of `G_k`, one per loop.
    pub heights: Vec<f64>,
    /// Strategy that produced `ghnf`.
    pub strategy: Strategy,
    /// True when a partial run failed verification or its loop cap and was
    /// redone with full prolongation.
    pub fallback: bool,
    /// `G_0, G_1, …` when requested.
    pub trace: Vec<PolyMatrix>,
}

impl GhnfRun {
    pub fn max_width(&self) -> usize {
        self.widths.iter().copied().max().unwrap_or(0)
    }

    pub fn max_height(&self) -> f64 {
        self.heights.iter().copied().fold(0.0, f64::max)
    }
}

/// GHNF of a row vector over `Z[x]`.
pub fn ghnf1(f: &PolyMatrix, opts: &GhnfOptions) -> Result<GhnfRun> {
    if f.nrows() != 1 {
        return Err(Error::Dimension(format!("expected 1 row, got {}", f.nrows())));
    }
    ghnfn(f, opts)
}

/// GHNF of the column module of `f`.
///
/// The partial run is verified (GHNF shape and every input column reducing
/// to zero); a failed check reruns the computation with full prolongation.
pub fn ghnfn(f: &PolyMatrix, opts: &GhnfOptions) -> Result<GhnfRun> {
    if f.is_zero() {
        return Err(Error::ZeroModule);
    }
    match opts.strategy {
        Strategy::Full => run_full(f, opts),
        Strategy::Partial => {
            let cap = opts.max_loops.unwrap_or_else(|| default_partial_cap(f));
            if let Some(run) = run_partial(f, opts, cap) {
                if is_ghnf(&run.ghnf) && generates(f, run.ghnf.cols()) {
                    return Ok(run);
                }
            }
            let mut run = run_full(f, &GhnfOptions { max_loops: None, ..opts.clone() })?;
            run.fallback = true;
            Ok(run)
        }
    }
}

fn input_degree(f: &PolyMatrix) -> usize {
    f.degree().unwrap_or(0)
}

fn default_partial_cap(f: &PolyMatrix) -> usize {
    8 * f.nrows() * input_degree(f).max(1) + 64
}

fn default_full_cap(f: &PolyMatrix) -> usize {
    16 * f.nrows() * input_degree(f).max(1) + 64
}

/// Every column of `f` reduces to zero by `basis`.
fn generates(f: &PolyMatrix, basis: &[PolyVec]) -> bool {
    f.cols().iter().all(|c| reduce_by_basis(c, basis).is_zero())
}

struct Tracker {
    record: bool,
    trace: Vec<PolyMatrix>,
    widths: Vec<usize>,
    heights: Vec<f64>,
}

impl Tracker {
    fn new(record: bool) -> Self {
        Tracker {
            record,
            trace: Vec::new(),
            widths: Vec::new(),
            heights: Vec::new(),
        }
    }

    fn state(&mut self, n: usize, g: &[PolyVec]) {
        if self.record {
            self.trace.push(PolyMatrix::new(n, g.to_vec()).unwrap());
        }
    }

    fn step(&mut self, width: usize, g: &[PolyVec]) {
        self.widths.push(width);
        self.heights.push(g.iter().map(PolyVec::height).fold(0.0, f64::max));
    }
}

fn finish(
    n: usize,
    basis: Vec<PolyVec>,
    loops: usize,
    strategy: Strategy,
    tracker: Tracker,
) -> GhnfRun {
    GhnfRun {
        ghnf: PolyMatrix::new(n, basis).unwrap(),
        loops,
        widths: tracker.widths,
        heights: tracker.heights,
        strategy,
        fallback: false,
        trace: tracker.trace,
    }
}

fn run_partial(f: &PolyMatrix, opts: &GhnfOptions, cap: usize) -> Option<GhnfRun> {
    let n = f.nrows();
    let caps = degree_caps(n, input_degree(f));
    let mut tracker = Tracker::new(opts.record_trace);
    let mut g = phnf_cols(n, f.cols());
    tracker.state(n, &g);
    let mut k = 0;
    loop {
        if k >= cap {
            return None;
        }
        k += 1;
        let (p, _) = prolong_cols(&g, &caps, Strategy::Partial);
        let next = phnf_cols(n, &p);
        tracker.step(p.len(), &next);
        tracker.state(n, &next);
        if next == g {
            break;
        }
        g = next;
    }
    Some(finish(n, inter_reduce(pick(n, &g)), k, Strategy::Partial, tracker))
}

/// Step 3: within each row block keep the first column and every column
/// whose leading coefficient differs from its predecessor's, reduced by the
/// columns kept so far in the block.
fn pick(n: usize, g: &[PolyVec]) -> Vec<PolyVec> {
    let mut out = Vec::with_capacity(g.len());
    for t in 0..n {
        let block: Vec<&PolyVec> = g.iter().filter(|c| c.pivot_row() == Some(t)).collect();
        let mut kept: Vec<PolyVec> = Vec::new();
        for (j, c) in block.iter().enumerate() {
            if j == 0 {
                kept.push((*c).clone());
            } else if block[j - 1].leading_coeff() != c.leading_coeff() {
                kept.push(reduce_by_basis(c, &kept));
            }
        }
        out.extend(kept);
    }
    out
}

/// Minimal elements of an ascending basis: drop a column whose leading term
/// is divisible by that of an earlier kept column.
fn minimal(g: &[PolyVec]) -> Vec<PolyVec> {
    let mut kept: Vec<(crate::poly::Term, &PolyVec)> = Vec::new();
    for c in g {
        let lt = c.leading_term().expect("basis columns are nonzero");
        if !kept.iter().any(|(k, _)| k.divides(&lt)) {
            kept.push((lt, c));
        }
    }
    kept.into_iter().map(|(_, c)| c.clone()).collect()
}

fn run_full(f: &PolyMatrix, opts: &GhnfOptions) -> Result<GhnfRun> {
    let n = f.nrows();
    let cap = opts.max_loops.unwrap_or_else(|| default_full_cap(f));
    let mut tracker = Tracker::new(opts.record_trace);
    let mut g = phnf_cols(n, f.cols());
    tracker.state(n, &g);
    let mut k = 0;
    loop {
        if k >= cap {
            return Err(Error::ResourceLimit(format!(
                "full prolongation did not converge in {cap} loops"
            )));
        }
        k += 1;
        let (p, _) = prolong_cols(&g, &[], Strategy::Full);
        g = phnf_cols(n, &p);
        tracker.step(p.len(), &g);
        tracker.state(n, &g);
        // the Z-span of G_k only grows, so the candidate is checked directly
        let r = inter_reduce(minimal(&g));
        if is_groebner_cols(&r) && generates(f, &r) {
            return Ok(finish(n, r, k, Strategy::Full, tracker));
        }
    }
}

/// Generators of `Syz(F) = {u ∈ Z[x]^m : F·u = 0}` for a row vector `F`.
///
/// Runs the partial iteration for `k = 0..=d` with transforms tracked and
/// returns the images of the integer syzygies of each `P_k` under the
/// accumulated transform `φ_k`.
pub fn syzygy_basis_zx(f: &PolyMatrix) -> Result<Vec<PolyVec>> {
    if f.nrows() != 1 {
        return Err(Error::Unsupported(format!(
            "syzygies are implemented for one row, got {}",
            f.nrows()
        )));
    }
    let m = f.ncols();
    let d = input_degree(f);
    let caps = degree_caps(1, d);
    let mut p: Vec<PolyVec> = f.cols().to_vec();
    // phi[j] is the preimage in Z[x]^m of column j of P_k
    let mut phi: Vec<PolyVec> = (0..m).map(|j| PolyVec::unit(m, j)).collect();
    let mut gens = Vec::new();
    for k in 0..=d {
        let image = phi.iter().map(|v| f.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        if image != p {
            return Err(Error::Internal(format!("transform mismatch at loop {k}")));
        }
        let layout = CoeffLayout::for_cols(1, &p);
        let flat = p.iter().map(|c| layout.flatten(c)).collect();
        let out = hnf_columns(layout.size(), flat, true);
        let (syz, basis_t) = out.transforms.expect("tracked");
        for u in &syz {
            let g = combine(&phi, u, m);
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let g: Vec<PolyVec> = out.basis.iter().map(|c| layout.unflatten(c)).collect();
        let phi_g: Vec<PolyVec> = basis_t.iter().map(|u| combine(&phi, u, m)).collect();
        let (next, src) = prolong_cols(&g, &caps, Strategy::Partial);
        phi = src
            .iter()
            .map(|&(j, shifted)| if shifted { phi_g[j].shift(1) } else { phi_g[j].clone() })
            .collect();
        p = next;
    }
    Ok(gens)
}

/// `Σ u_j·phi_j`.
fn combine(phi: &[PolyVec], u: &[BigInt], m: usize) -> PolyVec {
    let mut out = PolyVec::zero(m);
    for (c, v) in u.iter().zip(phi) {
        if !c.is_zero() {
            out.add_scaled_shifted(c, 0, v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[&str]) -> PolyMatrix {
        PolyMatrix::from_polys(entries.iter().map(|s| s.parse().unwrap()).collect())
    }

    fn mat(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::parse_rows(rows).unwrap()
    }

    fn example_42() -> PolyMatrix {
        row(&["6x^3+3x^2+12", "6x^3+3x^2+6x", "6x^3+15x^2", "6x^3+3x^2"])
    }

    #[test]
    fn coeff_matrix_round_trip() {
        let f = row(&["2", "x"]);
        let (layout, c) = coeff_matrix(&f);
        assert_eq!(c, IntMatrix::from_rows(&[[2, 0], [0, 1]]).unwrap());
        assert_eq!(expand(&layout, &c).unwrap(), f);

        let (_, c) = coeff_matrix(&example_42());
        assert_eq!(c.col(0), [12, 0, 3, 6].map(BigInt::from).to_vec());
    }

    #[test]
    fn zero_matrix_layout() {
        let f = PolyMatrix::new(2, vec![PolyVec::zero(2)]).unwrap();
        let (layout, c) = coeff_matrix(&f);
        assert_eq!(layout.row_degree_caps(), &[0, 0]);
        assert!(c.is_zero());
        assert_eq!(phnf(&f).ncols(), 0);
    }

    #[test]
    fn expand_rejects_wrong_size() {
        let layout = CoeffLayout::new(vec![1]);
        assert!(expand(&layout, &IntMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn phnf_examples() {
        assert_eq!(phnf(&example_42()), row(&["12", "6x", "12x^2", "6x^3+3x^2"]));
        // the canonical pivot is positive, so the first column is the negated printed one
        let g = phnf(&mat(&[&["6x+1", "3x"], &["2x", "5x+1"]]));
        assert_eq!(g, mat(&[&["-24x-5", "-9x-2"], &["2", "x+1"]]));
    }

    #[test]
    fn prolong_examples() {
        let g = row(&["12", "6x", "12x^2", "6x^3+3x^2"]);
        assert_eq!(
            prolong(&g, &[3], Strategy::Partial),
            row(&["12", "6x", "12x^2", "6x^3+3x^2", "12x", "6x^2", "12x^3"])
        );
        assert_eq!(prolong(&row(&["2"]), &[1], Strategy::Partial), row(&["2", "2x"]));
        assert_eq!(prolong(&row(&["2", "x"]), &[1], Strategy::Full), row(&["2", "x", "2x", "x^2"]));
    }

    #[test]
    fn divide_examples() {
        let g0 = mat(&[&["24x+5", "-9x-2"], &["-2", "x+1"]]);
        let q = divide(&g0).unwrap();
        assert_eq!(q[0].ncols(), 0);
        assert_eq!(q[1], g0);

        let g1 = mat(&[&["24x^2+11x+1", "-24x-5", "-9x-2"], &["0", "2", "x+1"]]);
        let q = divide(&g1).unwrap();
        assert_eq!(q[0], mat(&[&["24x^2+11x+1"], &["0"]]));
        assert_eq!(q[1], mat(&[&["-24x-5", "-9x-2"], &["2", "x+1"]]));

        let q = divide(&PolyMatrix::identity(2)).unwrap();
        assert_eq!(q[0].cols(), &[PolyVec::unit(2, 0)]);
        assert_eq!(q[1].cols(), &[PolyVec::unit(2, 1)]);

        assert_eq!(divide(&row(&["1", "0"])), Err(Error::ZeroColumn(1)));
    }

    #[test]
    fn ghnf1_trace() {
        let opts = GhnfOptions {
            record_trace: true,
            ..Default::default()
        };
        let run = ghnf1(&example_42(), &opts).unwrap();
        assert_eq!(run.ghnf, row(&["12", "6x", "3x^2"]));
        assert_eq!(run.loops, 4);
        let expected = [
            row(&["12", "6x", "12x^2", "6x^3+3x^2"]),
            row(&["12", "6x", "6x^2", "6x^3+3x^2"]),
            row(&["12", "6x", "3x^2", "6x^3"]),
            row(&["12", "6x", "3x^2", "3x^3"]),
            row(&["12", "6x", "3x^2", "3x^3"]),
        ];
        assert_eq!(run.trace, expected);
        assert!(!run.fallback);
    }

    #[test]
    fn ghnf1_small_examples() {
        let opts = GhnfOptions::default();
        assert_eq!(ghnf1(&row(&["x", "2"]), &opts).unwrap().ghnf, row(&["2", "x"]));
        let f = row(&["9x+3", "3x^2+4x+1"]);
        assert_eq!(ghnf1(&f, &opts).unwrap().ghnf, f);
        assert_eq!(ghnf1(&row(&["0"]), &opts), Err(Error::ZeroModule));
        assert!(ghnf1(&PolyMatrix::identity(2), &opts).is_err());
    }

    #[test]
    fn ghnfn_examples() {
        let opts = GhnfOptions::default();
        let run = ghnfn(&mat(&[&["6x+1", "3x"], &["2x", "5x+1"]]), &opts).unwrap();
        assert_eq!(run.ghnf, mat(&[&["24x^2+11x+1", "-24x-5", "-9x-2"], &["0", "2", "x+1"]]));
        assert_eq!(run.loops, 2);

        // 3x^8-4x^6+5x^5-6x^3+1 is not reduced by 6x^4 (coefficient -4 at x^6);
        // adding (x^2+2)(6x^4-8x^2+x) gives the reduced entry
        let run = ghnfn(&mat(&[&["1", "x"], &["6x^3+1", "8x^2"]]), &opts).unwrap();
        assert_eq!(
            run.ghnf,
            mat(&[&["6x^4-8x^2+x", "3x^8+2x^6+5x^5+4x^4-5x^3-16x^2+2x+1"], &["0", "1"]])
        );
        let unreduced = mat(&[&["6x^4-8x^2+x", "3x^8-4x^6+5x^5-6x^3+1"], &["0", "1"]]);
        assert!(!crate::verify::is_ghnf(&unreduced));
        assert!(reduce_by_basis(unreduced.col(1), run.ghnf.cols()).is_zero());

        assert_eq!(ghnfn(&PolyMatrix::identity(3), &opts).unwrap().ghnf, PolyMatrix::identity(3));
    }

    #[test]
    fn full_strategy_agrees() {
        let opts = GhnfOptions::with_strategy(Strategy::Full);
        assert_eq!(ghnf1(&example_42(), &opts).unwrap().ghnf, row(&["12", "6x", "3x^2"]));
        let run = ghnfn(&mat(&[&["6x+1", "3x"], &["2x", "5x+1"]]), &opts).unwrap();
        assert_eq!(run.ghnf, mat(&[&["24x^2+11x+1", "-24x-5", "-9x-2"], &["0", "2", "x+1"]]));
    }

    #[test]
    fn syzygy_examples() {
        let f = row(&["2", "x"]);
        let gens = syzygy_basis_zx(&f).unwrap();
        for u in &gens {
            assert!(f.mul_vec(u).unwrap().is_zero());
        }
        assert!(gens.contains(&PolyVec::new(vec!["x".parse().unwrap(), "-2".parse().unwrap()])));

        let f = row(&["4", "2"]);
        let gens = syzygy_basis_zx(&f).unwrap();
        assert_eq!(gens.len(), 1);
        assert!(f.mul_vec(&gens[0]).unwrap().is_zero());

        assert!(syzygy_basis_zx(&row(&["6"])).unwrap().is_empty());
        assert!(matches!(
            syzygy_basis_zx(&PolyMatrix::identity(2)),
            Err(Error::Unsupported(_))
        ));
    }
}
