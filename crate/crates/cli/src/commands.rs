//! Subcommand implementations. Each returns `Ok(())` for exit code 0 or a
//! [`Failure`] that carries the exit code.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use ghnf_core::bounds::BoundReport;
use ghnf_core::ghnf::syzygy_basis_zx;
use ghnf_core::instances::seeded_matrix;
use ghnf_core::oracle::{buchberger, interreduce, lattice_basis};
use ghnf_core::verify::ghnf_violations;
use ghnf_core::{ghnfn, hnf_with_transform, GhnfOptions, PolyMatrix, Strategy};
use serde::Serialize;

use crate::bench::{self, BenchParams};
use crate::format::{emit_matrix, read_int_matrix, read_matrix, IntMatrixOut, ReadError};

/// Exit codes: 1 not a GHNF, 2 oracle mismatch, 3 degenerate or unsupported
/// input, 4 unreadable or malformed input, 5 any other failure.
#[derive(Debug)]
pub enum Failure {
    NotGhnf(String),
    OracleMismatch(String),
    Degenerate(String),
    Parse(String),
    Runtime(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::NotGhnf(_) => 1,
            Failure::OracleMismatch(_) => 2,
            Failure::Degenerate(_) => 3,
            Failure::Parse(_) => 4,
            Failure::Runtime(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NotGhnf(m)
            | Failure::OracleMismatch(m)
            | Failure::Degenerate(m)
            | Failure::Parse(m)
            | Failure::Runtime(m) => f.write_str(m),
        }
    }
}

impl From<ghnf_core::Error> for Failure {
    fn from(e: ghnf_core::Error) -> Self {
        use ghnf_core::Error::*;
        match e {
            ZeroModule | ZeroColumn(_) | ZeroFamily | Unsupported(_) | Dimension(_) => {
                Failure::Degenerate(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<ReadError> for Failure {
    fn from(e: ReadError) -> Self {
        Failure::Parse(format!("cannot read input: {e}"))
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(format!("i/o error: {e}"))
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

pub type Outcome = Result<(), Failure>;

/// Writes `text` and a newline to `path`, or to stdout without a path.
fn write_out(path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")),
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{text}")
        }
    }
}

/// Reference method for `--oracle`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    /// Linear algebra over a growing degree window.
    Lattice,
    /// Pair completion; only practical for small inputs.
    Pairs,
}

pub struct ComputeArgs {
    pub input: PathBuf,
    pub output: Option<PathBuf>,
    pub strategy: Strategy,
    pub oracle: Option<OracleKind>,
    pub stats: Option<PathBuf>,
    pub syzygy: Option<PathBuf>,
}

#[derive(Serialize)]
struct Stats<'a> {
    loops: usize,
    strategy: Strategy,
    fallback: bool,
    widths: &'a [usize],
    heights: &'a [f64],
    max_width: usize,
    max_height: f64,
    oracle: Option<&'static str>,
    bounds: BoundReport,
}

pub fn compute(args: &ComputeArgs) -> Outcome {
    let f = read_matrix(&args.input)?;
    let run = ghnfn(&f, &GhnfOptions::with_strategy(args.strategy))?;

    let mut oracle = None;
    if let Some(kind) = args.oracle {
        let basis = match kind {
            OracleKind::Lattice => lattice_basis(&f)?,
            OracleKind::Pairs => buchberger(&f)?,
        };
        let reference = interreduce(&basis)?;
        if reference != run.ghnf {
            return Err(Failure::OracleMismatch(format!(
                "oracle mismatch: algorithm gives {}, oracle gives {}",
                run.ghnf, reference
            )));
        }
        oracle = Some("agree");
    }

    if let Some(path) = &args.syzygy {
        let gens = syzygy_basis_zx(&f)?;
        let m = PolyMatrix::new(f.ncols(), gens)?;
        write_out(Some(path), &emit_matrix(&m))?;
    }
    if let Some(path) = &args.stats {
        let stats = Stats {
            loops: run.loops,
            strategy: run.strategy,
            fallback: run.fallback,
            widths: &run.widths,
            heights: &run.heights,
            max_width: run.max_width(),
            max_height: run.max_height(),
            oracle,
            bounds: BoundReport::for_matrix(&f),
        };
        let text = serde_json::to_string_pretty(&stats).map_err(|e| Failure::Runtime(e.to_string()))?;
        write_out(Some(path), &text)?;
    }
    write_out(args.output.as_deref(), &emit_matrix(&run.ghnf))?;
    Ok(())
}

pub fn verify(input: &Path) -> Outcome {
    let f = read_matrix(input)?;
    match ghnf_violations(&f).first() {
        None => {
            println!("GHNF");
            Ok(())
        }
        Some(v) => Err(Failure::NotGhnf(v.to_string())),
    }
}

#[derive(Serialize)]
struct HnfOut {
    rank: usize,
    pivot_rows: Vec<usize>,
    h: IntMatrixOut,
    u: IntMatrixOut,
}

pub fn hnf(input: &Path, output: Option<&Path>) -> Outcome {
    let a = read_int_matrix(input)?;
    let res = hnf_with_transform(&a);
    let u = res.u.as_ref().expect("transform requested");
    if a.mul(u)? != res.full_h(a.cols()) {
        return Err(Failure::Runtime("internal error: A·U differs from [0 | H]".into()));
    }
    if res.rank() == 0 {
        eprintln!("note: zero matrix, H has no columns");
    }
    let out = HnfOut {
        rank: res.rank(),
        pivot_rows: res.pivot_rows.clone(),
        h: IntMatrixOut::new(&res.h),
        u: IntMatrixOut::new(u),
    };
    let text = serde_json::to_string(&out).map_err(|e| Failure::Runtime(e.to_string()))?;
    write_out(output, &text)?;
    Ok(())
}

pub fn syzygy(input: &Path, output: Option<&Path>) -> Outcome {
    let f = read_matrix(input)?;
    let gens = syzygy_basis_zx(&f)?;
    let m = PolyMatrix::new(f.ncols(), gens)?;
    write_out(output, &emit_matrix(&m))?;
    Ok(())
}

pub fn bench(params: &BenchParams, output: Option<&Path>) -> Outcome {
    if params.n == 0 || params.coeff_range <= 0 {
        return Err(Failure::Degenerate("need n >= 1 and a positive coefficient range".into()));
    }
    let rows = bench::run(params)?;
    match output {
        Some(p) => bench::write_csv(&rows, fs::File::create(p)?)?,
        None => bench::write_csv(&rows, io::stdout().lock())?,
    }
    Ok(())
}

pub struct GenerateArgs {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub coeff_range: i64,
    pub seed: u64,
}

pub fn generate(args: &GenerateArgs, output: Option<&Path>) -> Outcome {
    if args.n == 0 || args.coeff_range <= 0 {
        return Err(Failure::Degenerate("need n >= 1 and a positive coefficient range".into()));
    }
    let f = seeded_matrix(args.seed, args.n, args.m, args.d, args.coeff_range);
    write_out(output, &emit_matrix(&f))?;
    Ok(())
}
