//! Benchmark harness: random fixed-degree instances, both prolongation
//! strategies, one CSV row per (instance, strategy).

use std::io::Write;
use std::time::Instant;

use ghnf_core::instances::seeded_matrix;
use ghnf_core::{ghnfn, GhnfOptions, Strategy};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::format::emit_matrix;

/// First line of every CSV file produced by [`write_csv`].
pub const CSV_VERSION: &str = "# ghnf-bench-v1";

#[derive(Clone, Copy, Debug)]
pub struct BenchParams {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub count: usize,
    pub coeff_range: i64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub coeff_range: i64,
    pub strategy: Strategy,
    pub instance_index: usize,
    pub loops: usize,
    pub max_width: usize,
    pub max_height: f64,
    pub wall_time_ms: f64,
    pub instance_seed: u64,
    pub ghnf_hash: String,
}

/// Seeds of the instances, drawn from one generator seeded with `seed`.
pub fn instance_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.next_u64()).collect()
}

/// SHA-256 of the serialized matrix, hex encoded.
pub fn matrix_hash(f: &ghnf_core::PolyMatrix) -> String {
    Sha256::digest(emit_matrix(f).as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Runs every instance under both strategies. Instances run concurrently;
/// rows come back ordered by instance index, then strategy.
pub fn run(p: &BenchParams) -> ghnf_core::Result<Vec<BenchRow>> {
    let seeds = instance_seeds(p.seed, p.count);
    let per_instance: Vec<ghnf_core::Result<Vec<BenchRow>>> = seeds
        .par_iter()
        .enumerate()
        .map(|(index, &instance_seed)| {
            let f = seeded_matrix(instance_seed, p.n, p.m, p.d, p.coeff_range);
            [Strategy::Partial, Strategy::Full]
                .into_iter()
                .map(|strategy| {
                    let t = Instant::now();
                    let r = ghnfn(&f, &GhnfOptions::with_strategy(strategy))?;
                    let wall_time_ms = t.elapsed().as_secs_f64() * 1e3;
                    Ok(BenchRow {
                        n: p.n,
                        m: p.m,
                        d: p.d,
                        coeff_range: p.coeff_range,
                        strategy,
                        instance_index: index,
                        loops: r.loops,
                        max_width: r.max_width(),
                        max_height: (r.max_height() * 1e3).round() / 1e3,
                        wall_time_ms,
                        instance_seed,
                        ghnf_hash: matrix_hash(&r.ghnf),
                    })
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::with_capacity(2 * p.count);
    for r in per_instance {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], mut out: W) -> anyhow::Result<()> {
    writeln!(out, "{CSV_VERSION}")?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record([
        "n",
        "m",
        "d",
        "coeff_range",
        "strategy",
        "instance_index",
        "loops",
        "max_width",
        "max_height",
        "wall_time_ms",
        "instance_seed",
        "ghnf_hash",
    ])?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
