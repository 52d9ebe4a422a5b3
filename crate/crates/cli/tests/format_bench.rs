use ghnf_cli::bench::{self, BenchParams, BenchRow, CSV_VERSION};
use ghnf_cli::format::{emit_int_matrix, emit_matrix, parse_int_matrix, parse_matrix};
use ghnf_core::{IntMatrix, IntPoly, PolyMatrix};
use ghnf_core::Strategy as Prolongation;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(any::<i128>(), 0..5).prop_map(|cs| {
        // squaring pushes some coefficients past 128 bits
        IntPoly::from_coeffs(cs.into_iter().map(|c| BigInt::from(c) * BigInt::from(c / 3)).collect())
    })
}

fn matrix() -> impl Strategy<Value = PolyMatrix> {
    (1usize..4, 1usize..5).prop_flat_map(|(n, m)| {
        prop::collection::vec(prop::collection::vec(poly(), m), n)
            .prop_map(|rows| PolyMatrix::from_rows(rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matrix_round_trip(f in matrix()) {
        let text = emit_matrix(&f);
        prop_assert_eq!(parse_matrix(&text).unwrap(), f);
    }

    #[test]
    fn int_matrix_round_trip(
        rows in 0usize..5,
        cols in 0usize..5,
        seed in prop::collection::vec(any::<i64>(), 25),
    ) {
        let data = seed[..rows * cols].iter().map(|&v| BigInt::from(v) * v).collect();
        let a = IntMatrix::new(rows, cols, data).unwrap();
        prop_assert_eq!(parse_int_matrix(&emit_int_matrix(&a)).unwrap(), a);
    }
}

fn params(n: usize, m: usize, d: usize, count: usize, seed: u64) -> BenchParams {
    BenchParams { n, m, d, count, coeff_range: 100, seed }
}

fn csv_text(rows: &[BenchRow]) -> String {
    let mut out = Vec::new();
    bench::write_csv(rows, &mut out).unwrap();
    String::from_utf8(out).unwrap()
}

#[test]
fn bench_rows_and_widths() {
    let rows = bench::run(&params(1, 3, 10, 3, 42)).unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().filter(|r| r.strategy == Prolongation::Partial).all(|r| r.max_width <= 21));
    let order: Vec<(usize, Prolongation)> = rows.iter().map(|r| (r.instance_index, r.strategy)).collect();
    let expected: Vec<(usize, Prolongation)> =
        (0..3).flat_map(|i| [(i, Prolongation::Partial), (i, Prolongation::Full)]).collect();
    assert_eq!(order, expected);
    assert_eq!(csv_text(&rows).lines().count(), 8);
}

#[test]
fn strategies_hash_alike() {
    let rows = bench::run(&params(2, 2, 2, 1, 7)).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].ghnf_hash, rows[1].ghnf_hash);
}

#[test]
fn empty_bench_is_header_only() {
    let text = csv_text(&bench::run(&params(1, 2, 3, 0, 1)).unwrap());
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], CSV_VERSION);
    assert!(lines[1].starts_with("n,m,d,coeff_range,strategy"));
}

#[test]
fn bench_is_deterministic() {
    let strip = |rows: Vec<BenchRow>| {
        csv_text(&rows.into_iter().map(|r| BenchRow { wall_time_ms: 0.0, ..r }).collect::<Vec<_>>())
    };
    let p = params(2, 3, 3, 6, 2024);
    let a = strip(bench::run(&p).unwrap());
    let b = strip(bench::run(&p).unwrap());
    assert_eq!(a, b);
    let c = strip(bench::run(&BenchParams { seed: 2025, ..p }).unwrap());
    assert_ne!(a, c);
}
