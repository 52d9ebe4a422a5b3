use ghnf_core::bounds::{ghnf_bounds, loop_bound, scalar_height_bounds, transform_degree_bound};
use ghnf_core::instances::seeded_matrix;
use ghnf_core::oracle::{buchberger, interreduce, lattice_basis};
use ghnf_core::verify::{is_ghnf, is_groebner, membership, structure_check_zx};
use ghnf_core::{ghnfn, GhnfOptions, IntMatrix, IntPoly, PolyMatrix, PolyVec};
use ghnf_core::Strategy as Prolongation;
use num_bigint::BigInt;
use proptest::prelude::*;

#[derive(Clone, Debug)]
struct Instance {
    n: usize,
    d: usize,
    f: PolyMatrix,
}

fn instance(max_n: usize, max_m: usize, max_d: usize) -> impl Strategy<Value = Instance> {
    (any::<u64>(), 1..=max_n, 2..=max_m, 1..=max_d).prop_map(|(seed, n, m, d)| Instance {
        n,
        d,
        f: seeded_matrix(seed, n, m, d, 20),
    })
}

fn eval(p: &IntPoly, x: i64) -> BigInt {
    p.coeffs().iter().rev().fold(BigInt::from(0), |acc, c| acc * x + c)
}

/// Full row rank over `Q(x)` is certified by full rank at some integer point.
fn full_row_rank(f: &PolyMatrix) -> bool {
    (2..6).any(|x| {
        let rows: Vec<Vec<BigInt>> =
            (0..f.nrows()).map(|i| f.row(i).iter().map(|p| eval(p, x)).collect()).collect();
        IntMatrix::from_rows(&rows).unwrap().rank() == f.nrows()
    })
}

fn run(f: &PolyMatrix, strategy: Prolongation) -> ghnf_core::GhnfRun {
    ghnfn(f, &GhnfOptions::with_strategy(strategy)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strategies_and_oracle_agree(inst in instance(3, 5, 5)) {
        let partial = run(&inst.f, Prolongation::Partial);
        let full = run(&inst.f, Prolongation::Full);
        prop_assert_eq!(&partial.ghnf, &full.ghnf);
        let reference = interreduce(&lattice_basis(&inst.f).unwrap()).unwrap();
        prop_assert_eq!(&partial.ghnf, &reference);
        prop_assert!(is_ghnf(&partial.ghnf));
    }

    #[test]
    fn pair_completion_agrees_on_small_instances(inst in instance(2, 4, 2)) {
        let g = buchberger(&inst.f).unwrap();
        prop_assert!(is_groebner(&g));
        let reduced = interreduce(&g).unwrap();
        prop_assert!(is_ghnf(&reduced));
        prop_assert_eq!(run(&inst.f, Prolongation::Partial).ghnf, reduced);
    }

    #[test]
    fn module_is_preserved(inst in instance(3, 5, 4)) {
        let out = run(&inst.f, Prolongation::Partial).ghnf;
        for c in inst.f.cols() {
            prop_assert!(membership(c, &out, true).unwrap());
        }
    }

    #[test]
    fn output_is_a_fixpoint(inst in instance(3, 5, 4)) {
        let out = run(&inst.f, Prolongation::Partial).ghnf;
        prop_assert_eq!(run(&out, Prolongation::Partial).ghnf, out.clone());
        prop_assert_eq!(run(&out, Prolongation::Full).ghnf, out);
    }

    #[test]
    fn invariant_under_generators(
        inst in instance(3, 4, 3),
        perm_seed in any::<u64>(),
        q in prop::collection::vec(prop::collection::vec(-3i64..=3, 0..3), 4),
    ) {
        let out = run(&inst.f, Prolongation::Partial).ghnf;
        let m = inst.f.ncols();
        let mut perm: Vec<usize> = (0..m).collect();
        perm.sort_by_key(|&j| (j as u64 + 1).wrapping_mul(perm_seed | 1).rotate_left(17));
        prop_assert_eq!(run(&inst.f.permute_cols(&perm), Prolongation::Partial).ghnf, out.clone());

        let q = PolyVec::new(q[..m].iter().map(|c| IntPoly::from_i64s(c)).collect());
        let mut extended = inst.f.clone();
        extended.push(inst.f.mul_vec(&q).unwrap());
        prop_assert_eq!(run(&extended, Prolongation::Partial).ghnf, out);
    }

    #[test]
    fn widths_and_bounds(inst in instance(3, 5, 5)) {
        let (n, d) = (inst.n, inst.d);
        let r = run(&inst.f, Prolongation::Partial);
        let cap = if n == 1 { 2 * d + 1 } else { n * (n + 1) * d + n };
        prop_assert!(r.widths.iter().all(|&w| w <= cap), "widths {:?} cap {}", r.widths, cap);
        let h = inst.f.height();
        prop_assert!(r.loops as f64 <= loop_bound(n, d, h));
        if full_row_rank(&inst.f) {
            for c in r.ghnf.cols() {
                let lt = c.leading_term().unwrap();
                let (deg, ht) = ghnf_bounds(n, d, h, lt.row + 1);
                prop_assert!(lt.degree <= deg);
                prop_assert!(c.entry(lt.row).height() <= ht);
            }
        }
    }

    #[test]
    fn one_row_bases_have_the_ideal_structure(inst in instance(1, 5, 5)) {
        prop_assert!(structure_check_zx(&run(&inst.f, Prolongation::Partial).ghnf));
    }

    #[test]
    fn redundant_bases_are_groebner_but_not_ghnf(inst in instance(2, 4, 3), k in 0usize..8) {
        let out = run(&inst.f, Prolongation::Partial).ghnf;
        let extra = out.col(k % out.ncols()).shift(1);
        let mut redundant = out.clone();
        redundant.push(extra);
        prop_assert!(is_groebner(&redundant));
        prop_assert!(!is_ghnf(&redundant));
    }

    #[test]
    fn bounds_are_monotone(
        n in 1usize..5, d in 1usize..8, h in 0.0f64..50.0,
        dn in 0usize..3, dd in 0usize..3, dh in 0.0f64..10.0,
    ) {
        let (n2, d2, h2) = (n + dn, d + dd, h + dh);
        prop_assert!(transform_degree_bound(n, d, h) <= transform_degree_bound(n2, d2, h2));
        prop_assert!(loop_bound(n, d, h) <= loop_bound(n2, d2, h2));
        let (g1, z1) = scalar_height_bounds(d, h);
        let (g2, z2) = scalar_height_bounds(d2, h2);
        prop_assert!(g1 <= g2 && z1 <= z2);
        // the same pivot row counted from the top: n - r + 1 grows with n
        let r = 1;
        let (a, b) = ghnf_bounds(n, d, h, r);
        let (a2, b2) = ghnf_bounds(n2, d2, h2, r);
        prop_assert!(a <= a2 && b <= b2);
    }
}
