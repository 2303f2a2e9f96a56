mod common;

use fhtw_core::intcover::{extract_cover, ghw_decision_tables, rho, rho_table_dp};
use fhtw_core::lpcover::{build_cover_lp, certify, solve_cover_lp, CoverLp};
use fhtw_core::oracle::{lp_by_basic_solutions, min_cover_exhaustive, naive_zeta, raw_cover_lp};
use fhtw_core::subsetzeta::{cover_count_table, fast_zeta, SubsetTable};
use fhtw_core::VertexSet;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn fast_zeta_matches_naive() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 0..=10 {
        for _ in 0..20 {
            let values = (0..1 << n).map(|_| BigInt::from(rng.gen_range(-50i64..50))).collect();
            let t = SubsetTable::from_values(values);
            assert_eq!(fast_zeta(&t), naive_zeta(&t).unwrap());
        }
    }
}

#[test]
fn cover_counts_decide_exhaustive_covers() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..40 {
        let n = rng.gen_range(1..=7);
        let m = rng.gen_range(1..=8);
        let h = common::random_hypergraph(&mut rng, n, m, 3);
        for k in 0..=h.m() as u32 {
            let counts = cover_count_table(&h, k).unwrap();
            for u in 0..1u128 << n {
                let u = VertexSet::from_bits(u);
                let rho_u = min_cover_exhaustive(&h, u).unwrap();
                assert_eq!(counts.get(u) > &BigInt::from(0), rho_u <= k, "U={u} k={k}");
            }
        }
    }
}

#[test]
fn rho_pathways_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..25 {
        let n = rng.gen_range(1..=10);
        let m = rng.gen_range(1..=12);
        let h = common::random_hypergraph(&mut rng, n, m, 4);
        let dp = rho_table_dp(&h).unwrap();
        let decisions: Vec<_> = (0..=h.m() as u32).map(|k| ghw_decision_tables(&h, k).unwrap()).collect();
        for u in 0..1u128 << n {
            let u = VertexSet::from_bits(u);
            let by_dp = dp.get(u).to_u32().unwrap();
            let by_zeta = decisions.iter().position(|d| d.holds(u)).unwrap() as u32;
            assert_eq!(by_dp, by_zeta);
            assert_eq!(rho(&h, u), by_dp);
            assert_eq!(min_cover_exhaustive(&h, u).unwrap(), by_dp);
        }
    }
}

#[test]
fn certificates_are_minimum_covers() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(1..=14);
        let h = common::random_hypergraph(&mut rng, n, m, 5);
        let bag = VertexSet::from_bits(rng.gen::<u128>() & ((1u128 << n) - 1));
        let cert = extract_cover(&h, bag).unwrap();
        assert_eq!(cert.edges.len() as u32, rho(&h, bag));
        assert!(cert.edges.windows(2).all(|w| w[0] < w[1]));
        let union = cert.edges.iter().fold(VertexSet::EMPTY, |a, &i| a.union(h.edges()[i]));
        assert!(bag.is_subset(union));
    }
}

#[test]
fn simplex_matches_basic_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..300 {
        let n = rng.gen_range(1..=7);
        let m = rng.gen_range(1..=8);
        let h = common::random_hypergraph(&mut rng, n, m, 4);
        let x = VertexSet::from_bits(rng.gen::<u128>() & ((1u128 << n) - 1));
        if x.is_empty() {
            continue;
        }
        let reduced = build_cover_lp(&h, x).unwrap();
        let raw = raw_cover_lp(&h, x);
        let sol = solve_cover_lp(&reduced).unwrap();
        assert!(certify(&reduced, &sol));
        assert_eq!(sol.optimum, lp_by_basic_solutions(&raw).unwrap());
        assert_eq!(sol.optimum, solve_cover_lp(&raw).unwrap().optimum);
    }
}

proptest! {
    #[test]
    fn dominated_columns_do_not_change_optimum(
        rows in 1usize..=8,
        seed in prop::collection::vec(1u128..256, 1..8),
        extra in prop::collection::vec(0u128..256, 0..4),
    ) {
        let full = (1u128 << rows) - 1;
        let mut cols: Vec<u128> = seed.iter().map(|c| c & full).filter(|&c| c != 0).collect();
        cols.push(full);
        let base = solve_cover_lp(&CoverLp::from_columns(rows, cols.clone())).unwrap();
        // subsets of existing columns are dominated
        for (i, e) in extra.iter().enumerate() {
            let sub = cols[i % cols.len()] & e;
            if sub != 0 {
                cols.push(sub);
            }
        }
        let lp = CoverLp::from_columns(rows, cols);
        let more = solve_cover_lp(&lp).unwrap();
        prop_assert!(certify(&lp, &more));
        prop_assert_eq!(base.optimum, more.optimum);
    }

    #[test]
    fn rho_is_monotone_and_subadditive(seed in any::<u64>(), a in any::<u16>(), b in any::<u16>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = common::random_hypergraph(&mut rng, 10, 8, 4);
        let mask = (1u128 << 10) - 1;
        let (a, b) = (VertexSet::from_bits(a as u128 & mask), VertexSet::from_bits(b as u128 & mask));
        prop_assert!(rho(&h, a.intersection(b)) <= rho(&h, a));
        prop_assert!(rho(&h, a.union(b)) <= rho(&h, a) + rho(&h, b));
    }
}
