mod common;

use std::collections::BTreeSet;

use fhtw_core::decompose::{enumerate_minimal_separators, enumerate_pmcs, is_pmc};
use fhtw_core::oracle::pmcs_by_elimination;
use fhtw_core::{Graph, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn brute_minimal_separators(g: &Graph) -> BTreeSet<VertexSet> {
    (0..1u128 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| g.full_components(s).len() >= 2)
        .collect()
}

fn brute_pmcs(g: &Graph) -> BTreeSet<VertexSet> {
    (1..1u128 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| is_pmc(g, s))
        .collect()
}

#[test]
fn separators_match_brute_force_on_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=11);
        let p = rand::Rng::gen_range(&mut rng, 0.1..0.7);
        let g = common::connected_graph(&mut rng, n, p);
        let seps = enumerate_minimal_separators(&g).unwrap();
        let got: BTreeSet<VertexSet> = seps.separators.iter().copied().collect();
        assert_eq!(got.len(), seps.len(), "duplicates in separator list");
        assert_eq!(got, brute_minimal_separators(&g), "graph {g:?}");
        for (s, &flag) in seps.separators.iter().zip(&seps.inclusion_minimal) {
            let by_subset = !seps.separators.iter().any(|t| t.is_proper_subset(*s));
            assert_eq!(flag, by_subset, "inclusion-minimal flag for {s}");
        }
    }
}

#[test]
fn pmcs_match_brute_force_on_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=12);
        let p = rand::Rng::gen_range(&mut rng, 0.0..0.6);
        let g = common::connected_graph(&mut rng, n, p);
        let seps = enumerate_minimal_separators(&g).unwrap();
        let pmcs = enumerate_pmcs(&g, &seps).unwrap();
        let got: BTreeSet<VertexSet> = pmcs.pmcs.iter().copied().collect();
        assert_eq!(got.len(), pmcs.len());
        assert_eq!(got, brute_pmcs(&g), "graph {g:?}");
    }
}

#[test]
fn pmcs_match_triangulation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..150 {
        let n = rand::Rng::gen_range(&mut rng, 1..=7);
        let p = rand::Rng::gen_range(&mut rng, 0.0..0.7);
        let g = common::connected_graph(&mut rng, n, p);
        let seps = enumerate_minimal_separators(&g).unwrap();
        let got: BTreeSet<VertexSet> = enumerate_pmcs(&g, &seps).unwrap().pmcs.into_iter().collect();
        let want: BTreeSet<VertexSet> = pmcs_by_elimination(&g).unwrap().into_iter().collect();
        assert_eq!(got, want, "graph {g:?}");
    }
}

#[test]
fn lists_are_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let g = common::connected_graph(&mut rng, 14, 0.25);
    let a = enumerate_minimal_separators(&g).unwrap();
    let b = enumerate_minimal_separators(&g).unwrap();
    assert_eq!(a, b);
    assert_eq!(enumerate_pmcs(&g, &a).unwrap(), enumerate_pmcs(&g, &b).unwrap());
}
