#![allow(dead_code)]

use fhtw_core::{Graph, Hypergraph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// Connected random graph: a random spanning tree plus extra edges with
/// probability `p`.
pub fn connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Any graph, possibly disconnected.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random hypergraph without isolated vertices; edges have 1..=max_arity
/// vertices.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, m: usize, max_arity: usize) -> Hypergraph {
    let mut edges: Vec<VertexSet> = (0..m)
        .map(|_| {
            let k = rng.gen_range(1..=max_arity.min(n));
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            vs[..k].iter().collect()
        })
        .collect();
    let covered = edges.iter().fold(VertexSet::EMPTY, |a, e| a.union(*e));
    for v in VertexSet::universe(n).difference(covered) {
        let i = rng.gen_range(0..edges.len());
        edges[i].insert(v);
    }
    Hypergraph::new(n, edges).unwrap()
}
