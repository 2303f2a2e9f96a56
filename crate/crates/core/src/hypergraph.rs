use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{VertexSet, MAX_VERTICES};

/// A hypergraph on vertices `0..n` with distinct, nonempty hyperedges and
/// no isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    names: Vec<String>,
}

impl Hypergraph {
    /// Builds a hypergraph, dropping repeated hyperedges (first occurrence
    /// wins). Vertex names default to the 1-based ids.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        let names = (1..=n).map(|i| i.to_string()).collect();
        Self::with_names(n, edges, names)
    }

    pub fn with_names(n: usize, edges: Vec<VertexSet>, names: Vec<String>) -> Result<Self> {
        let h = Self::build(n, edges, names)?;
        let covered = h.edges.iter().fold(VertexSet::EMPTY, |a, &e| a.union(e));
        if let Some(v) = VertexSet::universe(n).difference(covered).min() {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(h)
    }

    /// Like [`Hypergraph::with_names`], but every isolated vertex receives a
    /// singleton hyperedge instead of being rejected.
    pub fn patching_isolated(n: usize, edges: Vec<VertexSet>, names: Vec<String>) -> Result<Self> {
        let mut h = Self::build(n, edges, names)?;
        let covered = h.edges.iter().fold(VertexSet::EMPTY, |a, &e| a.union(e));
        for v in VertexSet::universe(n).difference(covered) {
            h.edges.push(VertexSet::singleton(v));
        }
        Ok(h)
    }

    fn build(n: usize, edges: Vec<VertexSet>, names: Vec<String>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                limit: MAX_VERTICES,
            });
        }
        assert_eq!(names.len(), n, "one name per vertex");
        let universe = VertexSet::universe(n);
        let mut seen = HashSet::new();
        let mut kept = Vec::with_capacity(edges.len());
        for (i, e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            if let Some(v) = e.difference(universe).min() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen.insert(e) {
                kept.push(e);
            }
        }
        Ok(Hypergraph {
            n,
            edges: kept,
            names,
        })
    }

    /// The hypergraph whose hyperedges are the edges of `g`, plus a
    /// singleton hyperedge for each isolated vertex of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        let mut edges = Vec::new();
        for u in 0..g.n() {
            if g.neighbors(u).is_empty() {
                edges.push(VertexSet::singleton(u));
            }
            for v in g.neighbors(u) {
                if u < v {
                    edges.push(VertexSet::singleton(u).with(v));
                }
            }
        }
        Self::new(g.n(), edges).expect("graph edges form a valid hypergraph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::universe(self.n)
    }

    /// The primal graph: `u` and `v` are adjacent iff some hyperedge
    /// contains both.
    pub fn gaifman(&self) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for &e in &self.edges {
            for v in e {
                adj[v] = adj[v].union(e);
            }
        }
        for (v, a) in adj.iter_mut().enumerate() {
            a.remove(v);
        }
        Graph::from_adjacency(adj)
    }
}
