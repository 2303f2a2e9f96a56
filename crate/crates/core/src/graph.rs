use crate::set::{VertexSet, MAX_VERTICES};

/// Simple undirected graph on `0..n` with bitset adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Panics unless `adj` is symmetric and irreflexive.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        assert!(n <= MAX_VERTICES);
        for (v, &a) in adj.iter().enumerate() {
            assert!(!a.contains(v), "self loop at {v}");
            for u in a {
                assert!(u < n && adj[u].contains(v), "asymmetric edge {v}-{u}");
            }
        }
        Graph { adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Graph { adj }
    }

    pub fn complete(n: usize) -> Self {
        let all = VertexSet::universe(n);
        Graph {
            adj: (0..n).map(|v| all.without(v)).collect(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::universe(self.adj.len())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Open neighborhood `N(S)`: vertices outside `s` adjacent to some member.
    #[inline]
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut acc = VertexSet::EMPTY;
        for v in s {
            acc = acc.union(self.adj[v]);
        }
        acc.difference(s)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// The connected component of `G[allowed]` containing `start`.
    pub fn component_within(&self, start: usize, allowed: VertexSet) -> VertexSet {
        debug_assert!(allowed.contains(start));
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(allowed).difference(comp);
            comp = comp.union(frontier);
        }
        comp
    }

    /// Connected components of `G - removed`, ordered by minimum vertex.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.vertices().difference(removed))
    }

    /// Connected components of `G[allowed]`, ordered by minimum vertex.
    pub fn components_within(&self, allowed: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = allowed;
        while let Some(v) = rest.min() {
            let c = self.component_within(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components(VertexSet::EMPTY).len() == 1
    }

    /// Components `C` of `G - s` with `N(C) = s`.
    pub fn full_components(&self, s: VertexSet) -> Vec<VertexSet> {
        self.components(s)
            .into_iter()
            .filter(|&c| self.neighborhood(c) == s)
            .collect()
    }

    /// Induced subgraph on `keep`, relabelled to `0..|keep|` in ascending
    /// order. Returns the subgraph and the original id of each new vertex.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let positions: Vec<usize> = keep.iter().collect();
        let adj = positions
            .iter()
            .map(|&v| VertexSet::from_bits(self.adj[v].compress(&positions)))
            .collect();
        (Graph { adj }, positions)
    }
}
