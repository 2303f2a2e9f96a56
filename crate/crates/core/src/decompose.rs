//! Minimal separators, full blocks and potential maximal cliques.
//!
//! Minimal separators are generated by closing the separators found in
//! vertex neighborhoods under the "separator plus a neighborhood" step.
//! Potential maximal cliques are built vertex by vertex: the PMCs of
//! `G[v1..v(i+1)]` are drawn from a small family of candidates derived from
//! the PMCs of `G[v1..vi]` and the minimal separators of both graphs, and
//! each candidate is certified with [`is_pmc`].

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Default cap on the number of minimal separators or PMCs of one graph.
pub const DEFAULT_LIST_LIMIT: usize = 20_000_000;

/// A pair `(S, C)` where `C` is a component of `G - S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub separator: VertexSet,
    pub component: VertexSet,
}

impl Block {
    pub fn new(separator: VertexSet, component: VertexSet) -> Self {
        Block {
            separator,
            component,
        }
    }

    #[inline]
    pub fn key(&self) -> VertexSet {
        self.separator.union(self.component)
    }

    /// `N(C) = S`.
    pub fn is_full(&self, g: &Graph) -> bool {
        g.neighborhood(self.component) == self.separator
    }
}

/// Minimal separators `Δ_G`, each tagged when no other minimal separator is
/// a proper subset of it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeparatorList {
    pub separators: Vec<VertexSet>,
    pub inclusion_minimal: Vec<bool>,
}

impl SeparatorList {
    pub fn len(&self) -> usize {
        self.separators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separators.is_empty()
    }

    pub fn inclusion_minimal(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.separators
            .iter()
            .zip(&self.inclusion_minimal)
            .filter(|(_, &m)| m)
            .map(|(&s, _)| s)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PmcList {
    pub pmcs: Vec<VertexSet>,
}

impl PmcList {
    pub fn len(&self) -> usize {
        self.pmcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pmcs.is_empty()
    }
}

/// Canonical order: by size, then lexicographically.
pub fn canonical_cmp(a: &VertexSet, b: &VertexSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.lex_cmp(*b))
}

/// The graph induced on `vs`, without relabelling.
#[derive(Clone, Copy)]
struct View<'g> {
    g: &'g Graph,
    vs: VertexSet,
}

impl View<'_> {
    #[inline]
    fn nbr(&self, v: usize) -> VertexSet {
        self.g.neighbors(v).intersection(self.vs)
    }

    #[inline]
    fn neighborhood(&self, s: VertexSet) -> VertexSet {
        self.g.neighborhood(s).intersection(self.vs)
    }

    #[inline]
    fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.g.components_within(self.vs.difference(removed))
    }

    fn minimal_separators(&self, limit: usize) -> Result<Vec<VertexSet>> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        let mut queue = VecDeque::new();
        let push = |s: VertexSet, seen: &mut HashSet<VertexSet>, queue: &mut VecDeque<VertexSet>| {
            if !s.is_empty() && seen.insert(s) {
                if seen.len() > limit {
                    return Err(Error::CapacityExceeded {
                        what: "minimal separators",
                        limit,
                    });
                }
                queue.push_back(s);
            }
            Ok(())
        };
        for v in self.vs {
            let closed = self.nbr(v).with(v);
            for c in self.components(closed) {
                push(self.neighborhood(c), &mut seen, &mut queue)?;
            }
        }
        while let Some(s) = queue.pop_front() {
            for x in s {
                for c in self.components(s.union(self.nbr(x))) {
                    push(self.neighborhood(c), &mut seen, &mut queue)?;
                }
            }
        }
        let mut out: Vec<VertexSet> = seen.into_iter().collect();
        out.sort_by(canonical_cmp);
        Ok(out)
    }

    fn is_pmc(&self, omega: VertexSet) -> bool {
        if omega.is_empty() || !omega.is_subset(self.vs) {
            return false;
        }
        let mut reach = [VertexSet::EMPTY; crate::set::MAX_VERTICES];
        for x in omega {
            reach[x] = self.nbr(x).intersection(omega).with(x);
        }
        for c in self.components(omega) {
            let nc = self.neighborhood(c);
            if nc == omega {
                return false;
            }
            for x in nc {
                reach[x] = reach[x].union(nc);
            }
        }
        omega.iter().all(|x| reach[x] == omega)
    }
}

/// All minimal separators of a connected graph, in canonical order.
pub fn enumerate_minimal_separators(g: &Graph) -> Result<SeparatorList> {
    enumerate_minimal_separators_with_limit(g, DEFAULT_LIST_LIMIT)
}

pub fn enumerate_minimal_separators_with_limit(g: &Graph, limit: usize) -> Result<SeparatorList> {
    let view = View {
        g,
        vs: g.vertices(),
    };
    let separators = view.minimal_separators(limit)?;
    // S is inclusion-minimal among minimal separators exactly when every
    // component of G - S is full: a proper subset S' then leaves every
    // vertex of S \ S' adjacent to all remaining components.
    let inclusion_minimal = separators
        .iter()
        .map(|&s| g.components(s).iter().all(|&c| g.neighborhood(c) == s))
        .collect();
    Ok(SeparatorList {
        separators,
        inclusion_minimal,
    })
}

/// Whether `omega` is a potential maximal clique of `g`: `G - omega` has no
/// full component, and every non-adjacent pair in `omega` is joined through
/// some component of `G - omega`.
pub fn is_pmc(g: &Graph, omega: VertexSet) -> bool {
    View {
        g,
        vs: g.vertices(),
    }
    .is_pmc(omega)
}

/// All potential maximal cliques of a connected graph, in canonical order.
///
/// `seps` must be the minimal separators of `g`; they are reused for the
/// last incremental step.
pub fn enumerate_pmcs(g: &Graph, seps: &SeparatorList) -> Result<PmcList> {
    enumerate_pmcs_with_limit(g, seps, DEFAULT_LIST_LIMIT)
}

pub fn enumerate_pmcs_with_limit(g: &Graph, seps: &SeparatorList, limit: usize) -> Result<PmcList> {
    let n = g.n();
    if n == 0 {
        return Ok(PmcList::default());
    }
    let order = connected_order(g);

    let first = VertexSet::singleton(order[0]);
    let mut prefix = first;
    let mut pmcs: Vec<VertexSet> = vec![first];
    let mut prev_seps: HashSet<VertexSet> = HashSet::new();

    for (step, &a) in order.iter().enumerate().skip(1) {
        let next = prefix.with(a);
        let view = View { g, vs: next };
        let next_seps: Vec<VertexSet> = if step + 1 == n {
            seps.separators.clone()
        } else {
            view.minimal_separators(limit)?
        };

        let mut cands: HashSet<VertexSet> = HashSet::new();
        for &p in &pmcs {
            cands.insert(p.with(a));
            cands.insert(p);
        }
        for &s in &next_seps {
            cands.insert(s.with(a));
            if !s.contains(a) && !prev_seps.contains(&s) {
                let comps = view.components(s);
                for &t in &next_seps {
                    for &c in &comps {
                        let inner = t.intersection(c);
                        if !inner.is_empty() {
                            cands.insert(s.union(inner));
                        }
                    }
                }
            }
        }

        let mut cands: Vec<VertexSet> = cands.into_iter().collect();
        cands.sort_by(canonical_cmp);
        pmcs = cands.into_par_iter().filter(|&c| view.is_pmc(c)).collect();
        if pmcs.len() > limit {
            return Err(Error::CapacityExceeded {
                what: "potential maximal cliques",
                limit,
            });
        }
        prev_seps = next_seps.into_iter().collect();
        prefix = next;
    }
    Ok(PmcList { pmcs })
}

/// Breadth-first order from the smallest vertex, so that every prefix of a
/// connected graph induces a connected subgraph. Unreached vertices are
/// appended in ascending order.
fn connected_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = VertexSet::EMPTY;
    for root in 0..g.n() {
        if seen.contains(root) {
            continue;
        }
        seen.insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in g.neighbors(v).difference(seen) {
                seen.insert(u);
                queue.push_back(u);
            }
        }
    }
    order
}

/// All full blocks, ascending by `|S ∪ C|`, ties broken lexicographically
/// on `S ∪ C` and then on `S`.
pub fn full_blocks(g: &Graph, seps: &SeparatorList) -> Vec<Block> {
    let mut blocks: Vec<Block> = seps
        .separators
        .iter()
        .flat_map(|&s| {
            g.full_components(s)
                .into_iter()
                .map(move |c| Block::new(s, c))
        })
        .collect();
    blocks.sort_by(|a, b| {
        canonical_cmp(&a.key(), &b.key()).then_with(|| a.separator.lex_cmp(b.separator))
    });
    blocks
}

/// Blocks `(N(Ci), Ci)` for the components `Ci` of `G - omega` lying inside
/// `outer`'s component.
pub fn blocks_of_pmc_within(g: &Graph, omega: VertexSet, outer: &Block) -> Vec<Block> {
    g.components(omega)
        .into_iter()
        .filter(|c| c.is_subset(outer.component))
        .map(|c| Block::new(g.neighborhood(c), c))
        .collect()
}
