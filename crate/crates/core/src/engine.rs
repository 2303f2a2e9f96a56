//! The block dynamic program over full blocks and potential maximal
//! cliques, tree-decomposition reconstruction, and the hypergraph entry
//! point (a hypergraph is solved through its primal graph).
//!
//! For a full block `(S, C)` the value is the minimum, over PMCs `Ω` with
//! `S ⊂ Ω ⊆ S ∪ C`, of `max(f(Ω), values of the blocks (N(Ci), Ci))` where
//! the `Ci` are the components of `G - Ω` inside `C`. Every full block is
//! seeded with `+inf`; the case `Ω = S ∪ C` is covered by the PMC loop. The
//! graph's value is the minimum over inclusion-minimal separators `S` of the
//! maximum over the blocks of `S`.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::decompose::{self, Block, PmcList, SeparatorList};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::intcover::{self, ThresholdWidth};
use crate::set::VertexSet;
use crate::subsetzeta;
use crate::td::TreeDecomposition;
use crate::widthfn::{
    build_width_table, FractionalCoverWidth, IntegralCoverWidth, Measure, SizeWidth,
    WidthFunction, WidthValue,
};

/// How generalized hypertree-width is computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GhwMethod {
    /// Evaluate `rho_H` directly at every PMC.
    #[default]
    Direct,
    /// Binary search on `k`, deciding each `k` with the inclusion-exclusion
    /// cover tables.
    ZetaBinarySearch,
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub ghw_method: GhwMethod,
    /// Largest vertex count for which 2^n subset tables are built.
    pub zeta_max_n: usize,
    /// Cap on minimal separators and PMCs per component.
    pub list_limit: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            ghw_method: GhwMethod::Direct,
            zeta_max_n: subsetzeta::DEFAULT_MAX_TABLE_N,
            list_limit: decompose::DEFAULT_LIST_LIMIT,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub components: usize,
    pub minimal_separators: usize,
    pub inclusion_minimal_separators: usize,
    pub pmcs: usize,
    pub full_blocks: usize,
    pub table_evaluations: usize,
    pub enumeration_time: Duration,
    pub table_time: Duration,
    pub dp_time: Duration,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub width: WidthValue,
    pub decomposition: TreeDecomposition,
    pub stats: SolveStats,
}

#[derive(Clone, Debug)]
struct Candidate {
    pmc: usize,
    subs: Vec<usize>,
}

/// Enumeration results for one connected component, in local vertex ids.
struct Component {
    graph: Graph,
    /// Local id -> global id.
    positions: Vec<usize>,
    seps: SeparatorList,
    pmcs: PmcList,
    blocks: Vec<Block>,
    /// Per block: the PMCs that may sit directly below its separator.
    candidates: Vec<Vec<Candidate>>,
    /// Per inclusion-minimal separator: its blocks, one per component.
    roots: Vec<(VertexSet, Vec<usize>)>,
}

impl Component {
    fn new(graph: Graph, positions: Vec<usize>, limit: usize) -> Result<Self> {
        if graph.is_complete() {
            return Ok(Component {
                graph,
                positions,
                seps: SeparatorList::default(),
                pmcs: PmcList::default(),
                blocks: Vec::new(),
                candidates: Vec::new(),
                roots: Vec::new(),
            });
        }
        let seps = decompose::enumerate_minimal_separators_with_limit(&graph, limit)?;
        let pmcs = decompose::enumerate_pmcs_with_limit(&graph, &seps, limit)?;
        let blocks = decompose::full_blocks(&graph, &seps);
        let by_component: HashMap<VertexSet, usize> = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (b.component, i))
            .collect();

        let g = &graph;
        let per_pmc: Vec<Vec<(usize, Candidate)>> = pmcs
            .pmcs
            .par_iter()
            .enumerate()
            .map(|(p, &omega)| {
                let comps = g.components(omega);
                let mut out: Vec<(usize, Candidate)> = Vec::new();
                for &d in &comps {
                    let s = g.neighborhood(d);
                    let Some(x) = omega.difference(s).min() else {
                        continue;
                    };
                    let c = g.component_within(x, g.vertices().difference(s));
                    let Some(&outer) = by_component.get(&c) else {
                        continue;
                    };
                    if blocks[outer].separator != s || out.iter().any(|(b, _)| *b == outer) {
                        continue;
                    }
                    let subs = comps
                        .iter()
                        .filter(|ci| ci.is_subset(c))
                        .map(|ci| {
                            by_component
                                .get(ci)
                                .copied()
                                .ok_or(Error::InternalInfeasible(*ci))
                        })
                        .collect::<Result<Vec<_>>>();
                    match subs {
                        Ok(subs) => out.push((outer, Candidate { pmc: p, subs })),
                        Err(e) => return Err(e),
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut candidates: Vec<Vec<Candidate>> = vec![Vec::new(); blocks.len()];
        for list in per_pmc {
            for (b, cand) in list {
                candidates[b].push(cand);
            }
        }

        let roots = seps
            .inclusion_minimal()
            .map(|s| {
                let ids = g
                    .components(s)
                    .into_iter()
                    .map(|c| by_component[&c])
                    .collect();
                (s, ids)
            })
            .collect();

        Ok(Component {
            graph,
            positions,
            seps,
            pmcs,
            blocks,
            candidates,
            roots,
        })
    }

    fn to_global(&self, local: VertexSet) -> VertexSet {
        VertexSet::expand(local.bits(), &self.positions)
    }

    fn solve<F: WidthFunction + ?Sized>(&self, f: &F, stats: &mut SolveStats) -> Result<(WidthValue, TreeDecomposition)> {
        if self.blocks.is_empty() {
            let all = self.to_global(self.graph.vertices());
            stats.table_evaluations += 1;
            return Ok((f.eval(all)?, TreeDecomposition::single(all)));
        }

        let started = Instant::now();
        let global: Vec<VertexSet> = self.pmcs.pmcs.iter().map(|&p| self.to_global(p)).collect();
        let table = build_width_table(f, &global, &[])?;
        stats.table_evaluations += table.evaluations();
        // The DP only compares values, so it runs on their ranks.
        let mut distinct: Vec<WidthValue> = table.entries().iter().map(|(_, v)| v.clone()).collect();
        distinct.sort();
        distinct.dedup();
        let rank: Vec<u32> = global
            .iter()
            .map(|k| {
                let v = table.get(*k).expect("every PMC is tabulated");
                distinct.binary_search(v).expect("value present") as u32
            })
            .collect();
        stats.table_time += started.elapsed();

        let started = Instant::now();
        const INF: u32 = u32::MAX;
        let nb = self.blocks.len();
        let mut value = vec![INF; nb];
        let mut choice: Vec<Option<usize>> = vec![None; nb];
        // Blocks of equal key size never reference each other.
        let mut start = 0;
        while start < nb {
            let size = self.blocks[start].key().len();
            let end = start + self.blocks[start..].iter().take_while(|b| b.key().len() == size).count();
            let layer: Vec<(u32, Option<usize>)> = (start..end)
                .into_par_iter()
                .map(|b| {
                    let mut best = (INF, None);
                    for (ci, cand) in self.candidates[b].iter().enumerate() {
                        let mut v = rank[cand.pmc];
                        for &s in &cand.subs {
                            debug_assert!(self.blocks[s].key().is_proper_subset(self.blocks[b].key()));
                            v = v.max(value[s]);
                        }
                        if v < best.0 {
                            best = (v, Some(ci));
                        }
                    }
                    best
                })
                .collect();
            for (b, (v, c)) in (start..end).zip(layer) {
                if v == INF {
                    return Err(Error::InternalInfeasible(self.to_global(self.blocks[b].key())));
                }
                value[b] = v;
                choice[b] = c;
            }
            start = end;
        }

        let mut best_root: Option<(usize, u32)> = None;
        for (i, (_, ids)) in self.roots.iter().enumerate() {
            let v = ids.iter().map(|&b| value[b]).max().unwrap_or(INF);
            if best_root.is_none_or(|(_, bv)| v < bv) {
                best_root = Some((i, v));
            }
        }
        let (ri, best) = best_root.expect("a non-complete graph has an inclusion-minimal separator");
        let (root, root_blocks) = &self.roots[ri];
        let td = self.reconstruct(*root, root_blocks, &choice)?;
        stats.dp_time += started.elapsed();

        Ok((distinct[best as usize].clone(), td))
    }

    fn reconstruct(&self, root: VertexSet, root_blocks: &[usize], choice: &[Option<usize>]) -> Result<TreeDecomposition> {
        let mut bags = vec![root];
        let mut parent: Vec<Option<usize>> = vec![None];
        let mut stack: Vec<(usize, usize)> = root_blocks.iter().rev().map(|&b| (b, 0)).collect();
        while let Some((b, par)) = stack.pop() {
            let block = &self.blocks[b];
            if !block.separator.is_subset(bags[par]) {
                return Err(Error::AttachmentNotFound(self.to_global(block.separator)));
            }
            let cand = &self.candidates[b][choice[b].expect("finite block has a choice")];
            let node = bags.len();
            bags.push(self.pmcs.pmcs[cand.pmc]);
            parent.push(Some(par));
            for &s in cand.subs.iter().rev() {
                stack.push((s, node));
            }
        }
        let (bags, edges) = prune(bags, &parent);
        Ok(TreeDecomposition {
            bags: bags.into_iter().map(|b| self.to_global(b)).collect(),
            edges,
            widths: Vec::new(),
        })
    }
}

/// Contracts every bag contained in a neighboring bag, then renumbers the
/// survivors breadth-first from the lowest surviving node.
fn prune(bags: Vec<VertexSet>, parent: &[Option<usize>]) -> (Vec<VertexSet>, Vec<(usize, usize)>) {
    let k = bags.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (c, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            adj[c].push(p);
            adj[p].push(c);
        }
    }
    let mut alive = vec![true; k];
    loop {
        let found = (0..k).filter(|&u| alive[u]).find_map(|u| {
            adj[u]
                .iter()
                .copied()
                .filter(|&v| bags[u].is_subset(bags[v]))
                .min()
                .map(|v| (u, v))
        });
        let Some((u, v)) = found else { break };
        let moved: Vec<usize> = adj[u].iter().copied().filter(|&w| w != v).collect();
        for &w in &moved {
            for x in adj[w].iter_mut() {
                if *x == u {
                    *x = v;
                }
            }
        }
        adj[v].retain(|&w| w != u);
        adj[v].extend(moved);
        adj[v].sort_unstable();
        adj[u].clear();
        alive[u] = false;
    }

    let root = (0..k).find(|&u| alive[u]).expect("one bag survives");
    let mut id = vec![usize::MAX; k];
    let mut order = vec![root];
    id[root] = 0;
    let mut edges = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in &adj[u] {
            if id[w] == usize::MAX {
                id[w] = order.len();
                edges.push((id[u], id[w]));
                order.push(w);
            }
        }
        i += 1;
    }
    (order.iter().map(|&u| bags[u]).collect(), edges)
}

/// Enumerated separators, PMCs and blocks of a graph, reusable across width
/// functions.
pub struct Prepared {
    n: usize,
    components: Vec<Component>,
    enumeration_time: Duration,
}

impl Prepared {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_limit(g, decompose::DEFAULT_LIST_LIMIT)
    }

    pub fn with_limit(g: &Graph, limit: usize) -> Result<Self> {
        let started = Instant::now();
        let components = g
            .components(VertexSet::EMPTY)
            .into_iter()
            .map(|c| {
                let (sub, positions) = g.induced(c);
                Component::new(sub, positions, limit)
            })
            .collect::<Result<_>>()?;
        Ok(Prepared {
            n: g.n(),
            components,
            enumeration_time: started.elapsed(),
        })
    }

    pub fn stats(&self) -> SolveStats {
        SolveStats {
            components: self.components.len(),
            minimal_separators: self.components.iter().map(|c| c.seps.len()).sum(),
            inclusion_minimal_separators: self.components.iter().map(|c| c.roots.len()).sum(),
            pmcs: self.components.iter().map(|c| c.pmcs.len()).sum(),
            full_blocks: self.components.iter().map(|c| c.blocks.len()).sum(),
            enumeration_time: self.enumeration_time,
            ..Default::default()
        }
    }

    /// Optimal `f`-width and decomposition; components are joined in a path.
    pub fn solve<F: WidthFunction + ?Sized>(&self, f: &F) -> Result<SolveResult> {
        let mut stats = self.stats();
        if self.n == 0 {
            let mut td = TreeDecomposition::single(VertexSet::EMPTY);
            td.annotate(f)?;
            let width = td.widths[0].clone();
            return Ok(SolveResult {
                width,
                decomposition: td,
                stats,
            });
        }
        let mut width: Option<WidthValue> = None;
        let mut td = TreeDecomposition::default();
        let mut prev_first: Option<usize> = None;
        for comp in &self.components {
            let (w, part) = comp.solve(f, &mut stats)?;
            if width.as_ref().is_none_or(|cur| w > *cur) {
                width = Some(w);
            }
            let offset = td.bags.len();
            td.bags.extend(part.bags);
            td.edges.extend(part.edges.into_iter().map(|(a, b)| (a + offset, b + offset)));
            if let Some(p) = prev_first {
                td.edges.push((p, offset));
            }
            prev_first = Some(offset);
        }
        td.annotate(f)?;
        Ok(SolveResult {
            width: width.expect("at least one component"),
            decomposition: td,
            stats,
        })
    }
}

/// `f`-tree-width of a graph with an optimal tree decomposition.
pub fn solve_graph<F: WidthFunction + ?Sized>(g: &Graph, f: &F) -> Result<SolveResult> {
    Prepared::new(g)?.solve(f)
}

/// `f`-hypertree-width of `h`, computed as the `f`-tree-width of its
/// primal graph.
pub fn solve_hypergraph<F: WidthFunction + ?Sized>(h: &Hypergraph, f: &F) -> Result<SolveResult> {
    solve_graph(&h.gaifman(), f)
}

/// Solves one of the built-in measures.
pub fn solve(h: &Hypergraph, measure: Measure, options: &SolveOptions) -> Result<SolveResult> {
    let prepared = Prepared::with_limit(&h.gaifman(), options.list_limit)?;
    match measure {
        Measure::Tw | Measure::Custom => prepared.solve(&SizeWidth),
        Measure::Fhw => prepared.solve(&FractionalCoverWidth { hypergraph: h }),
        Measure::Ghw => {
            let rho = IntegralCoverWidth { hypergraph: h };
            match options.ghw_method {
                GhwMethod::Direct => prepared.solve(&rho),
                GhwMethod::ZetaBinarySearch => {
                    let k = intcover::ghw_binary_search(h, options.zeta_max_n, |f| {
                        prepared.solve(f).map(|r| r.width)
                    })?;
                    let decision = intcover::ghw_decision_tables_with_limit(h, k, options.zeta_max_n)?;
                    let mut result = prepared.solve(&ThresholdWidth {
                        decision: &decision,
                    })?;
                    result.decomposition.annotate(&rho)?;
                    let width = WidthValue::int(k as i64);
                    debug_assert!(result.decomposition.widths.iter().all(|w| *w <= width));
                    result.width = width;
                    Ok(result)
                }
            }
        }
    }
}
