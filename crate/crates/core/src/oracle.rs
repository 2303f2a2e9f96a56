//! Brute-force references for tests and `--oracle` cross-checks.
//!
//! Nothing here shares an algorithmic path with the modules it certifies:
//! widths come from minimizing over all elimination orders, PMCs from the
//! maximal cliques of minimal fill-in graphs, covers from exhaustive edge
//! subsets, and LP optima from vertex enumeration.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::lpcover::CoverLp;
use crate::set::VertexSet;
use crate::subsetzeta::SubsetTable;
use crate::widthfn::{Measure, SizeWidth, WidthFunction, WidthValue};

pub const ELIMINATION_MAX_N: usize = 9;
pub const PMC_ORACLE_MAX_N: usize = 7;
pub const NAIVE_ZETA_MAX_N: usize = 14;
pub const EXHAUSTIVE_COVER_MAX_M: usize = 20;
pub const BASIC_SOLUTION_MAX_ROWS: usize = 7;
pub const BASIC_SOLUTION_MAX_COLUMNS: usize = 8;

fn cap(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::CapacityExceeded { what, limit })
    } else {
        Ok(())
    }
}

/// A permutation of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder(pub Vec<usize>);

impl EliminationOrder {
    /// Every order of `0..n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = EliminationOrder> {
        let mut next: Option<Vec<usize>> = Some((0..n).collect());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut p = cur.clone();
            // standard next-permutation step
            if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
                let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
                p.swap(i - 1, j);
                p[i..].reverse();
                next = Some(p);
            }
            Some(EliminationOrder(cur))
        })
    }

    /// Bags `{v} ∪ (later neighbors of v)` in the fill-in graph, and the
    /// fill-in graph itself.
    pub fn eliminate(&self, g: &Graph) -> (Vec<VertexSet>, Vec<VertexSet>) {
        let mut adj: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v)).collect();
        let mut remaining = g.vertices();
        let mut bags = Vec::with_capacity(g.n());
        for &v in &self.0 {
            let later = adj[v].intersection(remaining).without(v);
            bags.push(later.with(v));
            for u in later {
                adj[u] = adj[u].union(later.without(u));
            }
            remaining.remove(v);
        }
        (bags, adj)
    }
}

/// `min` over all elimination orders of the maximum of `f` over the
/// elimination bags.
pub fn ftw_by_elimination<F: WidthFunction + ?Sized>(g: &Graph, f: &F) -> Result<WidthValue> {
    cap("elimination oracle vertex count", g.n(), ELIMINATION_MAX_N)?;
    let mut memo: HashMap<VertexSet, WidthValue> = HashMap::new();
    let mut eval = |x: VertexSet| -> Result<WidthValue> {
        if let Some(v) = memo.get(&x) {
            return Ok(v.clone());
        }
        let v = f.eval(x)?;
        memo.insert(x, v.clone());
        Ok(v)
    };
    if g.n() == 0 {
        return eval(VertexSet::EMPTY);
    }
    let mut best = WidthValue::Infinite;
    for order in EliminationOrder::all(g.n()) {
        let (bags, _) = order.eliminate(g);
        let mut worst: Option<WidthValue> = None;
        for b in bags {
            let v = eval(b)?;
            if worst.as_ref().is_none_or(|w| v > *w) {
                worst = Some(v);
            }
        }
        let worst = worst.expect("nonempty order");
        if worst < best {
            best = worst;
        }
    }
    Ok(best)
}

fn is_chordal(adj: &[VertexSet], n: usize) -> bool {
    let mut remaining = VertexSet::universe(n);
    'outer: while !remaining.is_empty() {
        for v in remaining {
            let nb = adj[v].intersection(remaining);
            if nb.iter().all(|u| nb.without(u).is_subset(adj[u])) {
                remaining.remove(v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Union over all orders whose fill-in is a minimal triangulation of the
/// maximal cliques of that triangulation.
pub fn pmcs_by_elimination(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    cap("PMC oracle vertex count", n, PMC_ORACLE_MAX_N)?;
    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    let mut seen_fill: BTreeSet<Vec<VertexSet>> = BTreeSet::new();
    for order in EliminationOrder::all(n) {
        let (bags, fill) = order.eliminate(g);
        if !seen_fill.insert(fill.clone()) {
            continue;
        }
        let mut minimal = true;
        'check: for u in 0..n {
            for v in fill[u].difference(g.neighbors(u)) {
                if u < v {
                    let mut less = fill.clone();
                    less[u].remove(v);
                    less[v].remove(u);
                    if is_chordal(&less, n) {
                        minimal = false;
                        break 'check;
                    }
                }
            }
        }
        if !minimal {
            continue;
        }
        for &b in &bags {
            if !bags.iter().any(|&o| b.is_proper_subset(o)) {
                found.insert(b);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// `out[Y] = Σ_{S ⊆ Y} t[S]` by direct submask enumeration.
pub fn naive_zeta(t: &SubsetTable) -> Result<SubsetTable> {
    cap("naive zeta ground set", t.n(), NAIVE_ZETA_MAX_N)?;
    let values = t.values();
    let out = (0..values.len())
        .map(|y| {
            let mut acc = BigInt::zero();
            let mut s = y;
            loop {
                acc += &values[s];
                if s == 0 {
                    break;
                }
                s = (s - 1) & y;
            }
            acc
        })
        .collect();
    Ok(SubsetTable::from_values(out))
}

/// Fewest hyperedges covering `x`, over all edge subsets.
pub fn min_cover_exhaustive(h: &Hypergraph, x: VertexSet) -> Result<u32> {
    let m = h.m();
    cap("exhaustive cover edge count", m, EXHAUSTIVE_COVER_MAX_M)?;
    let edges = h.edges();
    let mut union = vec![VertexSet::EMPTY; 1 << m];
    let mut best = u32::MAX;
    for mask in 0usize..1 << m {
        if mask > 0 {
            let low = mask.trailing_zeros() as usize;
            union[mask] = union[mask & (mask - 1)].union(edges[low]);
        }
        if x.is_subset(union[mask]) {
            best = best.min(mask.count_ones());
        }
    }
    if best == u32::MAX {
        return Err(Error::EmptyTrace(x.difference(union[(1 << m) - 1]).min().unwrap()));
    }
    Ok(best)
}

/// Solves a square system by Gauss-Jordan elimination; `None` if singular.
fn solve_square(mut a: Vec<Vec<Rational64>>, mut b: Vec<Rational64>) -> Option<Vec<Rational64>> {
    let k = b.len();
    for col in 0..k {
        let piv = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col];
        for j in 0..k {
            a[col][j] /= p;
        }
        b[col] /= p;
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..k {
                    let d = f * a[col][j];
                    a[r][j] -= d;
                }
                let d = f * b[col];
                b[r] -= d;
            }
        }
    }
    Some(b)
}

/// Minimum of `Σ γ` over all basic feasible solutions of the cover system.
///
/// A vertex of `{Aγ >= 1, γ >= 0}` has a support `J` and `|J|` covering
/// rows that are tight with a nonsingular submatrix, so it suffices to
/// solve every such square system and keep the feasible ones.
pub fn lp_by_basic_solutions(lp: &CoverLp) -> Result<BigRational> {
    let r = lp.num_rows();
    let c = lp.num_columns();
    cap("basic-solution oracle rows", r, BASIC_SOLUTION_MAX_ROWS)?;
    cap("basic-solution oracle columns", c, BASIC_SOLUTION_MAX_COLUMNS)?;
    let one = Rational64::one();
    let zero = Rational64::zero();
    let entry = |row: usize, col: usize| if lp.columns[col] >> row & 1 == 1 { one } else { zero };
    let covers = |support: &[usize], g: &[Rational64]| {
        (0..r).all(|v| support.iter().zip(g).map(|(&j, &x)| entry(v, j) * x).sum::<Rational64>() >= one)
    };
    let mut best: Rational64 = Rational64::from_integer(c as i64);
    for cols in 1u32..1 << c {
        let support: Vec<usize> = (0..c).filter(|&j| cols >> j & 1 == 1).collect();
        let k = support.len();
        if k > r {
            continue;
        }
        for rows in 1u32..1 << r {
            if rows.count_ones() as usize != k {
                continue;
            }
            let tight: Vec<usize> = (0..r).filter(|&v| rows >> v & 1 == 1).collect();
            let a = tight.iter().map(|&v| support.iter().map(|&j| entry(v, j)).collect()).collect();
            let Some(g) = solve_square(a, vec![one; k]) else {
                continue;
            };
            if g.iter().all(|x| *x >= zero) && covers(&support, &g) {
                let obj: Rational64 = g.iter().sum();
                if obj < best {
                    best = obj;
                }
            }
        }
    }
    Ok(BigRational::new(
        BigInt::from(*best.numer()),
        BigInt::from(*best.denom()),
    ))
}

/// `min_cover_exhaustive` as a width function.
#[derive(Clone, Copy, Debug)]
pub struct ExhaustiveCoverWidth<'h> {
    pub hypergraph: &'h Hypergraph,
}

impl WidthFunction for ExhaustiveCoverWidth<'_> {
    fn measure(&self) -> Measure {
        Measure::Ghw
    }

    fn eval(&self, x: VertexSet) -> Result<WidthValue> {
        Ok(WidthValue::int(min_cover_exhaustive(self.hypergraph, x)? as i64))
    }
}

/// Cover LP over the distinct nonempty traces of `x`, with no dominance
/// reduction.
pub fn raw_cover_lp(h: &Hypergraph, x: VertexSet) -> CoverLp {
    let rows: Vec<usize> = x.iter().collect();
    let mut columns: Vec<u128> = Vec::new();
    for e in h.edges() {
        let t = e.compress(&rows);
        if t != 0 && !columns.contains(&t) {
            columns.push(t);
        }
    }
    CoverLp::from_columns(rows.len(), columns)
}

/// `lp_by_basic_solutions` on [`raw_cover_lp`] as a width function.
#[derive(Clone, Copy, Debug)]
pub struct BasicSolutionCoverWidth<'h> {
    pub hypergraph: &'h Hypergraph,
}

impl WidthFunction for BasicSolutionCoverWidth<'_> {
    fn measure(&self) -> Measure {
        Measure::Fhw
    }

    fn eval(&self, x: VertexSet) -> Result<WidthValue> {
        if x.is_empty() {
            return Ok(WidthValue::zero());
        }
        let lp = raw_cover_lp(self.hypergraph, x);
        let covered = lp.columns.iter().fold(0u128, |a, c| a | c);
        if let Some(r) = (0..lp.num_rows()).find(|&r| covered >> r & 1 == 0) {
            return Err(Error::EmptyTrace(x.iter().nth(r).unwrap()));
        }
        Ok(WidthValue::Finite(lp_by_basic_solutions(&lp)?))
    }
}

/// Width oracle for one of the built-in measures.
pub fn measure_by_elimination(h: &Hypergraph, measure: Measure) -> Result<WidthValue> {
    let g = h.gaifman();
    match measure {
        Measure::Tw | Measure::Custom => ftw_by_elimination(&g, &SizeWidth),
        Measure::Ghw => ftw_by_elimination(&g, &ExhaustiveCoverWidth { hypergraph: h }),
        Measure::Fhw => ftw_by_elimination(&g, &BasicSolutionCoverWidth { hypergraph: h }),
    }
}
