//! Integral edge covers: the `(U, i)` dynamic program, zeta-based
//! "cover with at most k edges" tables, the binary search on `k`, and
//! per-bag cover certificates.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::subsetzeta::{self, SubsetTable};
use crate::widthfn::{Measure, WidthFunction, WidthValue};

const INF: u8 = u8::MAX;

/// Largest query set solved by the subset DP; bigger ones use branch and
/// bound over the hyperedge traces.
const DP_MAX_BITS: usize = 22;

/// Byte budget for the per-edge suffix tables used by certificate
/// extraction.
const SUFFIX_TABLE_BUDGET: usize = 1 << 26;

/// A concrete minimum edge cover of one bag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    pub bag: VertexSet,
    /// Indices into [`Hypergraph::edges`], ascending.
    pub edges: Vec<usize>,
}

/// Rolled `(U, i)` recurrence: `rho_i(U) = min(rho_{i-1}(U), 1 + rho_{i-1}(U \ e_i))`.
fn rho_dp(bits: usize, traces: &[u128]) -> Vec<u8> {
    let mut t = vec![INF; 1 << bits];
    t[0] = 0;
    for &e in traces {
        // U \ e is disjoint from e, so its entry is unchanged by this edge;
        // in-place update is safe in any order.
        for u in 1..t.len() {
            let r = t[u & !(e as usize)];
            if r != INF && r + 1 < t[u] {
                t[u] = r + 1;
            }
        }
    }
    t
}

/// `rho_H(U)` for every `U ⊆ V(H)`.
pub fn rho_table_dp(h: &Hypergraph) -> Result<SubsetTable> {
    rho_table_dp_with_limit(h, subsetzeta::DEFAULT_MAX_TABLE_N)
}

pub fn rho_table_dp_with_limit(h: &Hypergraph, limit: usize) -> Result<SubsetTable> {
    if h.n() > limit.min(32) {
        return Err(Error::CapacityExceeded {
            what: "subset table size",
            limit,
        });
    }
    let traces: Vec<u128> = h.edges().iter().map(|e| e.bits()).collect();
    let t = rho_dp(h.n(), &traces);
    Ok(SubsetTable::from_values(
        t.into_iter().map(BigInt::from).collect(),
    ))
}

/// Distinct nonempty traces `e ∩ x` over a compressed universe, with
/// traces contained in another trace dropped.
fn reduced_traces(h: &Hypergraph, positions: &[usize]) -> Vec<u128> {
    let mut traces: Vec<u128> = h
        .edges()
        .iter()
        .map(|e| e.compress(positions))
        .filter(|&t| t != 0)
        .collect();
    traces.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    traces.dedup();
    let mut kept: Vec<u128> = Vec::with_capacity(traces.len());
    for t in traces {
        if !kept.iter().any(|&k| t & !k == 0) {
            kept.push(t);
        }
    }
    kept
}

fn branch_and_bound(traces: &[u128], rem: u128, depth: u32, best: &mut u32) {
    if rem == 0 {
        *best = (*best).min(depth);
        return;
    }
    let widest = traces
        .iter()
        .map(|&t| (t & rem).count_ones())
        .max()
        .unwrap_or(0);
    if widest == 0 {
        return;
    }
    let bound = depth + rem.count_ones().div_ceil(widest);
    if bound >= *best {
        return;
    }
    let v = rem & rem.wrapping_neg();
    for &t in traces {
        if t & v != 0 {
            branch_and_bound(traces, rem & !t, depth + 1, best);
        }
    }
}

/// Minimum number of `traces` covering `target`, or `None` if impossible.
fn min_cover_size(bits: usize, traces: &[u128], target: u128) -> Option<u32> {
    if bits <= DP_MAX_BITS {
        let t = rho_dp(bits, traces);
        let r = t[target as usize];
        (r != INF).then_some(r as u32)
    } else {
        let mut best = u32::MAX;
        branch_and_bound(traces, target, 0, &mut best);
        (best != u32::MAX).then_some(best)
    }
}

/// `rho_H(x)`: the fewest hyperedges whose union contains `x`.
pub fn rho(h: &Hypergraph, x: VertexSet) -> u32 {
    if x.is_empty() {
        return 0;
    }
    let positions: Vec<usize> = x.iter().collect();
    let traces = reduced_traces(h, &positions);
    let full = if positions.len() == 128 { u128::MAX } else { (1u128 << positions.len()) - 1 };
    min_cover_size(positions.len(), &traces, full)
        .expect("every vertex lies in some hyperedge")
}

/// A minimum edge cover of `bag`; among those, the lexicographically
/// smallest ascending index sequence.
pub fn extract_cover(h: &Hypergraph, bag: VertexSet) -> Result<CoverCertificate> {
    if bag.is_empty() {
        return Ok(CoverCertificate {
            bag,
            edges: Vec::new(),
        });
    }
    let positions: Vec<usize> = bag.iter().collect();
    let bits = positions.len();
    let traces: Vec<u128> = h.edges().iter().map(|e| e.compress(&positions)).collect();
    let m = traces.len();
    let full = if bits == 128 { u128::MAX } else { (1u128 << bits) - 1 };
    if let Some(v) = (0..bits).find(|&i| traces.iter().all(|t| t >> i & 1 == 0)) {
        return Err(Error::EmptyTrace(positions[v]));
    }

    let mut chosen = Vec::new();
    if bits <= DP_MAX_BITS && (m + 1) << bits <= SUFFIX_TABLE_BUDGET {
        // suffix[i][U] = fewest edges among i.. covering U
        let size = 1usize << bits;
        let mut suffix = vec![INF; (m + 1) * size];
        suffix[m * size] = 0;
        for i in (0..m).rev() {
            let (cur, next) = suffix[i * size..].split_at_mut(size);
            let e = traces[i] as usize;
            for u in 0..size {
                let skip = next[u];
                let take = next[u & !e];
                cur[u] = if take != INF { skip.min(take + 1) } else { skip };
            }
        }
        let mut rem = full as usize;
        for (i, &t) in traces.iter().enumerate() {
            if rem == 0 {
                break;
            }
            let here = suffix[i * size + rem];
            let after = suffix[(i + 1) * size + (rem & !(t as usize))];
            if t as usize & rem != 0 && after != INF && after + 1 == here {
                chosen.push(i);
                rem &= !(t as usize);
            }
        }
    } else {
        let mut need = min_cover_size(bits, &traces, full).expect("bag is coverable");
        let mut rem = full;
        for (i, &t) in traces.iter().enumerate() {
            if rem == 0 {
                break;
            }
            if t & rem == 0 {
                continue;
            }
            let after = rem & !t;
            let rest = if after == 0 {
                Some(0)
            } else {
                min_cover_size(bits, &traces[i + 1..], after)
            };
            if rest == Some(need - 1) {
                chosen.push(i);
                rem = after;
                need -= 1;
            }
        }
    }
    Ok(CoverCertificate { bag, edges: chosen })
}

/// `U ↦ (rho_H(U) <= k)` for all `U`, read off the positivity of the
/// inclusion-exclusion cover counts.
#[derive(Clone, Debug)]
pub struct CoverDecision {
    k: u32,
    coverable: Vec<bool>,
}

impl CoverDecision {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn holds(&self, u: VertexSet) -> bool {
        self.coverable[u.as_index()]
    }
}

pub fn ghw_decision_tables(h: &Hypergraph, k: u32) -> Result<CoverDecision> {
    ghw_decision_tables_with_limit(h, k, subsetzeta::DEFAULT_MAX_TABLE_N)
}

pub fn ghw_decision_tables_with_limit(h: &Hypergraph, k: u32, limit: usize) -> Result<CoverDecision> {
    let counts = subsetzeta::cover_count_table_with_limit(h, k, limit)?;
    let coverable = counts.values().iter().map(|c| c.is_positive()).collect();
    Ok(CoverDecision { k, coverable })
}

/// `0` on sets coverable by at most `k` edges, `1` elsewhere. Monotone
/// because coverability is inherited by subsets.
pub struct ThresholdWidth<'a> {
    pub decision: &'a CoverDecision,
}

impl WidthFunction for ThresholdWidth<'_> {
    fn measure(&self) -> Measure {
        Measure::Custom
    }

    fn eval(&self, x: VertexSet) -> Result<WidthValue> {
        Ok(WidthValue::int(if self.decision.holds(x) { 0 } else { 1 }))
    }
}

/// Smallest `k` in `[1, min(m, n)]` for which `solve_decision` reports an
/// optimum of zero under the `k`-threshold width function.
pub fn ghw_binary_search<F>(h: &Hypergraph, limit: usize, mut solve_decision: F) -> Result<u32>
where
    F: FnMut(&ThresholdWidth<'_>) -> Result<WidthValue>,
{
    if h.n() == 0 {
        return Ok(0);
    }
    let (mut lo, mut hi) = (1u32, h.m().min(h.n()) as u32);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let decision = ghw_decision_tables_with_limit(h, mid, limit)?;
        let w = solve_decision(&ThresholdWidth {
            decision: &decision,
        })?;
        log::debug!("ghw decision k={mid}: {w}");
        if w <= WidthValue::zero() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}
