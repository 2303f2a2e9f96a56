//! Zeta transform over the subset lattice and inclusion-exclusion counting
//! of edge covers.

use std::ops::AddAssign;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// Largest ground set for which 2^n-entry tables are built by default.
pub const DEFAULT_MAX_TABLE_N: usize = 26;

/// One exact integer per subset of `{0, .., n-1}`, indexed by bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTable {
    n: usize,
    values: Vec<BigInt>,
}

impl SubsetTable {
    pub fn zeros(n: usize) -> Result<Self> {
        check_capacity(n, DEFAULT_MAX_TABLE_N)?;
        Ok(SubsetTable {
            n,
            values: vec![BigInt::zero(); 1 << n],
        })
    }

    /// Panics unless `values.len()` is a power of two.
    pub fn from_values(values: Vec<BigInt>) -> Self {
        assert!(values.len().is_power_of_two());
        SubsetTable {
            n: values.len().trailing_zeros() as usize,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, s: VertexSet) -> &BigInt {
        &self.values[s.as_index()]
    }

    pub fn set(&mut self, s: VertexSet, v: BigInt) {
        self.values[s.as_index()] = v;
    }
}

fn check_capacity(n: usize, limit: usize) -> Result<()> {
    if n > limit.min(63) {
        return Err(Error::CapacityExceeded {
            what: "subset table size",
            limit,
        });
    }
    Ok(())
}

/// In-place Yates sweep: afterwards `values[Y]` is the sum of the original
/// `values[S]` over all `S ⊆ Y`.
pub fn zeta_in_place<T>(values: &mut [T])
where
    T: Send + for<'a> AddAssign<&'a T>,
{
    let len = values.len();
    assert!(len.is_power_of_two());
    let mut half = 1;
    while half < len {
        values
            .par_chunks_mut(2 * half)
            .with_min_len((4096 / (2 * half)).max(1))
            .for_each(|chunk| {
                let (lo, hi) = chunk.split_at_mut(half);
                for (h, l) in hi.iter_mut().zip(lo.iter()) {
                    *h += l;
                }
            });
        half *= 2;
    }
}

/// Zeta transform with `O(2^n n)` additions.
pub fn fast_zeta(t: &SubsetTable) -> SubsetTable {
    let mut out = t.clone();
    zeta_in_place(&mut out.values);
    out
}

fn avoider_counts(h: &Hypergraph, limit: usize) -> Result<Vec<u32>> {
    let n = h.n();
    check_capacity(n, limit)?;
    let full = (1usize << n) - 1;
    let mut ind = vec![0u32; 1 << n];
    for &e in h.edges() {
        ind[e.as_index()] += 1;
    }
    zeta_in_place(&mut ind);
    // a(X) = #edges inside V \ X
    Ok((0..=full).map(|x| ind[full ^ x]).collect())
}

/// `a(X)`: the number of hyperedges disjoint from `X`, for every `X`.
pub fn avoiders_table(h: &Hypergraph) -> Result<SubsetTable> {
    avoiders_table_with_limit(h, DEFAULT_MAX_TABLE_N)
}

pub fn avoiders_table_with_limit(h: &Hypergraph, limit: usize) -> Result<SubsetTable> {
    let n = h.n();
    check_capacity(n, limit)?;
    let mut ind = vec![BigInt::zero(); 1 << n];
    for &e in h.edges() {
        ind[e.as_index()] += 1;
    }
    zeta_in_place(&mut ind);
    let full = (1usize << n) - 1;
    let values = (0..=full).map(|x| ind[full ^ x].clone()).collect();
    Ok(SubsetTable { n, values })
}

/// For every `U`, the number of length-`k` sequences of hyperedges whose
/// union contains `U`, by inclusion-exclusion over the avoiders table.
pub fn cover_count_table(h: &Hypergraph, k: u32) -> Result<SubsetTable> {
    cover_count_table_with_limit(h, k, DEFAULT_MAX_TABLE_N)
}

pub fn cover_count_table_with_limit(h: &Hypergraph, k: u32, limit: usize) -> Result<SubsetTable> {
    let n = h.n();
    let a = avoider_counts(h, limit)?;
    let powers: Vec<BigInt> = (0..=h.m()).map(|c| BigInt::from(c).pow(k)).collect();
    let mut values: Vec<BigInt> = a
        .par_iter()
        .enumerate()
        .map(|(x, &ax)| {
            let p = &powers[ax as usize];
            if x.count_ones() % 2 == 1 {
                -p
            } else {
                p.clone()
            }
        })
        .collect();
    zeta_in_place(&mut values);
    debug_assert!(values.iter().all(|v| !v.is_negative()), "negative cover count");
    Ok(SubsetTable { n, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn triangle() -> Hypergraph {
        Hypergraph::new(3, vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 2])]).unwrap()
    }

    #[test]
    fn zeta_small() {
        let t = SubsetTable::from_values(big(&[3, 5]));
        assert_eq!(fast_zeta(&t).values(), &big(&[3, 8])[..]);
        let t = SubsetTable::from_values(big(&[1, 0, 0, 0]));
        assert_eq!(fast_zeta(&t).values(), &big(&[1, 1, 1, 1])[..]);
    }

    #[test]
    fn avoiders() {
        let h = triangle();
        let a = avoiders_table(&h).unwrap();
        assert_eq!(a.get(VertexSet::EMPTY), &BigInt::from(3));
        assert_eq!(a.get(set(&[0])), &BigInt::from(1));
        assert_eq!(a.get(set(&[0, 1])), &BigInt::from(0));

        let single = Hypergraph::new(3, vec![VertexSet::universe(3)]).unwrap();
        let a = avoiders_table(&single).unwrap();
        for x in 1..8u128 {
            assert!(a.get(VertexSet::from_bits(x)).is_zero());
        }
    }

    #[test]
    fn cover_counts() {
        let h = triangle();
        let t0 = cover_count_table(&h, 0).unwrap();
        assert_eq!(t0.values(), &big(&[1, 0, 0, 0, 0, 0, 0, 0])[..]);
        let t1 = cover_count_table(&h, 1).unwrap();
        assert_eq!(t1.get(set(&[0, 1])), &BigInt::from(1));
        let t2 = cover_count_table(&h, 2).unwrap();
        assert_eq!(t2.get(set(&[0, 1, 2])), &BigInt::from(6));
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            avoiders_table_with_limit(&triangle(), 2),
            Err(Error::CapacityExceeded { .. })
        ));
    }
}
