//! Monotone width functions and their memo table.
//!
//! A width function maps vertex sets to exact, totally ordered values and
//! must be monotone under inclusion. Three instances are built in: the
//! size function `|X| - 1` (tree-width), the integral edge-cover number
//! (generalized hypertree-width) and the fractional edge-cover number
//! (fractional hypertree-width). Library users may supply their own.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::{intcover, lpcover};

/// An exact width: a rational number or `+inf`.
///
/// Integer widths are rationals with denominator one. Values are only ever
/// compared, never rounded.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WidthValue {
    Finite(BigRational),
    Infinite,
}

impl WidthValue {
    pub fn int(v: i64) -> Self {
        WidthValue::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        WidthValue::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        WidthValue::Finite(BigRational::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, WidthValue::Infinite)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            WidthValue::Finite(r) => Some(r),
            WidthValue::Infinite => None,
        }
    }
}

impl From<BigRational> for WidthValue {
    fn from(r: BigRational) -> Self {
        WidthValue::Finite(r)
    }
}

impl fmt::Display for WidthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WidthValue::Infinite => write!(f, "inf"),
            WidthValue::Finite(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            WidthValue::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed width value {0:?}")]
pub struct ParseWidthError(String);

impl FromStr for WidthValue {
    type Err = ParseWidthError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || ParseWidthError(s.to_string());
        if s == "inf" {
            return Ok(WidthValue::Infinite);
        }
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(WidthValue::Finite(BigRational::new(num, den)))
    }
}

/// Which width measure a function computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    Tw,
    Ghw,
    Fhw,
    Custom,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::Tw => "tw",
            Measure::Ghw => "ghw",
            Measure::Fhw => "fhw",
            Measure::Custom => "custom",
        })
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tw" => Ok(Measure::Tw),
            "ghw" => Ok(Measure::Ghw),
            "fhw" => Ok(Measure::Fhw),
            "custom" => Ok(Measure::Custom),
            _ => Err(format!("unknown measure {s:?} (expected tw, ghw or fhw)")),
        }
    }
}

/// A monotone map from vertex sets to widths: `X ⊆ Y` implies
/// `eval(X) <= eval(Y)`. Implementations must be pure.
pub trait WidthFunction: Sync {
    fn measure(&self) -> Measure;

    fn eval(&self, x: VertexSet) -> Result<WidthValue>;
}

impl<F: WidthFunction + ?Sized> WidthFunction for &F {
    fn measure(&self) -> Measure {
        (**self).measure()
    }

    fn eval(&self, x: VertexSet) -> Result<WidthValue> {
        (**self).eval(x)
    }
}

/// `|X| - 1`.
pub fn size_width(x: VertexSet) -> WidthValue {
    WidthValue::int(x.len() as i64 - 1)
}

/// Minimum number of hyperedges covering `x`.
pub fn integral_cover_width(h: &Hypergraph, x: VertexSet) -> WidthValue {
    WidthValue::int(intcover::rho(h, x) as i64)
}

/// Optimum of the fractional edge-cover LP restricted to `x`.
pub fn fractional_cover_width(h: &Hypergraph, x: VertexSet) -> Result<WidthValue> {
    if x.is_empty() {
        return Ok(WidthValue::zero());
    }
    let lp = lpcover::build_cover_lp(h, x)?;
    let sol = lpcover::solve_cover_lp(&lp)?;
    Ok(WidthValue::Finite(sol.optimum))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SizeWidth;

impl WidthFunction for SizeWidth {
    fn measure(&self) -> Measure {
        Measure::Tw
    }

    fn eval(&self, x: VertexSet) -> Result<WidthValue> {
        Ok(size_width(x))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct IntegralCoverWidth<'h> {
    pub hypergraph: &'h Hypergraph,
}

impl WidthFunction for IntegralCoverWidth<'_> {
    fn measure(&self) -> Measure {
        Measure::Ghw
    }

    fn eval(&self, x: VertexSet) -> Result<WidthValue> {
        Ok(integral_cover_width(self.hypergraph, x))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FractionalCoverWidth<'h> {
    pub hypergraph: &'h Hypergraph,
}

impl WidthFunction for FractionalCoverWidth<'_> {
    fn measure(&self) -> Measure {
        Measure::Fhw
    }

    fn eval(&self, x: VertexSet) -> Result<WidthValue> {
        fractional_cover_width(self.hypergraph, x)
    }
}

/// Memoized values of a width function on a fixed key list.
#[derive(Debug)]
pub struct WidthTable {
    index: HashMap<VertexSet, usize>,
    entries: Vec<(VertexSet, WidthValue)>,
    hits: AtomicU64,
}

impl WidthTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of calls made to the underlying function.
    pub fn evaluations(&self) -> usize {
        self.entries.len()
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn get(&self, key: VertexSet) -> Option<&WidthValue> {
        let i = *self.index.get(&key)?;
        self.hits.fetch_add(1, Ordering::Relaxed);
        Some(&self.entries[i].1)
    }

    pub fn entries(&self) -> &[(VertexSet, WidthValue)] {
        &self.entries
    }
}

/// Evaluates `f` once on every PMC and every extra key (in parallel).
pub fn build_width_table<F: WidthFunction + ?Sized>(
    f: &F,
    pmcs: &[VertexSet],
    final_keys: &[VertexSet],
) -> Result<WidthTable> {
    let mut keys: Vec<VertexSet> = Vec::with_capacity(pmcs.len() + final_keys.len());
    let mut index = HashMap::with_capacity(keys.capacity());
    for &k in pmcs.iter().chain(final_keys) {
        if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(k) {
            slot.insert(keys.len());
            keys.push(k);
        }
    }
    let values: Vec<WidthValue> = keys
        .par_iter()
        .map(|&k| f.eval(k))
        .collect::<Result<_>>()?;
    Ok(WidthTable {
        index,
        entries: keys.into_iter().zip(values).collect(),
        hits: AtomicU64::new(0),
    })
}
