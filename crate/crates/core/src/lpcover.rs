//! Exact fractional edge covers.
//!
//! The cover LP `min Σ γ_e  s.t.  Σ_{e ∋ v} γ_e >= 1 (v ∈ Ω), γ >= 0` is
//! solved through its dual, the fractional independent set LP
//! `max Σ y_v  s.t.  Σ_{v ∈ e} y_v <= 1, y >= 0`, whose slack basis is
//! feasible from the start. The simplex runs on an all-integer tableau
//! (fraction-free pivoting with a common divisor) and uses Bland's rule.
//! The optimal cover weights are the dual prices of the dual's rows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// Row-per-vertex, column-per-trace covering system over a query set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverLp {
    /// Vertex id of each row, ascending.
    pub rows: Vec<usize>,
    /// Each column as a bitmask over row positions.
    pub columns: Vec<u128>,
    /// For each column, the first hyperedge whose trace it is.
    pub column_edge: Vec<usize>,
}

impl CoverLp {
    /// Builds the system directly from row/column masks (no reduction).
    pub fn from_columns(num_rows: usize, columns: Vec<u128>) -> Self {
        CoverLp {
            rows: (0..num_rows).collect(),
            column_edge: (0..columns.len()).collect(),
            columns,
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub optimum: BigRational,
    /// `γ` per column, each in `[0, 1]`.
    pub weights: Vec<BigRational>,
    /// Optimal fractional independent set: one value per row.
    pub dual: Vec<BigRational>,
}

impl LpSolution {
    /// Weights spread back onto the hypergraph's edges (zero for edges that
    /// are not a column representative).
    pub fn edge_weights(&self, lp: &CoverLp, m: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); m];
        for (w, &e) in self.weights.iter().zip(&lp.column_edge) {
            out[e] = w.clone();
        }
        out
    }
}

/// Distinct nonempty traces `e ∩ omega`, dropping any trace strictly
/// contained in another. Columns keep the order of their first edge.
pub fn build_cover_lp(h: &Hypergraph, omega: VertexSet) -> Result<CoverLp> {
    let rows: Vec<usize> = omega.iter().collect();
    let mut traces: Vec<(u128, usize)> = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        let t = e.compress(&rows);
        if t != 0 && !traces.iter().any(|&(u, _)| u == t) {
            traces.push((t, i));
        }
    }
    let covered = traces.iter().fold(0u128, |a, &(t, _)| a | t);
    if let Some(r) = (0..rows.len()).find(|&r| covered >> r & 1 == 0) {
        return Err(Error::EmptyTrace(rows[r]));
    }
    let kept: Vec<(u128, usize)> = traces
        .iter()
        .copied()
        .filter(|&(t, _)| !traces.iter().any(|&(u, _)| u != t && t & !u == 0))
        .collect();
    Ok(CoverLp {
        rows,
        columns: kept.iter().map(|&(t, _)| t).collect(),
        column_edge: kept.iter().map(|&(_, e)| e).collect(),
    })
}

const OVERFLOW: Error = Error::ArithmeticOverflow(127);

/// Integer tableau; the true entries are `t[i][k] / div`.
struct Tableau {
    t: Vec<Vec<i128>>,
    div: i128,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) -> Result<()> {
        let p = self.t[row][col];
        let pivot_row = self.t[row].clone();
        for (i, r) in self.t.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let f = r[col];
            for (x, &pr) in r.iter_mut().zip(&pivot_row) {
                let num = p
                    .checked_mul(*x)
                    .and_then(|a| f.checked_mul(pr).and_then(|b| a.checked_sub(b)))
                    .ok_or(OVERFLOW)?;
                debug_assert_eq!(num % self.div, 0);
                *x = num / self.div;
            }
        }
        self.div = p;
        self.basis[row] = col;
        Ok(())
    }
}

fn ratio(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact optimum and an optimal weight vector of a cover LP.
pub fn solve_cover_lp(lp: &CoverLp) -> Result<LpSolution> {
    let r = lp.num_rows();
    let m = lp.num_columns();
    if r == 0 {
        return Ok(LpSolution {
            optimum: BigRational::zero(),
            weights: vec![BigRational::zero(); m],
            dual: Vec::new(),
        });
    }
    let width = r + m + 1;
    let rhs = r + m;
    // Rows 0..m: one dual constraint per cover column; row m: objective.
    let mut t = vec![vec![0i128; width]; m + 1];
    for (j, &col) in lp.columns.iter().enumerate() {
        for v in 0..r {
            if col >> v & 1 == 1 {
                t[j][v] = 1;
            }
        }
        t[j][r + j] = 1;
        t[j][rhs] = 1;
    }
    for v in 0..r {
        t[m][v] = -1;
    }
    let mut tab = Tableau {
        t,
        div: 1,
        basis: (r..r + m).collect(),
    };

    while let Some(enter) = (0..r + m).find(|&k| tab.t[m][k] < 0) {
        let mut leave: Option<usize> = None;
        for j in 0..m {
            let a = tab.t[j][enter];
            if a <= 0 {
                continue;
            }
            leave = Some(match leave {
                None => j,
                Some(b) => {
                    // compare t[j][rhs]/a with t[b][rhs]/t[b][enter]
                    let lhs = tab.t[j][rhs].checked_mul(tab.t[b][enter]).ok_or(OVERFLOW)?;
                    let rhs_v = tab.t[b][rhs].checked_mul(a).ok_or(OVERFLOW)?;
                    if lhs < rhs_v || (lhs == rhs_v && tab.basis[j] < tab.basis[b]) {
                        j
                    } else {
                        b
                    }
                }
            });
        }
        let leave = leave.expect("fractional independent set LP is bounded");
        tab.pivot(leave, enter)?;
    }

    let div = tab.div;
    let optimum = ratio(tab.t[m][rhs], div);
    let mut dual = vec![BigRational::zero(); r];
    for (j, &b) in tab.basis.iter().enumerate() {
        if b < r {
            dual[b] = ratio(tab.t[j][rhs], div);
        }
    }
    let one = BigRational::one();
    let weights: Vec<BigRational> = (0..m)
        .map(|j| ratio(tab.t[m][r + j], div).min(one.clone()))
        .collect();

    let sol = LpSolution {
        optimum,
        weights,
        dual,
    };
    debug_assert!(certify(lp, &sol), "simplex returned an uncertified solution");
    Ok(sol)
}

/// Exact optimality certificate: primal and dual feasibility with equal
/// objective values.
pub fn certify(lp: &CoverLp, sol: &LpSolution) -> bool {
    let one = BigRational::one();
    let zero = BigRational::zero();
    let primal_ok = (0..lp.num_rows()).all(|v| {
        let s: BigRational = lp
            .columns
            .iter()
            .zip(&sol.weights)
            .filter(|(c, _)| *c >> v & 1 == 1)
            .map(|(_, w)| w.clone())
            .sum();
        s >= one
    }) && sol.weights.iter().all(|w| *w >= zero);
    let dual_ok = lp.columns.iter().all(|&c| {
        let s: BigRational = (0..lp.num_rows())
            .filter(|&v| c >> v & 1 == 1)
            .map(|v| sol.dual[v].clone())
            .sum();
        s <= one
    }) && sol.dual.iter().all(|y| *y >= zero);
    let primal_obj: BigRational = sol.weights.iter().cloned().sum();
    let dual_obj: BigRational = sol.dual.iter().cloned().sum();
    primal_ok && dual_ok && primal_obj == sol.optimum && dual_obj == sol.optimum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn build_reduces_columns() {
        let h = Hypergraph::new(4, vec![set(&[0, 1, 2, 3])]).unwrap();
        let lp = build_cover_lp(&h, set(&[1, 2])).unwrap();
        assert_eq!(lp.columns, vec![0b11]);

        let tri = Hypergraph::new(3, vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 2])]).unwrap();
        let lp = build_cover_lp(&tri, tri.vertices()).unwrap();
        assert_eq!((lp.num_rows(), lp.num_columns()), (3, 3));

        let h = Hypergraph::new(3, vec![set(&[0, 1]), set(&[0, 1, 2])]).unwrap();
        let lp = build_cover_lp(&h, set(&[0, 1])).unwrap();
        assert_eq!(lp.columns, vec![0b11]);
        assert_eq!(lp.column_edge, vec![0]);
    }

    #[test]
    fn dominated_traces_dropped() {
        let h = Hypergraph::new(3, vec![set(&[0]), set(&[0, 1]), set(&[2])]).unwrap();
        let lp = build_cover_lp(&h, h.vertices()).unwrap();
        assert_eq!(lp.columns, vec![0b011, 0b100]);
        assert_eq!(lp.column_edge, vec![1, 2]);
    }

    #[test]
    fn solve_examples() {
        let one_col = CoverLp::from_columns(3, vec![0b111]);
        let s = solve_cover_lp(&one_col).unwrap();
        assert_eq!(s.optimum, q(1, 1));

        let tri = CoverLp::from_columns(3, vec![0b011, 0b110, 0b101]);
        let s = solve_cover_lp(&tri).unwrap();
        assert_eq!(s.optimum, q(3, 2));
        assert_eq!(s.weights, vec![q(1, 2), q(1, 2), q(1, 2)]);
        assert!(certify(&tri, &s));

        let sep = CoverLp::from_columns(2, vec![0b01, 0b10]);
        assert_eq!(solve_cover_lp(&sep).unwrap().optimum, q(2, 1));
    }

    #[test]
    fn five_cycle() {
        // C5 as a hypergraph of 2-edges: fractional cover 5/2
        let cols = vec![0b00011, 0b00110, 0b01100, 0b11000, 0b10001];
        let lp = CoverLp::from_columns(5, cols);
        let s = solve_cover_lp(&lp).unwrap();
        assert_eq!(s.optimum, q(5, 2));
        assert!(certify(&lp, &s));
    }

    #[test]
    fn column_order_irrelevant_and_certified() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let r = rng.gen_range(1..=10);
            let full = (1u128 << r) - 1;
            let mut cols: Vec<u128> = (0..rng.gen_range(1..=12))
                .map(|_| rng.gen::<u128>() & full)
                .filter(|&c| c != 0)
                .collect();
            for v in 0..r {
                if !cols.iter().any(|c| c >> v & 1 == 1) {
                    cols.push(1 << v | (1 << rng.gen_range(0..r)));
                }
            }
            let lp = CoverLp::from_columns(r, cols.clone());
            let s = solve_cover_lp(&lp).unwrap();
            assert!(certify(&lp, &s));
            cols.shuffle(&mut rng);
            let s2 = solve_cover_lp(&CoverLp::from_columns(r, cols)).unwrap();
            assert_eq!(s.optimum, s2.optimum);
        }
    }
}
