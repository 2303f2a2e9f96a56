//! Exact f-hypertree-width.
//!
//! Computes tree-width, generalized hypertree-width and fractional
//! hypertree-width of a hypergraph (or the width for any user-supplied
//! monotone width function) together with an optimal tree decomposition.
//! The solver enumerates the minimal separators and potential maximal
//! cliques of the primal graph and runs a dynamic program over full blocks.
//!
//! ```
//! use fhtw_core::{solve, Hypergraph, Measure, SolveOptions, VertexSet, WidthValue};
//!
//! let e = |v: &[usize]| v.iter().collect::<VertexSet>();
//! let triangle = Hypergraph::new(3, vec![e(&[0, 1]), e(&[1, 2]), e(&[0, 2])]).unwrap();
//! let r = solve(&triangle, Measure::Fhw, &SolveOptions::default()).unwrap();
//! assert_eq!(r.width, WidthValue::ratio(3, 2));
//! ```

pub mod decompose;
pub mod engine;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod intcover;
pub mod lpcover;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod set;
pub mod subsetzeta;
pub mod td;
pub mod widthfn;

pub use engine::{solve, solve_graph, solve_hypergraph, GhwMethod, Prepared, SolveOptions, SolveResult, SolveStats};
pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use set::VertexSet;
pub use td::{validate_decomposition, TreeDecomposition};
pub use widthfn::{Measure, WidthFunction, WidthValue};
