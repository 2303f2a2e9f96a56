//! Command-line front-end: input formats, decomposition output and the
//! `fhtw` driver.

pub mod format;
pub mod run;

pub use format::{emit_decomposition, parse_decomposition, parse_hypergraph, Input, ParseError, ParsedDecomposition};
pub use run::{run, run_text, CliError, Outcome, RunConfig, StatsReport};
