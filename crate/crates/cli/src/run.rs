use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use fhtw_core::engine::GhwMethod;
use fhtw_core::oracle::measure_by_elimination;
use fhtw_core::widthfn::{FractionalCoverWidth, IntegralCoverWidth, SizeWidth};
use fhtw_core::{solve, validate_decomposition, Error as CoreError, Measure, SolveOptions, SolveResult};
use serde::Serialize;
use thiserror::Error;

use crate::format::{emit_decomposition, parse_decomposition, parse_hypergraph, Input, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Tw,
    Ghw,
    Fhw,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Measure {
        match m {
            MeasureArg::Tw => Measure::Tw,
            MeasureArg::Ghw => Measure::Ghw,
            MeasureArg::Fhw => Measure::Fhw,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum GhwMethodArg {
    /// Evaluate the integral cover number at every potential maximal clique.
    #[default]
    Dp,
    /// Binary search on k with inclusion-exclusion cover tables.
    Zeta,
}

/// Exact tree-width, generalized and fractional hypertree-width with an
/// optimal tree decomposition.
#[derive(Clone, Debug, Parser)]
#[command(name = "fhtw", version)]
pub struct RunConfig {
    /// Input file (`p hg`, `p tw` or named-edge format); `-` reads stdin.
    pub input: PathBuf,

    /// Width measure to optimize.
    #[arg(short, long, value_enum)]
    pub measure: MeasureArg,

    /// Write the decomposition here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,

    /// Validate the decomposition (and its text round-trip) before writing.
    #[arg(long)]
    pub check: bool,

    /// Cross-check the width against the brute-force oracle (small inputs
    /// only; larger ones exit with status 2).
    #[arg(long)]
    pub oracle: bool,

    /// Add a singleton hyperedge for every vertex in no hyperedge.
    #[arg(long)]
    pub patch_isolated: bool,

    /// Write enumeration sizes and phase timings as JSON to this file
    /// (`-` for stderr).
    #[arg(long, value_name = "PATH")]
    pub stats_json: Option<PathBuf>,

    /// Worker threads (defaults to the number of cores).
    #[arg(long)]
    pub threads: Option<usize>,

    /// How ghw is computed.
    #[arg(long, value_enum, default_value_t)]
    pub ghw_method: GhwMethodArg,

    /// Largest vertex count for 2^n subset tables (zeta method).
    #[arg(long, default_value_t = fhtw_core::subsetzeta::DEFAULT_MAX_TABLE_N)]
    pub zeta_max_n: usize,

    /// Cap on minimal separators and potential maximal cliques per
    /// connected component.
    #[arg(long, default_value_t = fhtw_core::decompose::DEFAULT_LIST_LIMIT)]
    pub list_limit: usize,
}

impl RunConfig {
    pub fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            ghw_method: match self.ghw_method {
                GhwMethodArg::Dp => GhwMethod::Direct,
                GhwMethodArg::Zeta => GhwMethod::ZetaBinarySearch,
            },
            zeta_max_n: self.zeta_max_n,
            list_limit: self.list_limit,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(CoreError),
    #[error("capacity exceeded: {0}")]
    Capacity(CoreError),
    #[error("check failed: {0}")]
    Check(String),
    #[error("oracle disagrees: solver {solver}, oracle {oracle}")]
    OracleMismatch { solver: String, oracle: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::CapacityExceeded { .. } => CliError::Capacity(e),
            e => CliError::Core(e),
        }
    }
}

impl CliError {
    /// 2 for capacity limits, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Capacity(_) => 2,
            CliError::Parse(ParseError::Core(CoreError::CapacityExceeded { .. })) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StatsReport {
    pub measure: String,
    pub width: String,
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub minimal_separators: usize,
    pub inclusion_minimal_separators: usize,
    pub potential_maximal_cliques: usize,
    pub full_blocks: usize,
    pub table_evaluations: usize,
    pub bags: usize,
    pub enumeration_ms: f64,
    pub table_ms: f64,
    pub dp_ms: f64,
    pub total_ms: f64,
}

#[derive(Debug)]
pub struct Outcome {
    pub result: SolveResult,
    pub text: String,
    pub stats: StatsReport,
}

pub fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn check(input: &Input, measure: Measure, result: &SolveResult, text: &str) -> Result<(), CliError> {
    let h = &input.hypergraph;
    let fail = |e: CoreError| CliError::Check(e.to_string());
    let validate = |td| match measure {
        Measure::Tw | Measure::Custom => validate_decomposition(h, td, &SizeWidth),
        Measure::Ghw => validate_decomposition(h, td, &IntegralCoverWidth { hypergraph: h }),
        Measure::Fhw => validate_decomposition(h, td, &FractionalCoverWidth { hypergraph: h }),
    };
    let w = validate(&result.decomposition).map_err(fail)?;
    if w != result.width {
        return Err(CliError::Check(format!("decomposition has width {w}, reported {}", result.width)));
    }
    let back = parse_decomposition(text).map_err(|e| CliError::Check(format!("re-parse: {e}")))?;
    if back.width != result.width || back.n != h.n() || back.measure != measure {
        return Err(CliError::Check("header does not round-trip".into()));
    }
    let w = validate(&back.decomposition).map_err(fail)?;
    if w != result.width {
        return Err(CliError::Check(format!("re-parsed decomposition has width {w}")));
    }
    Ok(())
}

/// Solves an already-read input according to `config`.
pub fn run_text(config: &RunConfig, text: &str) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let input = parse_hypergraph(text, config.patch_isolated)?;
    let h = &input.hypergraph;
    let measure: Measure = config.measure.into();
    log::info!("{} vertices, {} distinct hyperedges", h.n(), h.m());
    let result = solve(h, measure, &config.solve_options())?;
    log::info!("{measure} = {}", result.width);
    let text = emit_decomposition(&result, &input, measure)?;
    if config.check {
        check(&input, measure, &result, &text)?;
    }
    if config.oracle {
        let want = measure_by_elimination(h, measure)?;
        if want != result.width {
            return Err(CliError::OracleMismatch {
                solver: result.width.to_string(),
                oracle: want.to_string(),
            });
        }
    }
    let s = &result.stats;
    let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
    let stats = StatsReport {
        measure: measure.to_string(),
        width: result.width.to_string(),
        vertices: h.n(),
        edges: h.m(),
        components: s.components,
        minimal_separators: s.minimal_separators,
        inclusion_minimal_separators: s.inclusion_minimal_separators,
        potential_maximal_cliques: s.pmcs,
        full_blocks: s.full_blocks,
        table_evaluations: s.table_evaluations,
        bags: result.decomposition.len(),
        enumeration_ms: ms(s.enumeration_time),
        table_ms: ms(s.table_time),
        dp_ms: ms(s.dp_time),
        total_ms: ms(start.elapsed()),
    };
    Ok(Outcome { result, text, stats })
}

/// Full command: read, solve, write decomposition and stats.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let text = read_input(&config.input)?;
    let outcome = match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Io(std::io::Error::other(e)))?
            .install(|| run_text(config, &text))?,
        None => run_text(config, &text)?,
    };
    match &config.output {
        Some(p) => std::fs::write(p, &outcome.text)?,
        None => print!("{}", outcome.text),
    }
    if let Some(p) = &config.stats_json {
        let json = serde_json::to_string_pretty(&outcome.stats).expect("stats serialize");
        if p.as_os_str() == "-" {
            eprintln!("{json}");
        } else {
            std::fs::write(p, json + "\n")?;
        }
    }
    Ok(outcome)
}
