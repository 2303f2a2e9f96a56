//! Wire formats.
//!
//! Input is one of
//!
//! * `p hg <n> <m>` followed by `m` lines of 1-based vertex ids, one
//!   hyperedge per line;
//! * `p tw <n> <m>` followed by `m` lines `u v` (a graph, read as a
//!   hypergraph of 2-edges);
//! * lines `e <name>: <v1> <v2> ...` with arbitrary vertex tokens, numbered
//!   in order of first appearance.
//!
//! Lines starting with `c` are comments everywhere. Decompositions are
//! written as
//!
//! ```text
//! s htd <#bags> <width> <n> <measure>
//! b <id> <vertices...>
//! <id> <id>
//! c <bag id> <edge ids...>
//! ```
//!
//! with 1-based bag, vertex and edge ids. Certificate lines are only
//! written for ghw.

use std::collections::HashMap;
use std::fmt::Write as _;

use fhtw_core::intcover::extract_cover;
use fhtw_core::{Error as CoreError, Hypergraph, Measure, SolveResult, TreeDecomposition, VertexSet, WidthValue};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("vertex {0} lies in no hyperedge (use --patch-isolated to add singleton edges)")]
    IsolatedVertex(String),
    #[error("{0}")]
    Core(CoreError),
}

fn syntax(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        reason: reason.into(),
    }
}

/// A parsed hypergraph together with the 1-based input position of each of
/// its hyperedges (repeated input edges collapse onto their first copy).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Input {
    pub hypergraph: Hypergraph,
    pub edge_ids: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Hg,
    Tw,
    Named,
}

/// Lines that are neither blank nor comments, with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !(l.starts_with('c') && (l.len() == 1 || l[1..].starts_with(char::is_whitespace))))
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found `{tok}`")))
}

pub fn parse_hypergraph(text: &str, patch_isolated: bool) -> Result<Input, ParseError> {
    let mut lines = content_lines(text).peekable();
    let kind = match lines.peek() {
        None => return Err(syntax(1, "empty input")),
        Some((_, l)) if l.starts_with("p ") => match l.split_whitespace().nth(1) {
            Some("hg") => Kind::Hg,
            Some("tw") => Kind::Tw,
            other => return Err(syntax(lines.peek().unwrap().0, format!("unknown problem type {other:?}"))),
        },
        Some((_, l)) if l.starts_with("e ") => Kind::Named,
        Some(&(no, _)) => return Err(syntax(no, "expected a `p hg`, `p tw` or `e` line")),
    };

    let (n, raw, names) = match kind {
        Kind::Named => {
            let mut ids: HashMap<&str, usize> = HashMap::new();
            let mut names: Vec<String> = Vec::new();
            let mut raw = Vec::new();
            for (no, l) in lines {
                let rest = l
                    .strip_prefix("e ")
                    .ok_or_else(|| syntax(no, "expected `e <name>: <vertices>`"))?;
                let (_, verts) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(no, "missing `:` after edge name"))?;
                let mut e = VertexSet::EMPTY;
                for tok in verts.split_whitespace() {
                    let id = *ids.entry(tok).or_insert_with(|| {
                        names.push(tok.to_string());
                        names.len() - 1
                    });
                    if id >= fhtw_core::set::MAX_VERTICES {
                        return Err(ParseError::Core(CoreError::CapacityExceeded {
                            what: "vertex count",
                            limit: fhtw_core::set::MAX_VERTICES,
                        }));
                    }
                    e.insert(id);
                }
                if e.is_empty() {
                    return Err(syntax(no, "empty hyperedge"));
                }
                raw.push(e);
            }
            (names.len(), raw, names)
        }
        Kind::Hg | Kind::Tw => {
            let (hno, header) = lines.next().unwrap();
            let toks: Vec<&str> = header.split_whitespace().collect();
            if toks.len() != 4 {
                return Err(syntax(hno, "header must be `p <type> <n> <m>`"));
            }
            let n = parse_usize(hno, toks[2], "vertex count")?;
            let m = parse_usize(hno, toks[3], "edge count")?;
            if n > fhtw_core::set::MAX_VERTICES {
                return Err(ParseError::Core(CoreError::CapacityExceeded {
                    what: "vertex count",
                    limit: fhtw_core::set::MAX_VERTICES,
                }));
            }
            let mut raw = Vec::with_capacity(m);
            let mut last = hno;
            for (no, l) in lines {
                last = no;
                let mut e = VertexSet::EMPTY;
                let toks: Vec<&str> = l.split_whitespace().collect();
                if kind == Kind::Tw && toks.len() != 2 {
                    return Err(syntax(no, "graph edges have exactly two endpoints"));
                }
                for tok in toks {
                    let v = parse_usize(no, tok, "vertex id")?;
                    if v == 0 || v > n {
                        return Err(syntax(no, format!("vertex {v} outside 1..={n}")));
                    }
                    e.insert(v - 1);
                }
                if e.is_empty() {
                    return Err(syntax(no, "empty hyperedge"));
                }
                raw.push(e);
            }
            if raw.len() != m {
                return Err(syntax(last, format!("header announces {m} edges, found {}", raw.len())));
            }
            (n, raw, (1..=n).map(|i| i.to_string()).collect())
        }
    };

    let built = if patch_isolated {
        Hypergraph::patching_isolated(n, raw.clone(), names.clone())
    } else {
        Hypergraph::with_names(n, raw.clone(), names.clone())
    };
    let hypergraph = match built {
        Ok(h) => h,
        Err(CoreError::IsolatedVertex(v)) => return Err(ParseError::IsolatedVertex(names[v].clone())),
        Err(e) => return Err(ParseError::Core(e)),
    };
    // patched singleton edges are numbered after the input edges
    let mut next_patch = raw.len();
    let edge_ids = hypergraph
        .edges()
        .iter()
        .map(|e| match raw.iter().position(|r| r == e) {
            Some(p) => p + 1,
            None => {
                next_patch += 1;
                next_patch
            }
        })
        .collect();
    Ok(Input {
        hypergraph,
        edge_ids,
    })
}

/// Renders a solved decomposition. `edge_ids` maps hyperedge indices to the
/// ids written on certificate lines.
pub fn emit_decomposition(result: &SolveResult, input: &Input, measure: Measure) -> Result<String, CoreError> {
    let td = &result.decomposition;
    let h = &input.hypergraph;
    let mut out = String::new();
    let _ = writeln!(out, "s htd {} {} {} {}", td.len(), result.width, h.n(), measure);
    for (i, bag) in td.bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag.iter() {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    if measure == Measure::Ghw {
        for (i, &bag) in td.bags.iter().enumerate() {
            let cert = extract_cover(h, bag)?;
            let _ = write!(out, "c {}", i + 1);
            for e in cert.edges {
                let _ = write!(out, " {}", input.edge_ids[e]);
            }
            out.push('\n');
        }
    }
    Ok(out)
}

/// A decomposition file read back in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDecomposition {
    pub width: WidthValue,
    pub n: usize,
    pub measure: Measure,
    pub decomposition: TreeDecomposition,
    /// `(bag index, edge ids)` per certificate line, 0-based bag index.
    pub certificates: Vec<(usize, Vec<usize>)>,
}

pub fn parse_decomposition(text: &str) -> Result<ParsedDecomposition, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hno, header) = lines.next().ok_or_else(|| syntax(1, "empty decomposition"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 6 || toks[0] != "s" || toks[1] != "htd" {
        return Err(syntax(hno, "header must be `s htd <bags> <width> <n> <measure>`"));
    }
    let k = parse_usize(hno, toks[2], "bag count")?;
    let width: WidthValue = toks[3]
        .parse()
        .map_err(|e| syntax(hno, format!("bad width: {e}")))?;
    let n = parse_usize(hno, toks[4], "vertex count")?;
    let measure: Measure = toks[5]
        .parse()
        .map_err(|e| syntax(hno, format!("bad measure: {e}")))?;

    let mut bags: Vec<Option<VertexSet>> = vec![None; k];
    let mut edges = Vec::new();
    let mut certificates = Vec::new();
    let bag_id = |no: usize, tok: &str| -> Result<usize, ParseError> {
        let id = parse_usize(no, tok, "bag id")?;
        if id == 0 || id > k {
            return Err(syntax(no, format!("bag id {id} outside 1..={k}")));
        }
        Ok(id - 1)
    };
    for (no, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[0] {
            "b" => {
                let id = bag_id(no, toks.get(1).copied().unwrap_or(""))?;
                let mut bag = VertexSet::EMPTY;
                for tok in &toks[2..] {
                    let v = parse_usize(no, tok, "vertex id")?;
                    if v == 0 || v > n {
                        return Err(syntax(no, format!("vertex {v} outside 1..={n}")));
                    }
                    bag.insert(v - 1);
                }
                if bags[id].replace(bag).is_some() {
                    return Err(syntax(no, format!("bag {} defined twice", id + 1)));
                }
            }
            "c" => {
                let id = bag_id(no, toks.get(1).copied().unwrap_or(""))?;
                let ids = toks[2..]
                    .iter()
                    .map(|t| parse_usize(no, t, "edge id"))
                    .collect::<Result<_, _>>()?;
                certificates.push((id, ids));
            }
            _ if toks.len() == 2 => edges.push((bag_id(no, toks[0])?, bag_id(no, toks[1])?)),
            _ => return Err(syntax(no, "unrecognized line")),
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| syntax(hno, format!("bag {} missing", i + 1))))
        .collect::<Result<_, _>>()?;
    Ok(ParsedDecomposition {
        width,
        n,
        measure,
        decomposition: TreeDecomposition {
            bags,
            edges,
            widths: Vec::new(),
        },
        certificates,
    })
}
