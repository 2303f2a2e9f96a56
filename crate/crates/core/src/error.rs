use thiserror::Error;

use crate::set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("hyperedge {0} is empty")]
    EmptyEdge(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} occurs in no hyperedge")]
    IsolatedVertex(usize),
    #[error("capacity exceeded: {what} (limit {limit})")]
    CapacityExceeded { what: &'static str, limit: usize },

    #[error("decomposition is not a tree: {0}")]
    NotATree(String),
    #[error("vertex {0} is in no bag")]
    VertexUncovered(usize),
    #[error("hyperedge {0} is contained in no bag")]
    EdgeUncovered(VertexSet),
    #[error("bags containing vertex {0} do not form a connected subtree")]
    SubtreeDisconnected(usize),

    #[error("vertex {0} of the query set lies in no hyperedge")]
    EmptyTrace(usize),
    #[error("rational arithmetic exceeded the {0}-bit budget")]
    ArithmeticOverflow(u32),

    #[error("full block {0} has no feasible potential maximal clique")]
    InternalInfeasible(VertexSet),
    #[error("no bag of the parent contains separator {0}")]
    AttachmentNotFound(VertexSet),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
