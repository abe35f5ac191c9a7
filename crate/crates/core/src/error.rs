use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({}, {}) is not in the graph", .0.0, .0.1)]
    NotAnEdge(Edge),
    #[error("edge ({}, {}) lies inside one q-component; its answer is already forced", .0.0, .0.1)]
    IntraComponent(Edge),
    #[error("graph is unsolvable: {0}")]
    Unsolvable(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("strategy error: {0}")]
    Strategy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
