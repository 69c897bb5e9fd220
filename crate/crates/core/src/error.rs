use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("cut side is empty or covers every vertex")]
    EmptySide,
    #[error("cut spec has {got} entries, graph has {n} vertices")]
    CutSizeMismatch { got: usize, n: usize },
    #[error("parts do not form a partition of the vertex set")]
    IncompletePartition,
    #[error("at least {min} vertices required, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("graph with {n} vertices exceeds the exhaustive bound {max}")]
    TooLarge { n: usize, max: usize },
    #[error("certificate order {k} outside 1..={order}")]
    OrderOutOfRange { k: usize, order: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("tracker reported an increase and must be rebuilt")]
    StaleTracker,
    #[error("epsilon {0} outside (0, 1]")]
    EpsilonOutOfRange(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
