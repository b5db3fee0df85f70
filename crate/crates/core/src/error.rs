use thiserror::Error;

use crate::coalition::BlockStatus;

/// Errors produced by parsing, generation, and the exact solvers.
///
/// Vertex ids and block names in messages are 1-based, matching the text
/// formats; the structured fields keep the internal 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A text input (edge list or partition file) is malformed.
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A generator or oracle was called with parameters outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The graph is larger than the configured exact-search limit.
    #[error("order {order} exceeds the exact-search limit {limit}")]
    CapacityExceeded { order: usize, limit: usize },

    /// A partition block contains no vertices.
    #[error("block V{} is empty", index + 1)]
    EmptyBlock { index: usize },

    /// Two partition blocks share a vertex.
    #[error("vertex {} appears in both block V{} and block V{}", vertex + 1, first + 1, second + 1)]
    OverlappingBlocks {
        vertex: usize,
        first: usize,
        second: usize,
    },

    /// A vertex of the universe is missing from every block.
    #[error("vertex {} is not covered by any block", vertex + 1)]
    UncoveredVertex { vertex: usize },

    /// A partition was paired with a graph of a different order.
    #[error("partition is over {partition_universe} vertices but the graph has {graph_order}")]
    UniverseMismatch {
        partition_universe: usize,
        graph_order: usize,
    },

    /// A block index argument does not name a block of the partition.
    #[error("block index {index} out of range ({blocks} blocks)")]
    BlockIndexOutOfRange { index: usize, blocks: usize },

    /// The domatic refinement construction requires a graph without a
    /// universal vertex.
    #[error("vertex {} is adjacent to all others; the refinement construction requires a graph without one", vertex + 1)]
    UniversalVertex { vertex: usize },

    /// A coalition graph was requested for a partition that fails the
    /// coalition-partition conditions.
    #[error("not a valid coalition partition: block V{} is {status}", index + 1)]
    InvalidCoalitionPartition { index: usize, status: BlockStatus },
}

pub type Result<T> = std::result::Result<T, Error>;
