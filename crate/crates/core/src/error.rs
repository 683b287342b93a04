use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("every vertex is isolated")]
    AllVerticesIsolated,

    #[error("graph6: malformed header")]
    MalformedHeader,
    #[error("graph6: truncated body")]
    TruncatedBody,
    #[error("graph6: nonzero padding bits")]
    NonzeroPadding,
    #[error("graph6: bytes after the end of the body")]
    TrailingBytes,
    #[error("graph6: invalid byte {0:#04x}")]
    InvalidByte(u8),
    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("enumeration limit of {0} maximal sets exceeded")]
    EnumerationLimitExceeded(usize),
    #[error("exact coloring supports at most {max} vertices, got {0}", max = crate::enumeration::MAX_COLORING_ORDER)]
    OrderTooLargeForExactColoring(usize),

    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("connection set contains the identity")]
    IdentityInConnectionSet,
    #[error("connection set is not closed under inversion")]
    NotInverseClosed,
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
    #[error("graph is not vertex-transitive")]
    NotVertexTransitive,
    #[error("group order exceeds the materialization cap of {0}")]
    GroupTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
