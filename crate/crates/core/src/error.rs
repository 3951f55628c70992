use alloc::string::String;

/// Errors raised by graph construction, group queries and the deciders.
///
/// Vertex indices carried in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {index} out of range for order {order}")]
    VertexOutOfRange { index: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotBijective(String),
    #[error("cannot parse permutation: {0}")]
    PermutationSyntax(String),
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("too large ({0} elements); request generators only")]
    TooManyElements(String),
    #[error("subset is not invariant under the group")]
    NotInvariant,
    #[error("generator supports overlap")]
    OverlappingSupport,
    #[error("{0} is not a feasible edge-replacement")]
    NotFeasible(String),
    #[error("copy budget exceeded: {needed} states, budget {budget}")]
    BudgetExceeded { needed: String, budget: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("permutation moves shared index {0}")]
    MovesSharedIndex(usize),
    #[error("permutation does not stabilize the expansion index set")]
    NotStabilizing,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
