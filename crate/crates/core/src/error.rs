use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed edge: {0}")]
    MalformedEdge(String),

    #[error("rank {rank} out of range for C({n},{r})")]
    RankOutOfRange { rank: usize, n: usize, r: usize },

    /// The canonical walk construction would need a vertex label >= n.
    /// Callers fall back to breadth-first search on the built graph.
    #[error("walk construction needs {needed} labels but the host has only {n}")]
    ConstructionOutOfRange { needed: usize, n: usize },

    /// A guaranteed structure (e.g. a near-perfect matching in a connected
    /// vertex-transitive graph) failed to materialize. Signals a bug or a
    /// violated precondition, never silently accepted.
    #[error("theory violation: {0}")]
    TheoryViolation(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
