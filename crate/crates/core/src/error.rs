use thiserror::Error;

use crate::graph::Graph;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {vertex}{}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
    Loop { vertex: usize, line: Option<usize> },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// The peel reached a nonempty subgraph with no admissible reduction.
    #[error("peel stuck on a {}-vertex subgraph with {} edges", witness.vertex_count(), witness.edge_count())]
    Stuck {
        /// The stuck subgraph, relabelled `0..k`.
        witness: Graph,
        /// Host vertex ids of the witness vertices.
        vertices: Vec<usize>,
    },

    /// None of the three dichotomy outcomes holds, so the supplied density
    /// bounds are wrong for this graph.
    #[error("density preconditions refuted for s={s}, t={t}, light bound {light_bound}")]
    PreconditionRefuted {
        graph: Graph,
        s: usize,
        t: usize,
        light_bound: i64,
    },

    #[error("quotient colouring diagnostic: {0}")]
    KellDiagnostic(String),

    #[error("edge partition failed: {0}")]
    PartitionFailed(String),

    #[error("interval too wide to decide: {0}")]
    Precision(String),

    #[error("internal verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors that carry a witness refuting a structural precondition,
    /// as opposed to malformed input or usage problems.
    pub fn is_structural(&self) -> bool {
        matches!(
            self,
            Error::Stuck { .. }
                | Error::PreconditionRefuted { .. }
                | Error::KellDiagnostic(_)
                | Error::PartitionFailed(_)
                | Error::Verification(_)
        )
    }
}
