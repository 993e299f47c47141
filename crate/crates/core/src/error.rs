use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is a self-loop on vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge} duplicates edge {first} ({u}, {v})")]
    DuplicateEdge {
        edge: usize,
        first: usize,
        u: usize,
        v: usize,
    },
    #[error("edge {edge} references vertex {vertex}, but the graph has {vertex_count} vertices")]
    BadIndex {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("graph is not connected")]
    Disconnected,
    #[error("{kind} weights: expected {expected} entries, found {found}")]
    WeightLength {
        kind: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{kind} weight at index {index} is negative or not finite")]
    InvalidWeight { kind: &'static str, index: usize },
    #[error("not a partition of the edge set: {0}")]
    NotAPartition(String),
    #[error("partition is not coarser than the theta-star partition: edges {e} and {f} are theta-related but lie in different parts")]
    NotCoarser { e: usize, f: usize },
    #[error("bad merge groups: {0}")]
    BadGroup(String),
    #[error("vertices {0:?} do not form a twin class")]
    NotTwinClass(Vec<usize>),
    #[error("bad grid specification: m={m}, n={n} (both must be at least 1)")]
    BadSpec { m: usize, n: usize },
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
