use thiserror::Error;

/// Errors produced by the exact kernel and the combinatorial modules built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generating function denominator has zero constant term")]
    NonInvertibleDenominator,

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("division is not exact: {0}")]
    NotDivisible(String),

    #[error("graph contains a directed cycle")]
    CyclicGraph,

    #[error("{what} = {got} exceeds the supported maximum {max}")]
    SizeCap {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("invalid alternating sign matrix: {0}")]
    InvalidAsm(String),

    #[error("invalid descending plane partition: {0}")]
    InvalidDpp(String),

    #[error("malformed lattice path system: {0}")]
    MalformedPaths(String),

    #[error("inconsistent six-vertex configuration: {0}")]
    InconsistentEdges(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid blossom tree: {0}")]
    InvalidTree(String),

    #[error("octahedron move not admissible at ({i}, {j})")]
    Inadmissible { i: i64, j: i64 },

    #[error("missing initial data at site ({i}, {j})")]
    MissingInitialData { i: i64, j: i64 },

    #[error("vertex {vertex} out of range for quiver with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
