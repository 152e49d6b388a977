use thiserror::Error;

/// Errors raised by graph construction, parsing, solvers and reductions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("vertex {vertex} has degree {degree}, exceeding the bound B = {bound}")]
    DegreeBound {
        vertex: usize,
        degree: usize,
        bound: usize,
    },

    #[error("invalid two-coloring: edge {{{0}, {1}}} is monochromatic")]
    InvalidColoring(usize, usize),

    #[error("not a matching: vertex {0} is matched twice")]
    NotAMatching(usize),

    #[error("not a vertex cover: edge {{{0}, {1}}} is uncovered")]
    NotACover(usize, usize),

    #[error("vertex set is not capacity-feasible")]
    CapacityInfeasible,

    #[error("not a dominating set: vertex {0} is undominated")]
    NotDominating(usize),

    #[error("not an edge bipartization: graph minus the edge set still has an odd cycle")]
    InvalidBipartization,

    #[error("size limit exceeded: {what} = {value} > {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("structural check failed: {0}")]
    Structure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
