use thiserror::Error;

/// Errors produced by the library. Vertex ids in messages are 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("invalid power {k}: must be at least {min}")]
    InvalidK { k: usize, min: usize },

    #[error("vertex sets differ ({left} vs {right} vertices)")]
    VertexSetMismatch { left: usize, right: usize },

    #[error("interval of vertex {vertex} has left endpoint {left} > right endpoint {right}")]
    InvalidInterval {
        vertex: usize,
        left: i64,
        right: i64,
    },

    #[error("coordinate overflow while scaling representation")]
    CoordinateOverflow,

    #[error(
        "representation is not proper: interval of {outer} properly contains interval of {inner}"
    )]
    NotProper { outer: usize, inner: usize },

    #[error("difference constraints are infeasible (negative cycle)")]
    InfeasibleConstraints,

    #[error(
        "representation does not realize the expected graph: pair {u}-{v} is {} in the representation but {} in the expected graph",
        if *.in_representation { "adjacent" } else { "non-adjacent" },
        if *.in_representation { "non-adjacent" } else { "adjacent" }
    )]
    RepresentationMismatch {
        u: usize,
        v: usize,
        in_representation: bool,
    },

    #[error("order is not strict: vertices {0} and {1} are tied")]
    NonStrictOrder(usize, usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
