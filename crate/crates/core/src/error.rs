use thiserror::Error;

/// Errors raised by graph construction, parsing and the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph JSON: {0}")]
    Json(String),

    #[error("edge [{u}, {v}] has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge [{0}, {1}]")]
    DuplicateEdge(usize, usize),

    #[error("two arcs on the vertex pair [{0}, {1}]")]
    OpposingArcs(usize, usize),

    #[error("directed cycle {}", join_walk(.0))]
    DirectedCycle(Vec<usize>),

    /// `size` is `usize::MAX` when the count overflows.
    #[error("{what} would have {} vertices, above the cap of {cap}", vertex_count(*.size))]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("coloring is not proper: edge [{0}, {1}] is monochromatic")]
    ImproperColoring(usize, usize),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("orientation leaves edge [{0}, {1}] unset")]
    PartialOrientation(usize, usize),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn vertex_count(size: usize) -> String {
    if size == usize::MAX {
        "more than usize::MAX".into()
    } else {
        size.to_string()
    }
}

fn join_walk(walk: &[usize]) -> String {
    walk.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("->")
}
