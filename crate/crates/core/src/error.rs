//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) is not present in the graph")]
    MissingEdge(usize, usize),

    #[error("vertex {0} is out of range")]
    MissingVertex(usize),

    #[error("vertex set is not a subset of the graph's vertices")]
    BadSubset,

    #[error("matching of {t} edges does not fit in {n} vertices")]
    MatchingTooLarge { n: usize, t: usize },

    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid construction parameters: {0}")]
    BadParams(String),

    #[error("graph is not uniquely colorable: {0}")]
    NotUnique(String),

    #[error("no copy of the pattern in class {class} extended by vertex {vertex}; the uniqueness hypothesis fails here")]
    NoCopy { class: usize, vertex: usize },

    #[error("no {k}-class pattern-free partition exists")]
    BadK { k: usize },

    #[error("graph has no edges")]
    NoEdges,

    #[error("input line {line}: {reason}")]
    StreamParse { line: usize, reason: String },

    #[error("graph order {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("unknown check name: {0}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
