use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {u}-{v} has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown edge index {0}")]
    UnknownEdge(usize),

    #[error("vertex {vertex} has color {color}, outside the host's {order} vertices")]
    ColorOutOfRange { vertex: usize, color: usize, order: usize },

    #[error("coloring is improper on edge {0}-{1}")]
    ImproperColoring(usize, usize),

    #[error("graph is not bipartite with the given parts: edge {0}-{1} stays inside a part")]
    NotBipartite(usize, usize),

    #[error("part size mismatch: expected {expected}, found {found}")]
    PartSizeMismatch { expected: usize, found: usize },

    #[error("{m} edges exceeds the exact-search cap of {cap} edges")]
    TooLarge { m: usize, cap: usize },

    #[error("certificate failure: {0}")]
    CertificateFailure(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
