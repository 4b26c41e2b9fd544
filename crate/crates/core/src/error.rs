use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has an empty part (p={p}, q={q})")]
    EmptyPart { p: usize, q: usize },

    #[error("edge {0} already present")]
    EdgeConflict(String),

    #[error("invalid degree set: {0}")]
    InvalidDegreeSet(String),

    #[error("invalid reduction parameters: {0}")]
    InvalidReduction(String),

    #[error("negative entry {0} in an unsigned degree sequence")]
    NegativeEntry(i64),

    #[error("enumeration too large: {0}")]
    ResourceGuard(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
