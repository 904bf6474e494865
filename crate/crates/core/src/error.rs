use thiserror::Error;

use crate::vertex_set::MAX_VERTICES;

/// Errors raised while reading the `.gg` graph format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate vertex `{id}`")]
    DuplicateVertex { line: usize, id: String },
    #[error("line {line}: edge endpoint `{id}` is not a declared vertex")]
    UndeclaredVertex { line: usize, id: String },
    #[error("line {line}: vertex `{id}` has order {order}, vertex groups need order at least 2")]
    InvalidOrder { line: usize, id: String, order: u64 },
    #[error("line {line}: self-loop on `{id}`")]
    SelfLoop { line: usize, id: String },
    #[error("line {line}: graphs are limited to {MAX_VERTICES} vertices")]
    TooManyVertices { line: usize },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match *self {
            ParseError::Syntax { line, .. }
            | ParseError::DuplicateVertex { line, .. }
            | ParseError::UndeclaredVertex { line, .. }
            | ParseError::InvalidOrder { line, .. }
            | ParseError::SelfLoop { line, .. }
            | ParseError::TooManyVertices { line } => line,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("exponent {exponent} of `{vertex}` is outside [0, {order})")]
    InvalidExponent {
        vertex: String,
        exponent: i64,
        order: u32,
    },
    #[error("malformed word token `{0}`")]
    BadToken(String),
    #[error("elements belong to different graph products")]
    GraphMismatch,
    #[error("ball exceeds the cap of {cap} vertices; completed up to radius {radius_reached}")]
    CapExceeded { cap: usize, radius_reached: usize },
    #[error("not an induced square: {0}")]
    NotInducedSquare(String),
    #[error("element `{0}` lies outside the ball")]
    OutsideBall(String),
    #[error("hyperplane {0} has no edge inside the ball")]
    HyperplaneOutsideBall(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
