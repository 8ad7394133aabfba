use crate::lattice::Point;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty placement")]
    EmptyPlacement,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("duplicate point {0}")]
    DuplicatePoint(Point),

    #[error("mover {0} is not in the placement")]
    MoverNotInPlacement(Point),

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("invalid trajectory at step {step}: {reason}")]
    InvalidTrajectory { step: usize, reason: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("node cap of {cap} exceeded after {explored} states")]
    NodeCapExceeded { cap: usize, explored: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
