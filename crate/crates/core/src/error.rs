use thiserror::Error;

use crate::sign::SignHom;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a simple Lie algebra: {0}")]
    Classification(String),

    #[error("sign homomorphism {sigma} is not defined for simply-laced type {algebra}")]
    UnsupportedHomomorphism { sigma: SignHom, algebra: String },

    #[error("Weyl group of {algebra} has {order} elements, above the ceiling {ceiling}; raise the ceiling to at least {order}")]
    GroupTooLarge {
        algebra: String,
        order: u64,
        ceiling: u64,
    },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("point is outside the fundamental domain: {0}")]
    Domain(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
