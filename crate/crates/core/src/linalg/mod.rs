//! Exact linear algebra over ℚ.
//!
//! Matrices are stored sparsely and reduced with fraction-free integer
//! elimination, so every rank, kernel vector and cohomology dimension is
//! exact. Nothing in here uses floating point.

mod complex;
mod elim;
mod matrix;
mod rational;

pub use complex::{cohomology_dim, induced_cohomology_rank, CochainComplex};
pub use elim::{kernel_basis, rank};
pub use matrix::SparseMatrix;
pub use rational::{parse_rational, rat, ParseRationalError, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {context}")]
    Shape { context: &'static str },
    #[error("composite of consecutive differentials is nonzero at level {level}")]
    CompositeNonzero { level: usize },
    #[error("chain map does not commute with the differentials at level {level}")]
    NotChainMap { level: usize },
    #[error("index ({row}, {col}) out of bounds for a {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
}
