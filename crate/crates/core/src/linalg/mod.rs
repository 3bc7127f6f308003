//! Exact linear algebra over the rationals and prime fields.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::{Matrix, Subspace};
pub use scalar::{Field, Rational, Residue, Scalar};
pub use tensor::{kron_all, permutation, swap, TensorIndex};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("matrix is not invertible (rank {rank})")]
    NotInvertible { rank: usize },
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("cannot parse coefficient {0:?}")]
    BadScalar(String),
    #[error("empty block list")]
    Empty,
}
