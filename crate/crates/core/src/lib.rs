//! Exact structure-constant computations for finite-dimensional
//! quasitriangular Hopf algebras: module and Yetter-Drinfeld categories,
//! transmutation, braided Galois objects and Azumaya algebras.
//!
//! Every object is a bundle of matrices over [`linalg::Field`]; every law is
//! checked as an exact matrix identity and reported as a [`report::Check`].

pub mod brauer;
pub mod examples;
pub mod format;
pub mod galois;
pub mod hopf;
pub mod linalg;
pub mod modules;
pub mod pipeline;
pub mod qt;
pub mod report;
pub mod suite;
pub mod transmutation;
pub mod yd;

use thiserror::Error;

pub use linalg::{Field, LinalgError, Matrix, Scalar, Subspace};
pub use report::{Check, Report, Status, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("{what} does not hold{}", witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default())]
    Verification { what: String, witness: Option<Witness> },
    #[error("antipode is singular (rank {rank})")]
    SingularAntipode { rank: usize },
    #[error("no R-matrix supplied")]
    MissingR,
    #[error("not Galois: canonical map has rank {rank}, needs {needed}")]
    NotGalois { rank: usize, needed: usize },
    #[error("not Azumaya: {map} has rank {rank}, needs {needed}")]
    NotAzumaya { map: &'static str, rank: usize, needed: usize },
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no object named {0:?}")]
    UnknownObject(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
