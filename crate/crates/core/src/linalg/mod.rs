//! Exact dense linear algebra over integers and rationals.

mod matrix;
mod snf;
mod symplectic;

pub use matrix::{Field, Matrix, Scalar};
pub use snf::{smith_normal_form, SmithForm};
pub use symplectic::{is_symplectic, SymplecticForm};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("matrix of shape {0:?} is not square")]
    NotSquare((usize, usize)),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has non-integral entries")]
    NotIntegral,
}
