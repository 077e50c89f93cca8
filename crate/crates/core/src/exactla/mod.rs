//! Exact linear algebra over ℚ and cyclotomic fields.

mod echelon;
mod matrix;
mod scalar;
mod sparse;
mod tensor;

pub use echelon::{kernel_image_quotient, kernel_of_rows, rank, solve_linear, solve_rows, AffineSpace, KernelImageQuotient, Quotient, Subspace};
pub use matrix::Matrix;
pub use scalar::{cyclotomic_polynomial, FieldSpec, Scalar};
pub use sparse::{Accumulator, SparseMatrix, SparseVec};
pub use tensor::{tensor_contract, Slot, Tensor3};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("invalid cyclotomic order {0}")]
    InvalidField(u32),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
}
