//! Exact computations with finite-dimensional Hopf algebras, their actions,
//! anti-Yetter-Drinfeld modules and equivariant differential forms.

mod error;
pub mod exactla;
pub mod action;
pub mod ayd;
pub mod forms;
pub mod homology;
pub mod hopf;
pub mod report;

pub use error::HopfError;
pub use exactla::{FieldSpec, Matrix, Scalar, SparseMatrix, SparseVec, Subspace};
pub use hopf::{HopfAlgebra, HopfData};
pub use report::{Check, ValidationReport, Verdict, Witness};
