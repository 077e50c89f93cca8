//! Equivariant differential forms, the Hodge tower, the truncated periodic
//! tensor algebra and the stability trace.

pub mod calculus;
mod equivariant;
mod hodge;
mod stability;
mod suite;
mod tensor;
mod xdiff;


pub use calculus::{FormCalculus, FormSpace};
pub use equivariant::{build_forms, mat_pow, EqCtx, EquivariantForms};
pub use hodge::{hodge_level, x_complex, x_complex_of, HodgeLevel, XComplex};
pub use stability::{stability_trace, twisted_trace_check, StabilityTrace};
pub use suite::{lemma6_suite, matrix_check, validate_forms};
pub use tensor::{ideal_powers, tensor_algebra, validate_tensor_algebra, TruncatedTensorAlgebra};
pub use xdiff::{xdiff_check, xdiff_maps, XDiff};
