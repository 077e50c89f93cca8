//! Anti-Yetter-Drinfeld modules over `H` and the algebra `A(H)`.

mod algebra;
mod module;
mod paracomplex;

pub use algebra::{build_ah, c_map, lambda_picture, lambda_report, sandwich, validate_ah, AydAlgebra, LambdaPicture};
pub use module::{
    ah_module_to_ayd, ayd_to_ah_module, hom_ayd, is_ayd_map, random_combination, t_operator, t_report,
    validate_ah_module, validate_ayd, AhModule, AydModule,
};
pub use paracomplex::{validate_paracomplex, validate_paramixed, ParamixedComplex, Paracomplex};
