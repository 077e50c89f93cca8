//! Modules, comodules, H-algebras, crossed products and duality.

mod halgebra;
mod module;
mod pairing;
mod taktak;

pub use halgebra::{corrupt_action, crossed_product, strictly_upper_2x2, unitarize, validate_halgebra, HAlgebra};
pub use module::{
    alpha_l, alpha_r, alpha_report, comodule_to_module, module_to_comodule, random_invertible, validate_comodule,
    validate_module, HComodule, HModule,
};
pub use pairing::{admissible_vector, invariant_gram, k_h, pairing_algebra, validate_pairing, PairedSpace};
pub use taktak::{gamma_matrix, s2_twisted, takesaki_takai, GammaForm, TakesakiTakai};
