//! The dual Hopf algebra Ĥ in the dual basis `f^i`.

use crate::exactla::Tensor3;

use super::{HopfAlgebra, HopfData};

/// Ĥ with `f^i f^j = Σ_k Δ_k^{ij} f^k`, `Δ̂(f^k) = Σ m_{ij}^k f^i ⊗ f^j`,
/// unit ε, counit `f ↦ f(1)` and antipode `Sᵀ`.
pub fn dual_data(h: &HopfAlgebra) -> HopfData {
    let data = h.data();
    let d = data.dim;
    let mult = Tensor3::from_fn(d, d, d, |i, j, k| data.comult.get(k, i, j).clone());
    let comult = Tensor3::from_fn(d, d, d, |k, i, j| data.mult.get(i, j, k).clone());
    HopfData {
        name: format!("dual({})", data.name),
        field: data.field,
        dim: d,
        mult,
        unit: data.counit.clone(),
        comult,
        counit: data.unit.clone(),
        antipode: data.antipode.transpose(),
    }
}

/// The dual is a Hopf algebra whenever `h` is, so it is wrapped without revalidation.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    HopfAlgebra::new_unchecked(dual_data(h))
}
