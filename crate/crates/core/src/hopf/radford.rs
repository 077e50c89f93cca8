//! The formula for S⁴ in terms of the modular elements, and the chain of
//! Fourier identities leading to it.

use crate::exactla::{Accumulator, Matrix, SparseVec};
use crate::report::{Check, ValidationReport, Witness};

use super::fourier::{proportional_check, FourierMaps, Pontrjagin};
use super::haar::{Functional, HaarData};
use super::HopfAlgebra;

/// `f ⇀ x = x₁ f(x₂)`.
pub fn left_harpoon(h: &HopfAlgebra, f: &Functional, x: &SparseVec) -> SparseVec {
    let mut acc = Accumulator::new();
    for (k, c) in x.iter() {
        for (i, j, c2) in h.coproduct(k) {
            acc.add(*i, &(c * c2) * f.at(*j));
        }
    }
    acc.finish(h.dim())
}

/// `x ↼ f = f(x₁) x₂`.
pub fn right_harpoon(h: &HopfAlgebra, x: &SparseVec, f: &Functional) -> SparseVec {
    let mut acc = Accumulator::new();
    for (k, c) in x.iter() {
        for (i, j, c2) in h.coproduct(k) {
            acc.add(*j, &(c * c2) * f.at(*i));
        }
    }
    acc.finish(h.dim())
}

fn operator(h: &HopfAlgebra, f: impl Fn(&SparseVec) -> SparseVec) -> Matrix {
    let d = h.dim();
    let cols: Vec<Vec<_>> = (0..d).map(|j| f(&h.basis(j)).to_dense()).collect();
    Matrix::from_columns(d, &cols)
}

/// Right-hand side `δ^{-1}(δ̂ ⇀ x ↼ δ̂^{-1})δ`.
pub fn radford_rhs(h: &HopfAlgebra, haar: &HaarData, x: &SparseVec) -> SparseVec {
    let y = right_harpoon(h, &left_harpoon(h, &haar.delta_hat, x), &haar.delta_hat_inv);
    h.mul(&h.mul(&haar.delta_inv, &y), &haar.delta)
}

#[derive(Clone, Debug)]
pub struct RadfordResult {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// `S⁴ = id`, in which case the check is only meaningful through δ, δ̂.
    pub s4_is_identity: bool,
}

pub fn radford_check(h: &HopfAlgebra, haar: &HaarData) -> RadfordResult {
    let mut witness = None;
    let mut s4_id = true;
    for k in 0..h.dim() {
        let x = h.basis(k);
        let lhs = h.s_pow(&x, 4);
        s4_id &= lhs == x;
        let rhs = radford_rhs(h, haar, &x);
        if lhs != rhs && witness.is_none() {
            witness = Some(Witness::new(vec![k], format!("{lhs:?}"), format!("{rhs:?}")));
        }
    }
    RadfordResult { holds: witness.is_none(), witness, s4_is_identity: s4_id }
}

/// The up-to-scalar identities between Fourier transforms of H and Ĥ.
pub fn fourier_chain(h: &HopfAlgebra, haar: &HaarData, maps: &FourierMaps, pd: &Pontrjagin) -> ValidationReport {
    let mut rep = ValidationReport::new("fourier_chain");
    let s = h.antipode_matrix();
    let sinv = h.antipode_inv_matrix();
    let s2 = s.mul(s);
    let lh = operator(h, |x| left_harpoon(h, &haar.delta_hat, x));
    let rh = operator(h, |x| right_harpoon(h, x, &haar.delta_hat));
    let rh_inv = operator(h, |x| right_harpoon(h, x, &haar.delta_hat_inv));
    let r_delta = h.right_mul_matrix(&haar.delta);
    let r_delta_inv = h.right_mul_matrix(&haar.delta_inv);
    let l_delta_inv = h.left_mul_matrix(&haar.delta_inv);
    let hat = &pd.dual_maps;

    // S^{-1}(δ̂ ⇀ x) ≡ F̂_l F_l(x)
    rep.push(proportional_check("S^-1(dh -> x) ~ F^_l F_l(x)", &sinv.mul(&lh), &hat.fl.mul(&maps.fl)));
    // F_l(S²x) ≡ F_r(δ̂ ⇀ x)
    rep.push(proportional_check("F_l(S^2 x) ~ F_r(dh -> x)", &maps.fl.mul(&s2), &maps.fr.mul(&lh)));
    // F̂_r F_l(x) ≡ S((xδ^{-1}) ↼ δ̂)
    rep.push(proportional_check(
        "F^_r F_l(x) ~ S((x d^-1) <- dh)",
        &hat.fr.mul(&maps.fl),
        &s.mul(&rh).mul(&r_delta_inv),
    ));
    // F̂_r F_r(S x) ≡ xδ
    rep.push(proportional_check("F^_r F_r(S x) ~ x d", &hat.fr.mul(&maps.fr).mul(s), &r_delta));
    // F_r(S²x) ≡ F_l(δ^{-1}(x ↼ δ̂^{-1})δ)
    rep.push(proportional_check(
        "F_r(S^2 x) ~ F_l(d^-1 (x <- dh^-1) d)",
        &maps.fr.mul(&s2),
        &maps.fl.mul(&l_delta_inv).mul(&r_delta).mul(&rh_inv),
    ));
    rep
}

pub fn radford_report(h: &HopfAlgebra, haar: &HaarData) -> ValidationReport {
    let mut rep = ValidationReport::new("radford");
    let r = radford_check(h, haar);
    rep.push(Check::from_witness("S^4 = d^-1 (dh -> x <- dh^-1) d", r.witness));
    rep.push(Check::pass("S^4 is identity").with_value(r.s4_is_identity));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::{group_algebra, sweedler, taft, Group};
    use crate::hopf::fourier::{fourier, pontrjagin};
    use crate::hopf::haar::haar_data;

    #[test]
    fn group_algebra_radford_trivial() {
        let h = group_algebra(&Group::symmetric3());
        let hd = haar_data(&h).unwrap();
        let r = radford_check(&h, &hd);
        assert!(r.holds && r.s4_is_identity);
    }

    #[test]
    fn sweedler_radford() {
        let h = sweedler();
        let hd = haar_data(&h).unwrap();
        let r = radford_check(&h, &hd);
        assert!(r.holds, "{:?}", r.witness);
        assert!(r.s4_is_identity);
    }

    #[test]
    fn taft3_radford_nonvacuous() {
        let h = taft(3);
        let hd = haar_data(&h).unwrap();
        let r = radford_check(&h, &hd);
        assert!(r.holds, "{:?}", r.witness);
        assert!(!r.s4_is_identity);
    }

    #[test]
    fn chain_on_taft3() {
        let h = taft(3);
        let hd = haar_data(&h).unwrap();
        let m = fourier(&h, &hd).unwrap();
        let p = pontrjagin(&h, &hd).unwrap();
        let rep = fourier_chain(&h, &hd, &m, &p);
        assert!(rep.all_passed(), "{rep:#?}");
    }
}
