//! Haar functionals and modular elements.

use serde::Serialize;

use crate::exactla::{kernel_of_rows, Matrix, Scalar, SparseVec, Subspace};
use crate::HopfError;

use super::{dual_hopf, HopfAlgebra};

/// A linear functional on H, stored by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub coords: Vec<Scalar>,
}

impl Functional {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Functional { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn eval(&self, x: &SparseVec) -> Scalar {
        x.dot_dense(&self.coords)
    }

    pub fn at(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    /// `x ↦ self(M x)`.
    pub fn compose(&self, m: &Matrix) -> Functional {
        Functional { coords: m.transpose().mul_vec(&self.coords) }
    }

    pub fn scale(&self, c: &Scalar) -> Functional {
        Functional { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// The same coordinates read as an element of the dual algebra.
    pub fn as_element(&self) -> SparseVec {
        SparseVec::from_dense(&self.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

/// Space of left invariant functionals: `(id ⊗ φ)Δ(x) = φ(x)1`.
pub fn left_invariant_space(h: &HopfAlgebra) -> Subspace {
    let d = h.dim();
    let one = h.one();
    let mut rows = Vec::with_capacity(d * d);
    for k in 0..d {
        for i in 0..d {
            let mut pairs: Vec<(usize, Scalar)> = h
                .coproduct(k)
                .iter()
                .filter(|(a, _, _)| *a == i)
                .map(|(_, j, c)| (*j, c.clone()))
                .collect();
            let u = one.get(i);
            if !u.is_zero() {
                pairs.push((k, -u));
            }
            rows.push(SparseVec::from_pairs(d, pairs));
        }
    }
    kernel_of_rows(d, rows)
}

/// Space of right invariant functionals: `(ψ ⊗ id)Δ(x) = ψ(x)1`.
pub fn right_invariant_space(h: &HopfAlgebra) -> Subspace {
    let d = h.dim();
    let one = h.one();
    let mut rows = Vec::with_capacity(d * d);
    for k in 0..d {
        for j in 0..d {
            let mut pairs: Vec<(usize, Scalar)> = h
                .coproduct(k)
                .iter()
                .filter(|(_, b, _)| *b == j)
                .map(|(i, _, c)| (*i, c.clone()))
                .collect();
            let u = one.get(j);
            if !u.is_zero() {
                pairs.push((k, -u));
            }
            rows.push(SparseVec::from_pairs(d, pairs));
        }
    }
    kernel_of_rows(d, rows)
}

/// The Gram matrix `(i, j) ↦ φ(e_i e_j)`.
pub fn gram(h: &HopfAlgebra, phi: &Functional) -> Matrix {
    let d = h.dim();
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            m.set(i, j, phi.eval(h.mul_basis(i, j)));
        }
    }
    m
}

/// Normalized so the first nonzero coordinate is 1.
pub fn left_integral(h: &HopfAlgebra) -> Result<Functional, HopfError> {
    let space = left_invariant_space(h);
    if space.dim() != 1 {
        return Err(HopfError::NoUniqueHaar(space.dim()));
    }
    // The echelon basis vector already has leading coefficient 1.
    let phi = Functional::new(space.basis()[0].to_dense());
    if !gram(h, &phi).is_invertible() {
        return Err(HopfError::NotFaithful);
    }
    Ok(phi)
}

/// `δ` with `(φ ⊗ id)Δ(x) = φ(x)δ`.
pub fn modular_element(h: &HopfAlgebra, phi: &Functional) -> Result<SparseVec, HopfError> {
    let d = h.dim();
    let lhs = |k: usize| {
        SparseVec::from_pairs(
            d,
            h.coproduct(k).iter().map(|(i, j, c)| (*j, c * phi.at(*i))),
        )
    };
    let k0 = (0..d)
        .find(|&k| !phi.at(k).is_zero())
        .ok_or_else(|| HopfError::Inconsistent("zero Haar functional".into()))?;
    let delta = lhs(k0).scale(&phi.at(k0).inv());
    for k in 0..d {
        if lhs(k) != delta.scale(phi.at(k)) {
            return Err(HopfError::Inconsistent(format!("modular element fails at basis {k}")));
        }
    }
    Ok(delta)
}

#[derive(Clone, Debug)]
pub struct HaarData {
    pub phi: Functional,
    pub psi: Functional,
    pub delta: SparseVec,
    pub delta_inv: SparseVec,
    /// Modular element of Ĥ, a functional on H.
    pub delta_hat: Functional,
    /// `δ̂ ∘ S`.
    pub delta_hat_inv: Functional,
    /// Left integral of Ĥ, an element of H under the canonical pairing.
    pub phi_hat: SparseVec,
}

#[derive(Clone, Debug, Serialize)]
pub struct HaarSummary {
    pub phi: Vec<Vec<String>>,
    pub psi: Vec<Vec<String>>,
    pub delta: Vec<Vec<String>>,
    pub delta_hat: Vec<Vec<String>>,
    pub unimodular: bool,
    pub dual_unimodular: bool,
}

fn strings(v: &[Scalar]) -> Vec<Vec<String>> {
    v.iter().map(Scalar::to_exact_strings).collect()
}

impl HaarData {
    pub fn summary(&self, h: &HopfAlgebra) -> HaarSummary {
        HaarSummary {
            phi: strings(&self.phi.coords),
            psi: strings(&self.psi.coords),
            delta: strings(&self.delta.to_dense()),
            delta_hat: strings(&self.delta_hat.coords),
            unimodular: self.delta == h.one(),
            dual_unimodular: self.delta_hat.coords == h.counit_vec(),
        }
    }
}

/// Full Haar data; every invariant is asserted.
pub fn haar_data(h: &HopfAlgebra) -> Result<HaarData, HopfError> {
    let phi = left_integral(h)?;
    let psi = phi.compose(h.antipode_inv_matrix());
    let delta = modular_element(h, &phi)?;
    let delta_inv = h.s(&delta);
    let one = h.one();
    let inc = |m: &str| Err(HopfError::Inconsistent(m.to_string()));
    if !right_invariant_space(h).contains(&SparseVec::from_dense(&psi.coords)) {
        return inc("phi composed with the inverse antipode is not right invariant");
    }
    if h.mul(&delta, &delta_inv) != one || h.mul(&delta_inv, &delta) != one {
        return inc("S(delta) is not the inverse of delta");
    }
    if h.sinv(&delta) != delta_inv {
        return inc("S(delta) differs from S^{-1}(delta)");
    }
    if !h.is_grouplike(&delta) {
        return inc("delta is not group-like");
    }
    let dual = dual_hopf(h);
    let phi_hat_f = left_integral(&dual)?;
    let dh = modular_element(&dual, &phi_hat_f)?;
    let delta_hat = Functional::new(dh.to_dense());
    let delta_hat_inv = delta_hat.compose(h.antipode_matrix());
    if dual.mul(&dh, &delta_hat_inv.as_element()) != dual.one() {
        return inc("delta-hat composed with S is not its inverse");
    }
    Ok(HaarData { phi, psi, delta, delta_inv, delta_hat, delta_hat_inv, phi_hat: phi_hat_f.as_element() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::{function_algebra, group_algebra, sweedler, trivial, Group};

    #[test]
    fn trivial_haar() {
        let h = trivial();
        let hd = haar_data(&h).unwrap();
        assert!(hd.phi.at(0).is_one());
        assert_eq!(hd.delta, h.one());
    }

    #[test]
    fn c2_haar_is_coefficient_of_identity() {
        let h = group_algebra(&Group::cyclic(2));
        let phi = left_integral(&h).unwrap();
        assert_eq!(phi.coords, vec![Scalar::one(), Scalar::zero()]);
    }

    #[test]
    fn function_algebra_haar_sums_points() {
        let h = function_algebra(&Group::cyclic(3));
        let phi = left_integral(&h).unwrap();
        assert_eq!(phi.coords, vec![Scalar::one(); 3]);
        assert!(right_invariant_space(&h).contains(&phi.as_element()));
    }

    #[test]
    fn s3_haar_is_a_trace() {
        let h = group_algebra(&Group::symmetric3());
        let hd = haar_data(&h).unwrap();
        assert_eq!(hd.delta, h.one());
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(hd.phi.eval(h.mul_basis(i, j)), hd.phi.eval(h.mul_basis(j, i)));
            }
        }
    }

    #[test]
    fn sweedler_modular_elements_nontrivial() {
        let h = sweedler();
        let hd = haar_data(&h).unwrap();
        assert_ne!(hd.delta, h.one());
        assert!(h.is_grouplike(&hd.delta));
        assert!(h.eps(&hd.delta).is_one());
        assert_ne!(hd.delta_hat.coords, h.counit_vec());
    }
}
