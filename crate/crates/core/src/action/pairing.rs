//! Equivariant pairings, the algebras `l(b; A)` and admissible vectors.

use crate::exactla::{Accumulator, Matrix, Scalar, SparseMatrix, SparseVec};
use crate::hopf::{HopfAlgebra, Pontrjagin};
use crate::report::{Check, ValidationReport, Witness};
use crate::HopfError;

use super::halgebra::HAlgebra;
use super::module::HModule;

/// A module `V` with a bilinear form `b`, entry `(v, w)` of `pairing` being `b(e_v, e_w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedSpace {
    pub module: HModule,
    pub pairing: Matrix,
}

impl PairedSpace {
    pub fn new(module: HModule, pairing: Matrix) -> Self {
        assert_eq!((pairing.rows(), pairing.cols()), (module.dim, module.dim));
        PairedSpace { module, pairing }
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn eval(&self, v: &SparseVec, w: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, x) in v.iter() {
            for (j, y) in w.iter() {
                let b = self.pairing.get(i, j);
                if !b.is_zero() {
                    acc += &(&(x * y) * b);
                }
            }
        }
        acc
    }

    /// The one-dimensional trivial module with `b(1,1) = 1`.
    pub fn scalars(h: &HopfAlgebra) -> Self {
        PairedSpace::new(HModule::trivial(h, 1), Matrix::identity(1))
    }

    /// `V = Ĥ` with `(t ⇀ f)(x) = f(xt)` and `β(f, g) = ψ̂(fg)`, where `ψ̂` is
    /// the normalized right Haar functional of Ĥ.
    pub fn beta(h: &HopfAlgebra, pd: &Pontrjagin) -> Self {
        let d = h.dim();
        let mut b = Matrix::zeros(d, d);
        // f^i f^j = Σ_k Δ(e_k)_{ij} f^k, and ψ̂(f^k) is the k-th coordinate of ψ̂ ∈ H.
        for (k, p) in pd.psi_hat.iter() {
            for (i, j, c) in h.coproduct(k) {
                let cur = b.get(*i, *j) + &(c * p);
                b.set(*i, *j, cur);
            }
        }
        PairedSpace::new(HModule::dual_regular(h), b)
    }
}

/// `b(t₁·v, t₂·w) = ε(t) b(v, w)` on basis elements, and `b ≠ 0`.
pub fn validate_pairing(h: &HopfAlgebra, p: &PairedSpace) -> ValidationReport {
    let m = p.dim();
    let mut rep = ValidationReport::new("pairing");
    let mut w = None;
    'eq: for t in 0..h.dim() {
        for v in 0..m {
            for u in 0..m {
                let mut l = Scalar::zero();
                for (t1, t2, c) in h.coproduct(t) {
                    l += &(c * &p.eval(p.module.action[*t1].column(v), p.module.action[*t2].column(u)));
                }
                let r = h.counit(t) * p.pairing.get(v, u);
                if l != r {
                    w = Some(Witness::new(vec![t, v, u], l, r));
                    break 'eq;
                }
            }
        }
    }
    rep.push(Check::from_witness("equivariant", w));
    let nz = !p.pairing.is_zero();
    rep.push(Check::from_witness("nonzero", (!nz).then(|| Witness::new(vec![], "0", "nonzero"))));
    rep
}

/// `l(b; A)` on `V ⊗ A ⊗ V`, index `(v·n + a)·m + w`, with
/// `(v₁⊗a₁⊗w₁)(v₂⊗a₂⊗w₂) = b(w₁, v₂) v₁⊗a₁a₂⊗w₂` and the diagonal action.
pub fn pairing_algebra(h: &HopfAlgebra, p: &PairedSpace, a: &HAlgebra) -> Result<HAlgebra, HopfError> {
    let rep = validate_pairing(h, p);
    if let Some(c) = rep.failures().next() {
        return Err(HopfError::Axiom { name: "pairing".into(), check: Box::new(c.clone()) });
    }
    let (m, n) = (p.dim(), a.dim);
    let dim = m * n * m;
    let idx = |v: usize, x: usize, w: usize| (v * n + x) * m + w;
    let mut prod = Vec::with_capacity(dim * dim);
    for q1 in 0..dim {
        let (v1, a1, w1) = (q1 / (n * m), (q1 / m) % n, q1 % m);
        for q2 in 0..dim {
            let (v2, a2, w2) = (q2 / (n * m), (q2 / m) % n, q2 % m);
            let b = p.pairing.get(w1, v2);
            if b.is_zero() {
                prod.push(SparseVec::zero(dim));
                continue;
            }
            let aa = a.mul_basis(a1, a2);
            prod.push(SparseVec::from_pairs(dim, aa.iter().map(|(k, c)| (idx(v1, k, w2), c * b))));
        }
    }
    let action = (0..h.dim())
        .map(|t| {
            let mut acc = SparseMatrix::zero(dim, dim);
            for (ix, c) in h.iterated_coproduct(t, 3) {
                let op = p.module.action[ix[0]].kron(&a.action[ix[1]]).kron(&p.module.action[ix[2]]);
                acc = acc.add_scaled(&op, &c);
            }
            acc
        })
        .collect();
    Ok(HAlgebra { name: format!("l(b; {})", a.name), dim, prod, unit: None, action })
}

/// `K_H = l(β; ℂ)`.
pub fn k_h(h: &HopfAlgebra, pd: &Pontrjagin) -> Result<HAlgebra, HopfError> {
    let mut k = pairing_algebra(h, &PairedSpace::beta(h, pd), &HAlgebra::scalars(h))?;
    k.name = format!("K_{}", h.name());
    Ok(k)
}

/// The Gram matrix of `b` restricted to the invariant vectors, with the basis used.
pub fn invariant_gram(h: &HopfAlgebra, p: &PairedSpace) -> (Vec<SparseVec>, Matrix) {
    let inv = p.module.invariants(h).basis().to_vec();
    let k = inv.len();
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g.set(i, j, p.eval(&inv[i], &inv[j]));
        }
    }
    (inv, g)
}

/// An invariant `u` with `b(u, u) = 1`, if one is found.
///
/// Candidates are basis vectors of the invariant space, then all integer
/// combinations with coefficients in `-2..=2`. A candidate is accepted when
/// `b(u, u)` has a square root in ℚ or, for rational `b(u, u)`, in a
/// cyclotomic field compatible with the ground field.
pub fn admissible_vector(h: &HopfAlgebra, p: &PairedSpace) -> Option<SparseVec> {
    let (inv, g) = invariant_gram(h, p);
    let k = inv.len();
    if k == 0 {
        return None;
    }
    let try_coeffs = |c: &[i64]| -> Option<SparseVec> {
        let mut q = Scalar::zero();
        for i in 0..k {
            for j in 0..k {
                if c[i] != 0 && c[j] != 0 {
                    q += &(g.get(i, j) * &Scalar::from_int(c[i] * c[j]));
                }
            }
        }
        if q.is_zero() {
            return None;
        }
        let r = q.cyclotomic_sqrt()?;
        let mut acc = Accumulator::new();
        for (i, &ci) in c.iter().enumerate() {
            if ci != 0 {
                acc.add_scaled(&inv[i], &Scalar::from_int(ci));
            }
        }
        Some(acc.finish(p.dim()).scale(&r.inv()))
    };
    for i in 0..k {
        let mut c = vec![0; k];
        c[i] = 1;
        if let Some(u) = try_coeffs(&c) {
            return Some(u);
        }
    }
    // Bounded grid; the number of invariants is small in practice.
    let span = 5usize.checked_pow(k as u32).unwrap_or(usize::MAX).min(1 << 16);
    for code in 0..span {
        let mut c = Vec::with_capacity(k);
        let mut r = code;
        for _ in 0..k {
            c.push((r % 5) as i64 - 2);
            r /= 5;
        }
        if let Some(u) = try_coeffs(&c) {
            return Some(u);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::halgebra::validate_halgebra;
    use crate::hopf::corpus::{group_algebra, sweedler, Group};
    use crate::hopf::normalized_duality;

    #[test]
    fn scalar_pairing_algebra_is_scalars() {
        let h = sweedler();
        let l = pairing_algebra(&h, &PairedSpace::scalars(&h), &HAlgebra::scalars(&h)).unwrap();
        assert_eq!(l.dim, 1);
        assert_eq!(l.mul_basis(0, 0), &SparseVec::unit(1, 0));
    }

    #[test]
    fn beta_is_equivariant_and_kh_validates() {
        for h in [group_algebra(&Group::cyclic(2)), sweedler()] {
            let (_, pd) = normalized_duality(&h).unwrap();
            let p = PairedSpace::beta(&h, &pd);
            assert!(validate_pairing(&h, &p).all_passed());
            let k = k_h(&h, &pd).unwrap();
            let r = validate_halgebra(&h, &k);
            assert!(r.all_passed(), "{r:?}");
        }
    }

    #[test]
    fn non_equivariant_rejected() {
        let h = group_algebra(&Group::cyclic(2));
        let p = PairedSpace::new(HModule::regular(&h), Matrix::from_ints(2, 2, &[1, 0, 0, 0]));
        assert!(pairing_algebra(&h, &p, &HAlgebra::scalars(&h)).is_err());
    }

    #[test]
    fn admissible_scalars() {
        let h = sweedler();
        assert_eq!(admissible_vector(&h, &PairedSpace::scalars(&h)), Some(SparseVec::unit(1, 0)));
    }
}
