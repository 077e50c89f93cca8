//! Modules, comodules and the correspondence between them.

use crate::exactla::{Accumulator, Scalar, SparseMatrix, SparseVec};
use crate::hopf::HopfAlgebra;
use crate::report::{Check, ValidationReport, Witness};
use crate::HopfError;

/// A left module: `action[t]` is the matrix of `e_t ·`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    pub dim: usize,
    pub action: Vec<SparseMatrix>,
}

impl HModule {
    pub fn new(dim: usize, action: Vec<SparseMatrix>) -> Self {
        assert!(action.iter().all(|m| m.rows() == dim && m.cols() == dim));
        HModule { dim, action }
    }

    /// `t · v = ε(t) v`.
    pub fn trivial(h: &HopfAlgebra, dim: usize) -> Self {
        let action = (0..h.dim()).map(|t| SparseMatrix::identity(dim).scale(h.counit(t))).collect();
        HModule { dim, action }
    }

    /// H acting on itself by left multiplication.
    pub fn regular(h: &HopfAlgebra) -> Self {
        let d = h.dim();
        let action = (0..d)
            .map(|t| SparseMatrix::from_columns(d, (0..d).map(|x| h.mul_basis(t, x).clone()).collect()))
            .collect();
        HModule { dim: d, action }
    }

    /// Ĥ with `(t ⇀ f)(z) = f(zt)`.
    pub fn dual_regular(h: &HopfAlgebra) -> Self {
        let d = h.dim();
        let action = (0..d)
            .map(|t| {
                // t ⇀ f^j = Σ_z m_{zt}^j f^z
                let cols = (0..d)
                    .map(|j| SparseVec::from_pairs(d, (0..d).map(|z| (z, h.mul_basis(z, t).get(j)))))
                    .collect();
                SparseMatrix::from_columns(d, cols)
            })
            .collect();
        HModule { dim: d, action }
    }

    pub fn act(&self, t: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, c) in t.iter() {
            acc.add_scaled(&self.action[i].apply(v), c);
        }
        acc.finish(self.dim)
    }

    /// Matrix of `t ·` for an arbitrary element `t`.
    pub fn operator(&self, t: &SparseVec) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.dim, self.dim);
        for (i, c) in t.iter() {
            m = m.add_scaled(&self.action[i], c);
        }
        m
    }

    /// `t · (v ⊗ w) = t₁·v ⊗ t₂·w`, index `v·dim W + w`.
    pub fn tensor(&self, other: &HModule, h: &HopfAlgebra) -> HModule {
        let action = (0..h.dim())
            .map(|t| {
                let mut m = SparseMatrix::zero(self.dim * other.dim, self.dim * other.dim);
                for (a, b, c) in h.coproduct(t) {
                    m = m.add_scaled(&self.action[*a].kron(&other.action[*b]), c);
                }
                m
            })
            .collect();
        HModule { dim: self.dim * other.dim, action }
    }

    pub fn direct_sum(&self, other: &HModule) -> HModule {
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect();
        HModule { dim: self.dim + other.dim, action }
    }

    /// Transports along an invertible `p`: new action `p ρ(t) p^{-1}`.
    pub fn conjugate(&self, p: &SparseMatrix, p_inv: &SparseMatrix) -> HModule {
        let action = self.action.iter().map(|a| p.compose(a).compose(p_inv)).collect();
        HModule { dim: self.dim, action }
    }

    /// Invariant vectors `{v : t·v = ε(t)v}`.
    pub fn invariants(&self, h: &HopfAlgebra) -> crate::exactla::Subspace {
        let mut rows = Vec::new();
        for t in 0..h.dim() {
            let m = self.action[t].sub(&SparseMatrix::identity(self.dim).scale(h.counit(t)));
            rows.extend(m.row_vectors());
        }
        crate::exactla::kernel_of_rows(self.dim, rows)
    }
}

/// Associativity and unitality of the action.
pub fn validate_module(h: &HopfAlgebra, v: &HModule) -> ValidationReport {
    let mut rep = ValidationReport::new("module");
    let d = h.dim();
    if v.action.len() != d {
        rep.push(Check::fail(
            "shape",
            Witness::new(vec![], format!("{} action matrices", v.action.len()), format!("{d}")),
        ));
        return rep;
    }
    let mut w = None;
    'a: for s in 0..d {
        for t in 0..d {
            let l = v.operator(h.mul_basis(s, t));
            let r = v.action[s].compose(&v.action[t]);
            if l != r {
                let col = (0..v.dim).find(|&j| l.column(j) != r.column(j)).unwrap_or(0);
                w = Some(Witness::new(
                    vec![s, t, col],
                    format!("{:?}", l.column(col)),
                    format!("{:?}", r.column(col)),
                ));
                break 'a;
            }
        }
    }
    rep.push(Check::from_witness("action_associative", w));
    let one = v.operator(&h.one());
    let w = (one != SparseMatrix::identity(v.dim)).then(|| Witness::new(vec![], "rho(1)", "identity"));
    rep.push(Check::from_witness("action_unital", w));
    rep
}

/// A right comodule `η: V → V ⊗ H`, stored as a matrix with row index `v·d + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComodule {
    pub dim: usize,
    pub coaction: SparseMatrix,
}

impl HComodule {
    pub fn trivial(h: &HopfAlgebra, dim: usize) -> Self {
        let d = h.dim();
        let one = h.one();
        let cols = (0..dim)
            .map(|v| SparseVec::from_pairs(dim * d, one.iter().map(|(i, c)| (v * d + i, c.clone()))))
            .collect();
        HComodule { dim, coaction: SparseMatrix::from_columns(dim * d, cols) }
    }

    /// `η(v ⊗ w) = v₀ ⊗ w₀ ⊗ v₁w₁`.
    pub fn tensor(&self, other: &HComodule, h: &HopfAlgebra) -> HComodule {
        let d = h.dim();
        let (m, n) = (self.dim, other.dim);
        let cols = (0..m * n)
            .map(|p| {
                let (v, w) = (p / n, p % n);
                let mut acc = Accumulator::new();
                for (q, c) in self.coaction.column(v).iter() {
                    for (r, c2) in other.coaction.column(w).iter() {
                        let (v0, v1) = (q / d, q % d);
                        let (w0, w1) = (r / d, r % d);
                        for (k, c3) in h.mul_basis(v1, w1).iter() {
                            acc.add((v0 * n + w0) * d + k, &(c * c2) * c3);
                        }
                    }
                }
                acc.finish(m * n * d)
            })
            .collect();
        HComodule { dim: m * n, coaction: SparseMatrix::from_columns(m * n * d, cols) }
    }
}

/// Coassociativity and counitality.
pub fn validate_comodule(h: &HopfAlgebra, c: &HComodule) -> ValidationReport {
    let d = h.dim();
    let m = c.dim;
    let mut rep = ValidationReport::new("comodule");
    let mut w = None;
    let mut wc = None;
    for v in 0..m {
        let eta = c.coaction.column(v);
        let mut l = Accumulator::new();
        let mut r = Accumulator::new();
        let mut cu = Accumulator::new();
        for (q, x) in eta.iter() {
            let (v0, i) = (q / d, q % d);
            for (p, y) in c.coaction.column(v0).iter() {
                l.add(p * d + i, x * y);
            }
            for (a, b, y) in h.coproduct(i) {
                r.add((v0 * d + a) * d + b, x * y);
            }
            cu.add(v0, x * h.counit(i));
        }
        let (l, r) = (l.finish(m * d * d), r.finish(m * d * d));
        if l != r && w.is_none() {
            w = Some(Witness::new(vec![v], format!("{l:?}"), format!("{r:?}")));
        }
        let cu = cu.finish(m);
        if cu != SparseVec::unit(m, v) && wc.is_none() {
            wc = Some(Witness::new(vec![v], format!("{cu:?}"), format!("e{v}")));
        }
    }
    rep.push(Check::from_witness("coassociative", w));
    rep.push(Check::from_witness("counital", wc));
    rep
}

/// A module over Ĥ (indexed by the dual basis `f^i`) becomes an H-comodule:
/// `η(v) = Σ_i (f^i · v) ⊗ e_i`.
pub fn module_to_comodule(h: &HopfAlgebra, v: &HModule) -> Result<HComodule, HopfError> {
    let d = h.dim();
    if v.action.len() != d {
        return Err(HopfError::Structure("module is not over the dual of this Hopf algebra".into()));
    }
    let unit = v.operator(&SparseVec::from_dense(h.counit_vec()));
    if unit != SparseMatrix::identity(v.dim) {
        return Err(HopfError::Structure("action is not unital".into()));
    }
    let cols = (0..v.dim)
        .map(|j| {
            let mut pairs = Vec::new();
            for i in 0..d {
                for (r, c) in v.action[i].column(j).iter() {
                    pairs.push((r * d + i, c.clone()));
                }
            }
            SparseVec::from_pairs(v.dim * d, pairs)
        })
        .collect();
    Ok(HComodule { dim: v.dim, coaction: SparseMatrix::from_columns(v.dim * d, cols) })
}

/// Inverse of [`module_to_comodule`]: `f · v = v₀ f(v₁)`.
pub fn comodule_to_module(h: &HopfAlgebra, c: &HComodule) -> HModule {
    let d = h.dim();
    let action = (0..d)
        .map(|i| {
            let cols = (0..c.dim)
                .map(|v| {
                    SparseVec::from_pairs(
                        c.dim,
                        c.coaction.column(v).iter().filter(|(q, _)| q % d == i).map(|(q, x)| (q / d, x.clone())),
                    )
                })
                .collect();
            SparseMatrix::from_columns(c.dim, cols)
        })
        .collect();
    HModule { dim: c.dim, action }
}

/// `α_l(x ⊗ v) = x₁ ⊗ S(x₂)·v` on `H ⊗ V`, index `x·dim V + v`.
pub fn alpha_l(h: &HopfAlgebra, v: &HModule) -> SparseMatrix {
    let (d, m) = (h.dim(), v.dim);
    let cols = (0..d * m)
        .map(|p| {
            let (x, w) = (p / m, p % m);
            let mut acc = Accumulator::new();
            for (a, b, c) in h.coproduct(x) {
                let sv = v.act(h.s_basis(*b), &SparseVec::unit(m, w));
                for (r, y) in sv.iter() {
                    acc.add(a * m + r, c * y);
                }
            }
            acc.finish(d * m)
        })
        .collect();
    SparseMatrix::from_columns(d * m, cols)
}

/// `α_r(v ⊗ x) = S^{-1}(x₁)·v ⊗ x₂` on `V ⊗ H`, index `v·d + x`.
pub fn alpha_r(h: &HopfAlgebra, v: &HModule) -> SparseMatrix {
    let (d, m) = (h.dim(), v.dim);
    let cols = (0..m * d)
        .map(|p| {
            let (w, x) = (p / d, p % d);
            let mut acc = Accumulator::new();
            for (a, b, c) in h.coproduct(x) {
                let sv = v.act(h.sinv_basis(*a), &SparseVec::unit(m, w));
                for (r, y) in sv.iter() {
                    acc.add(r * d + b, c * y);
                }
            }
            acc.finish(m * d)
        })
        .collect();
    SparseMatrix::from_columns(m * d, cols)
}

/// Checks that `α_l`, `α_r` are H-linear bijections onto the trivialized modules.
pub fn alpha_report(h: &HopfAlgebra, v: &HModule) -> ValidationReport {
    let mut rep = ValidationReport::new("alpha");
    let reg = HModule::regular(h);
    let triv = HModule::trivial(h, v.dim);
    let hv = reg.tensor(v, h);
    let hvt = reg.tensor(&triv, h);
    let vh = v.tensor(&reg, h);
    let vth = triv.tensor(&reg, h);
    for (name, a, src, dst) in [("alpha_l", alpha_l(h, v), &hv, &hvt), ("alpha_r", alpha_r(h, v), &vh, &vth)] {
        let w = (0..h.dim()).find_map(|t| {
            let l = a.compose(&src.action[t]);
            let r = dst.action[t].compose(&a);
            (l != r).then(|| Witness::new(vec![t], "alpha(t.z)", "t.alpha(z)"))
        });
        rep.push(Check::from_witness(format!("{name}_linear"), w));
        let rank = a.rank();
        let w = (rank != a.cols()).then(|| Witness::new(vec![], format!("rank {rank}"), format!("rank {}", a.cols())));
        rep.push(Check::from_witness(format!("{name}_bijective"), w));
    }
    rep
}

/// A deterministic pseudo-random invertible matrix and its inverse: a random
/// permutation followed by `dim` random transvections, so entries stay small.
pub fn random_invertible(dim: usize, seed: u64) -> (SparseMatrix, SparseMatrix) {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..dim).collect();
    perm.shuffle(&mut rng);
    let mut p = crate::exactla::Matrix::zeros(dim, dim);
    let mut p_inv = crate::exactla::Matrix::zeros(dim, dim);
    for (j, &i) in perm.iter().enumerate() {
        p.set(i, j, Scalar::one());
        p_inv.set(j, i, Scalar::one());
    }
    if dim > 1 {
        for _ in 0..dim {
            let i = rng.gen_range(0..dim);
            let j = (i + rng.gen_range(1..dim)) % dim;
            let c = Scalar::from_int([-2, -1, 1, 2][rng.gen_range(0..4)]);
            // p ← (1 + c e_ij) p, p⁻¹ ← p⁻¹ (1 − c e_ij)
            for k in 0..dim {
                let x = p.get(j, k) * &c;
                if !x.is_zero() {
                    let y = p.get(i, k) + &x;
                    p.set(i, k, y);
                }
                let x = p_inv.get(k, i) * &c;
                if !x.is_zero() {
                    let y = p_inv.get(k, j) - &x;
                    p_inv.set(k, j, y);
                }
            }
        }
    }
    (SparseMatrix::from_dense(&p), SparseMatrix::from_dense(&p_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::{group_algebra, sweedler, Group};
    use crate::hopf::dual_hopf;

    #[test]
    fn trivial_module_is_trivial_comodule() {
        let h = sweedler();
        let hd = dual_hopf(&h);
        let m = HModule::trivial(&hd, 2);
        let c = module_to_comodule(&h, &m).unwrap();
        assert_eq!(c, HComodule::trivial(&h, 2));
    }

    #[test]
    fn regular_module_of_dual_gives_valid_comodule() {
        let h = sweedler();
        let hd = dual_hopf(&h);
        let m = HModule::regular(&hd);
        assert!(validate_module(&hd, &m).all_passed());
        let c = module_to_comodule(&h, &m).unwrap();
        assert!(validate_comodule(&h, &c).all_passed());
        assert_eq!(comodule_to_module(&h, &c), m);
    }

    #[test]
    fn dual_regular_is_a_module() {
        let h = sweedler();
        assert!(validate_module(&h, &HModule::dual_regular(&h)).all_passed());
    }

    #[test]
    fn alpha_maps_on_c2() {
        let h = group_algebra(&Group::cyclic(2));
        assert!(alpha_report(&h, &HModule::regular(&h)).all_passed());
    }
}
