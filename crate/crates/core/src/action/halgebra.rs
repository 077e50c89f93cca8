//! Algebras with an H-action, unitarization and crossed products.

use crate::exactla::{Accumulator, Scalar, SparseMatrix, SparseVec};
use crate::hopf::{dual_hopf, HopfAlgebra};
use crate::report::{Check, ValidationReport, Witness};

use super::module::{validate_module, HModule};

/// An algebra `A` with basis `a_i`, products `prod[i·n + j] = a_i a_j`, and
/// an action of some Hopf algebra given by one matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HAlgebra {
    pub name: String,
    pub dim: usize,
    pub prod: Vec<SparseVec>,
    pub unit: Option<SparseVec>,
    pub action: Vec<SparseMatrix>,
}

impl HAlgebra {
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.prod[i * self.dim + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&self.prod[i * self.dim + j], &(x * y));
            }
        }
        acc.finish(self.dim)
    }

    pub fn act(&self, t: &SparseVec, a: &SparseVec) -> SparseVec {
        self.module().act(t, a)
    }

    pub fn act_basis(&self, t: usize, a: usize) -> &SparseVec {
        self.action[t].column(a)
    }

    pub fn module(&self) -> HModule {
        HModule::new(self.dim, self.action.clone())
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    /// The one-dimensional algebra ℂ with the trivial action.
    pub fn scalars(h: &HopfAlgebra) -> Self {
        HAlgebra {
            name: "C".into(),
            dim: 1,
            prod: vec![SparseVec::unit(1, 0)],
            unit: Some(SparseVec::unit(1, 0)),
            action: HModule::trivial(h, 1).action,
        }
    }

    /// The underlying algebra of `k` with the trivial action of `h`.
    pub fn from_hopf_trivial(k: &HopfAlgebra, h: &HopfAlgebra) -> Self {
        let n = k.dim();
        HAlgebra {
            name: k.name().to_string(),
            dim: n,
            prod: (0..n * n).map(|p| k.mul_basis(p / n, p % n).clone()).collect(),
            unit: Some(k.one()),
            action: HModule::trivial(h, n).action,
        }
    }

    /// Ĥ with its convolution product and the action `(t ⇀ f)(z) = f(zt)`.
    pub fn dual_regular(h: &HopfAlgebra) -> Self {
        let dual = dual_hopf(h);
        let n = h.dim();
        HAlgebra {
            name: format!("dual({})", h.name()),
            dim: n,
            prod: (0..n * n).map(|p| dual.mul_basis(p / n, p % n).clone()).collect(),
            unit: Some(dual.one()),
            action: HModule::dual_regular(h).action,
        }
    }

    /// Replaces the action by that of another Hopf algebra.
    pub fn with_action(mut self, action: Vec<SparseMatrix>) -> Self {
        self.action = action;
        self
    }
}

fn show(v: &SparseVec) -> String {
    format!("{v:?}")
}

/// Associativity, module axioms, H-linearity of the product and, when
/// unital, `t·1 = ε(t)1`.
pub fn validate_halgebra(h: &HopfAlgebra, a: &HAlgebra) -> ValidationReport {
    let n = a.dim;
    let d = h.dim();
    let mut rep = ValidationReport::new(a.name.clone());
    let e = |i: usize| SparseVec::unit(n, i);

    let mut w = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let l = a.mul(a.mul_basis(i, j), &e(k));
                let r = a.mul(&e(i), a.mul_basis(j, k));
                if l != r {
                    w = Some(Witness::new(vec![i, j, k], show(&l), show(&r)));
                    break 'assoc;
                }
            }
        }
    }
    rep.push(Check::from_witness("associativity", w));

    rep.extend(validate_module(h, &a.module()));

    let mut w = None;
    'lin: for t in 0..d {
        for i in 0..n {
            for j in 0..n {
                let l = a.action[t].apply(a.mul_basis(i, j));
                let mut r = Accumulator::new();
                for (t1, t2, c) in h.coproduct(t) {
                    r.add_scaled(&a.mul(a.act_basis(*t1, i), a.act_basis(*t2, j)), c);
                }
                let r = r.finish(n);
                if l != r {
                    w = Some(Witness::new(vec![t, i, j], show(&l), show(&r)));
                    break 'lin;
                }
            }
        }
    }
    rep.push(Check::from_witness("h_linear_product", w));

    if let Some(u) = &a.unit {
        let w = (0..n).find_map(|i| {
            let l = a.mul(u, &e(i));
            let r = a.mul(&e(i), u);
            (l != e(i) || r != e(i)).then(|| Witness::new(vec![i], show(&l), show(&e(i))))
        });
        rep.push(Check::from_witness("unit", w));
        let w = (0..d).find_map(|t| {
            let l = a.action[t].apply(u);
            let r = u.scale(h.counit(t));
            (l != r).then(|| Witness::new(vec![t], show(&l), show(&r)))
        });
        rep.push(Check::from_witness("unit_invariant", w));
    }
    rep
}

/// `A⁺ = A ⊕ ℂ` with the adjoined unit at index `dim A` and trivial action on it.
pub fn unitarize(h: &HopfAlgebra, a: &HAlgebra) -> HAlgebra {
    let n = a.dim;
    let m = n + 1;
    let mut prod = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let v = if i == n {
                SparseVec::unit(m, j)
            } else if j == n {
                SparseVec::unit(m, i)
            } else {
                a.mul_basis(i, j).shifted(m, 0)
            };
            prod.push(v);
        }
    }
    let action = (0..h.dim())
        .map(|t| {
            let mut cols: Vec<SparseVec> = a.action[t].columns().iter().map(|c| c.shifted(m, 0)).collect();
            cols.push(SparseVec::unit(m, n).scale(h.counit(t)));
            SparseMatrix::from_columns(m, cols)
        })
        .collect();
    HAlgebra { name: format!("{}+", a.name), dim: m, prod, unit: Some(SparseVec::unit(m, n)), action }
}

/// `A ⋊ H` on `A ⊗ H` (index `a·d + x`) with `(a ⋊ x)(b ⋊ y) = a(x₁·b) ⋊ x₂y`
/// and the dual action `f · (a ⋊ x) = a ⋊ (f ⇀ x)` of Ĥ, indexed by `f^i`.
pub fn crossed_product(h: &HopfAlgebra, a: &HAlgebra) -> HAlgebra {
    let (n, d) = (a.dim, h.dim());
    let m = n * d;
    let mut prod = Vec::with_capacity(m * m);
    for p in 0..m {
        let (ai, x) = (p / d, p % d);
        for q in 0..m {
            let (bi, y) = (q / d, q % d);
            let mut acc = Accumulator::new();
            for (x1, x2, c) in h.coproduct(x) {
                let ab = a.mul(&SparseVec::unit(n, ai), a.act_basis(*x1, bi));
                if ab.is_zero() {
                    continue;
                }
                let xy = h.mul_basis(*x2, y);
                for (k, u) in ab.iter() {
                    for (l, v) in xy.iter() {
                        acc.add(k * d + l, &(c * u) * v);
                    }
                }
            }
            prod.push(acc.finish(m));
        }
    }
    // f^i ⇀ e_x = Σ x₁ f^i(x₂)
    let action = (0..d)
        .map(|i| {
            let cols = (0..m)
                .map(|p| {
                    let (ai, x) = (p / d, p % d);
                    SparseVec::from_pairs(
                        m,
                        h.coproduct(x).iter().filter(|(_, x2, _)| *x2 == i).map(|(x1, _, c)| (ai * d + x1, c.clone())),
                    )
                })
                .collect();
            SparseMatrix::from_columns(m, cols)
        })
        .collect();
    let unit = a.unit.as_ref().map(|u| {
        let one = h.one();
        SparseVec::from_pairs(
            m,
            u.iter().flat_map(|(k, x)| one.iter().map(move |(l, y)| (k * d + l, x * y))),
        )
    });
    HAlgebra { name: format!("{} x| {}", a.name, h.name()), dim: m, prod, unit, action }
}

/// The strictly upper triangular 2×2 matrices with the trivial action.
pub fn strictly_upper_2x2(h: &HopfAlgebra) -> HAlgebra {
    HAlgebra {
        name: "N2".into(),
        dim: 1,
        prod: vec![SparseVec::zero(1)],
        unit: None,
        action: HModule::trivial(h, 1).action,
    }
}

/// Corrupts one action entry; used to exercise the validators.
pub fn corrupt_action(a: &HAlgebra, t: usize, col: usize, row: usize, by: Scalar) -> HAlgebra {
    let mut out = a.clone();
    let c = out.action[t].column(col).add(&SparseVec::unit(a.dim, row).scale(&by));
    let mut cols = out.action[t].columns().to_vec();
    cols[col] = c;
    out.action[t] = SparseMatrix::from_columns(a.dim, cols);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::{group_algebra, sweedler, trivial, Group};

    #[test]
    fn scalars_and_dual_regular_validate() {
        let h = sweedler();
        assert!(validate_halgebra(&h, &HAlgebra::scalars(&h)).all_passed());
        let r = validate_halgebra(&h, &HAlgebra::dual_regular(&h));
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn broken_action_caught() {
        let h = group_algebra(&Group::cyclic(2));
        let a = HAlgebra::dual_regular(&h);
        let bad = corrupt_action(&a, 1, 0, 0, Scalar::one());
        let r = validate_halgebra(&h, &bad);
        let c = r.get("h_linear_product").unwrap();
        assert!(!c.passed());
        assert_eq!(c.witness.as_ref().unwrap().indices.len(), 3);
    }

    #[test]
    fn unitarize_scalars() {
        let h = trivial();
        let a = unitarize(&h, &HAlgebra::scalars(&h));
        assert_eq!(a.dim, 2);
        assert_eq!(a.unit, Some(SparseVec::unit(2, 1)));
        assert!(validate_halgebra(&h, &a).all_passed());
        assert_eq!(a.mul_basis(0, 0), &SparseVec::unit(2, 0));
    }

    #[test]
    fn unitarize_nilpotent() {
        let h = sweedler();
        let a = unitarize(&h, &strictly_upper_2x2(&h));
        assert!(validate_halgebra(&h, &a).all_passed());
        assert!(a.mul_basis(0, 0).is_zero());
    }

    #[test]
    fn scalar_crossed_product_is_h() {
        let h = sweedler();
        let c = crossed_product(&h, &HAlgebra::scalars(&h));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(c.mul_basis(i, j), h.mul_basis(i, j));
            }
        }
        assert!(validate_halgebra(&dual_hopf(&h), &c).all_passed());
    }

    #[test]
    fn crossed_product_by_trivial_is_identity() {
        let h = trivial();
        let k = group_algebra(&Group::cyclic(3));
        let a = HAlgebra::from_hopf_trivial(&k, &h);
        let c = crossed_product(&h, &a);
        assert_eq!(c.prod, a.prod);
    }
}
