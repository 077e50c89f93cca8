//! The duality isomorphism `A ⋊ H ⋊ Ĥ ≅ A ⊗ K_H`.

use serde::Serialize;

use crate::exactla::{Accumulator, SparseMatrix, SparseVec};
use crate::hopf::{dual_hopf, fourier, HaarData, HopfAlgebra, Pontrjagin};
use crate::report::{Check, ValidationReport, Witness};
use crate::HopfError;

use super::halgebra::{crossed_product, HAlgebra};
use super::pairing::{pairing_algebra, PairedSpace};

#[derive(Clone, Debug)]
pub struct TakesakiTakai {
    /// `A ⋊ H ⋊ Ĥ`, index `(a·d + x)·d + j` for `a ⋊ x ⋊ f^j`.
    pub domain: HAlgebra,
    /// `l(β; A)`, index `(i·n + a)·d + j` for `|f^i⟩ ⊗ a ⊗ ⟨f^j|`.
    pub codomain: HAlgebra,
    pub gamma: SparseMatrix,
    pub form: GammaForm,
    pub report: ValidationReport,
}

/// Which formula is used for the middle leg of `γ_A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GammaForm {
    /// `y₂S(x₁)·a`, with the diagonal action on `Ĥ ⊗ A ⊗ Ĥ`.
    Printed,
    /// `S^{-2}(y₂S(x₁))·a`, with `t` acting on the middle leg through
    /// `S^{-2}(t)`. Agrees with `Printed` when `S² = id`.
    Corrected,
}

/// `γ_A(a ⋊ x ⋊ F_l(y)) = F_l(y₁S(x₂)) ⊗ m·a ⊗ F_l(y₃)` with `m` as in
/// [`GammaForm`], assembled on the basis `f^j` of Ĥ through `F_l^{-1}`.
pub fn gamma_matrix(
    h: &HopfAlgebra,
    haar: &HaarData,
    a: &HAlgebra,
    form: GammaForm,
) -> Result<SparseMatrix, HopfError> {
    let (n, d) = (a.dim, h.dim());
    let maps = fourier(h, haar)?;
    let fl = &maps.fl;
    let fl_inv = fl.inverse()?;
    let fl_col = |v: &SparseVec| SparseVec::from_dense(&fl.mul_vec(&v.to_dense()));
    let dim = n * d * d;
    let y_terms: Vec<_> = (0..d).map(|y| h.iterated_coproduct(y, 3)).collect();

    let mut cols = Vec::with_capacity(dim);
    for ai in 0..n {
        let av = SparseVec::unit(n, ai);
        for x in 0..d {
            // γ on a ⋊ x ⋊ F_l(e_y) for every y
            let mut on_y: Vec<SparseVec> = Vec::with_capacity(d);
            for terms in &y_terms {
                let mut acc = Accumulator::new();
                for (x1, x2, cx) in h.coproduct(x) {
                    for (ys, cy) in terms {
                        let left = fl_col(&h.mul(&h.basis(ys[0]), h.s_basis(*x2)));
                        let mut m = h.mul(&h.basis(ys[1]), h.s_basis(*x1));
                        if form == GammaForm::Corrected {
                            m = h.s_pow(&m, -2);
                        }
                        let mid = a.act(&m, &av);
                        if left.is_zero() || mid.is_zero() {
                            continue;
                        }
                        let right = fl_col(&h.basis(ys[2]));
                        let c = cx * cy;
                        for (i, u) in left.iter() {
                            for (k, v) in mid.iter() {
                                let uv = &(&c * u) * v;
                                for (j, w) in right.iter() {
                                    acc.add((i * n + k) * d + j, &uv * w);
                                }
                            }
                        }
                    }
                }
                on_y.push(acc.finish(dim));
            }
            for j in 0..d {
                let mut acc = Accumulator::new();
                for (y, col) in on_y.iter().enumerate() {
                    let c = fl_inv.get(y, j);
                    if !c.is_zero() {
                        acc.add_scaled(col, c);
                    }
                }
                cols.push(acc.finish(dim));
            }
        }
    }
    Ok(SparseMatrix::from_columns(dim, cols))
}

/// `A` with `t` acting through `S^{-2}(t)`; again an H-algebra since `S²` is
/// a Hopf automorphism.
pub fn s2_twisted(h: &HopfAlgebra, a: &HAlgebra) -> HAlgebra {
    let m = a.module();
    let action = (0..h.dim()).map(|t| m.operator(&h.s_pow(&h.basis(t), -2))).collect();
    let mut out = a.clone().with_action(action);
    out.name = format!("{}^S2", a.name);
    out
}

/// Builds `γ_A` and checks bijectivity, multiplicativity on all basis
/// pairs and equivariance of the dual-dual action against the action on
/// `Ĥ ⊗ A ⊗ Ĥ` belonging to `form`.
pub fn takesaki_takai(
    h: &HopfAlgebra,
    haar: &HaarData,
    pd: &Pontrjagin,
    a: &HAlgebra,
    form: GammaForm,
) -> Result<TakesakiTakai, HopfError> {
    let d = h.dim();
    let inner = crossed_product(h, a);
    // The dual of Ĥ has the same structure constants as H, so the action
    // of the double crossed product is indexed by the basis of H.
    let domain = crossed_product(&dual_hopf(h), &inner);
    let middle = match form {
        GammaForm::Printed => a.clone(),
        GammaForm::Corrected => s2_twisted(h, a),
    };
    let codomain = pairing_algebra(h, &PairedSpace::beta(h, pd), &middle)?;
    let gamma = gamma_matrix(h, haar, a, form)?;
    let dim = domain.dim;
    let mut report = ValidationReport::new("takesaki_takai");

    let rank = gamma.rank();
    report.push(
        Check::from_witness(
            "bijective",
            (rank != dim).then(|| Witness::new(vec![], format!("rank {rank}"), format!("rank {dim}"))),
        )
        .with_value(rank),
    );

    let mut w = None;
    'mul: for p in 0..dim {
        let gp = gamma.column(p);
        for q in 0..dim {
            let l = gamma.apply(domain.mul_basis(p, q));
            let r = codomain.mul(gp, gamma.column(q));
            if l != r {
                w = Some(Witness::new(vec![p, q], format!("{l:?}"), format!("{r:?}")));
                break 'mul;
            }
        }
    }
    report.push(Check::from_witness("multiplicative", w));

    let w = (0..d).find_map(|t| {
        let l = gamma.compose(&domain.action[t]);
        let r = codomain.action[t].compose(&gamma);
        (l != r).then(|| {
            let col = (0..dim).find(|&c| l.column(c) != r.column(c)).unwrap_or(0);
            Witness::new(vec![t, col], format!("{:?}", l.column(col)), format!("{:?}", r.column(col)))
        })
    });
    report.push(Check::from_witness("equivariant", w));

    Ok(TakesakiTakai { domain, codomain, gamma, form, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::{group_algebra, sweedler, trivial, Group};
    use crate::hopf::normalized_duality;

    #[test]
    fn trivial_hopf_gives_identity() {
        let h = trivial();
        let (haar, pd) = normalized_duality(&h).unwrap();
        let k = group_algebra(&Group::cyclic(2));
        let a = HAlgebra::from_hopf_trivial(&k, &h);
        let tt = takesaki_takai(&h, &haar, &pd, &a, GammaForm::Printed).unwrap();
        assert_eq!(tt.gamma, SparseMatrix::identity(2));
        assert!(tt.report.all_passed(), "{:?}", tt.report);
    }

    #[test]
    fn scalars_over_c2() {
        let h = group_algebra(&Group::cyclic(2));
        let (haar, pd) = normalized_duality(&h).unwrap();
        let tt = takesaki_takai(&h, &haar, &pd, &HAlgebra::scalars(&h), GammaForm::Printed).unwrap();
        assert_eq!(tt.domain.dim, 4);
        assert!(tt.report.all_passed(), "{:#?}", tt.report);
    }

    #[test]
    fn scalars_over_sweedler() {
        let h = sweedler();
        let (haar, pd) = normalized_duality(&h).unwrap();
        let tt = takesaki_takai(&h, &haar, &pd, &HAlgebra::scalars(&h), GammaForm::Printed).unwrap();
        assert!(tt.report.all_passed(), "{:#?}", tt.report);
    }
}

#[cfg(test)]
mod larger {
    use super::*;
    use crate::hopf::corpus::{sweedler, taft};
    use crate::hopf::normalized_duality;

    #[test]
    fn dual_regular_over_sweedler() {
        let h = sweedler();
        let (haar, pd) = normalized_duality(&h).unwrap();
        let a = HAlgebra::dual_regular(&h);
        let tt = takesaki_takai(&h, &haar, &pd, &a, GammaForm::Corrected).unwrap();
        assert_eq!(tt.domain.dim, 64);
        assert!(tt.report.all_passed(), "{:#?}", tt.report);
        // the printed middle leg needs S² = id
        let tt = takesaki_takai(&h, &haar, &pd, &a, GammaForm::Printed).unwrap();
        assert!(tt.report.get("bijective").unwrap().passed());
        assert!(tt.report.get("equivariant").unwrap().passed());
        assert!(!tt.report.get("multiplicative").unwrap().passed());
    }

    #[test]
    fn scalars_over_taft3() {
        let h = taft(3);
        let (haar, pd) = normalized_duality(&h).unwrap();
        for form in [GammaForm::Printed, GammaForm::Corrected] {
            let tt = takesaki_takai(&h, &haar, &pd, &HAlgebra::scalars(&h), form).unwrap();
            assert!(tt.report.all_passed(), "{:#?}", tt.report);
        }
    }
}

#[cfg(test)]
mod slow {
    use super::*;
    use crate::hopf::corpus::taft;
    use crate::hopf::normalized_duality;

    #[test]
    #[ignore = "slow: 729-dimensional double crossed product"]
    fn dual_regular_over_taft3() {
        let h = taft(3);
        let (haar, pd) = normalized_duality(&h).unwrap();
        let tt = takesaki_takai(&h, &haar, &pd, &HAlgebra::dual_regular(&h), GammaForm::Corrected).unwrap();
        assert!(tt.report.all_passed(), "{:#?}", tt.report.failures().collect::<Vec<_>>());
    }
}
