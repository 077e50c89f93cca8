//! The periodic tensor algebra truncated at level `N`: even forms up to
//! degree `2N` with the Fedosov product `ω ∘ η = ωη − dω dη`.

use crate::action::{validate_halgebra, HAlgebra};
use crate::exactla::{Accumulator, SparseMatrix, SparseVec, Subspace};
use crate::hopf::HopfAlgebra;
use crate::report::{Check, ValidationReport, Witness};

use super::calculus::FormCalculus;

#[derive(Clone, Debug)]
pub struct TruncatedTensorAlgebra {
    pub level: usize,
    pub calc: FormCalculus,
    /// Offset of `Ω^{2j}(A)` inside `T_N A`, for `j = 0..=N`.
    pub offsets: Vec<usize>,
    pub algebra: HAlgebra,
    /// `τ_A : T_N A → A`, the projection to degree 0.
    pub tau: SparseMatrix,
    /// `σ_A : A → T_N A`, the inclusion of degree 0.
    pub sigma: SparseMatrix,
}

impl TruncatedTensorAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// `(j, local index)` of a basis element, for the block `Ω^{2j}`.
    pub fn locate(&self, idx: usize) -> (usize, usize) {
        let j = self.offsets.iter().rposition(|&o| o <= idx).unwrap();
        (j, idx - self.offsets[j])
    }

    /// `J_N A = ker τ_A`.
    pub fn ideal(&self) -> Subspace {
        let n = self.dim();
        Subspace::from_vectors(n, (self.offsets[0] + self.calc.algebra.dim..n).map(|i| SparseVec::unit(n, i)))
    }
}

pub fn tensor_algebra(h: &HopfAlgebra, a: &HAlgebra, level: usize) -> TruncatedTensorAlgebra {
    let calc = FormCalculus::new(a.clone());
    let mut offsets = Vec::with_capacity(level + 1);
    let mut dim = 0;
    for j in 0..=level {
        offsets.push(dim);
        dim += calc.dim(2 * j);
    }
    let top = 2 * level;
    let mut prod = Vec::with_capacity(dim * dim);
    for p in 0..dim {
        let jp = offsets.iter().rposition(|&o| o <= p).unwrap();
        let u = calc.decode(2 * jp, p - offsets[jp]);
        let du = calc.d(&u);
        for q in 0..dim {
            let jq = offsets.iter().rposition(|&o| o <= q).unwrap();
            let v = calc.decode(2 * jq, q - offsets[jq]);
            let mut acc = Accumulator::new();
            let deg = 2 * (jp + jq);
            if deg <= top {
                for (w, c) in calc.mul(&u, &v) {
                    acc.add(offsets[jp + jq] + calc.encode(&w), c);
                }
            }
            if deg + 2 <= top {
                if let (Some(du), Some(dv)) = (&du, calc.d(&v)) {
                    for (w, c) in calc.mul(du, &dv) {
                        acc.add(offsets[jp + jq + 1] + calc.encode(&w), -c);
                    }
                }
            }
            prod.push(acc.finish(dim));
        }
    }
    let blocks: Vec<Vec<SparseMatrix>> = (0..=level).map(|j| calc.actions(h, 2 * j)).collect();
    let action = (0..h.dim())
        .map(|t| blocks.iter().skip(1).fold(blocks[0][t].clone(), |acc, b| acc.direct_sum(&b[t])))
        .collect();
    let n = a.dim;
    let tau = SparseMatrix::from_columns(n, (0..dim).map(|i| if i < n { SparseVec::unit(n, i) } else { SparseVec::zero(n) }).collect());
    let sigma = SparseMatrix::from_columns(dim, (0..n).map(|i| SparseVec::unit(dim, i)).collect());
    let algebra = HAlgebra { name: format!("T_{level}({})", a.name), dim, prod, unit: None, action };
    TruncatedTensorAlgebra { level, calc, offsets, algebra, tau, sigma }
}

/// `(J_N A)^k` as a subspace, for `k = 1, 2, …` until it vanishes.
pub fn ideal_powers(t: &TruncatedTensorAlgebra) -> Vec<Subspace> {
    let j = t.ideal();
    let mut out = vec![j.clone()];
    while out.last().unwrap().dim() > 0 {
        let prev = out.last().unwrap();
        let vecs: Vec<SparseVec> =
            prev.basis().iter().flat_map(|u| j.basis().iter().map(move |v| (u, v))).map(|(u, v)| t.algebra.mul(u, v)).collect();
        out.push(Subspace::from_vectors(t.dim(), vecs));
    }
    out
}

/// Associativity and H-linearity of the Fedosov product, `τ_A`
/// multiplicative, `σ_A` a section, `(J_N A)^{N+1} = 0`, and the curvature
/// of `σ_A` lands in `J_N A`.
pub fn validate_tensor_algebra(h: &HopfAlgebra, t: &TruncatedTensorAlgebra) -> ValidationReport {
    let mut rep = validate_halgebra(h, &t.algebra);
    rep.subject = t.algebra.name.clone();
    let a = &t.calc.algebra;
    let n = a.dim;

    let mut w = None;
    'tau: for p in 0..t.dim() {
        for q in 0..t.dim() {
            let l = t.tau.apply(t.algebra.mul_basis(p, q));
            let r = a.mul(t.tau.column(p), t.tau.column(q));
            if l != r {
                w = Some(Witness::new(vec![p, q], format!("{l:?}"), format!("{r:?}")));
                break 'tau;
            }
        }
    }
    rep.push(Check::from_witness("tau multiplicative", w));
    let ts = t.tau.compose(&t.sigma);
    rep.push(Check::from_witness(
        "sigma is a section",
        (ts != SparseMatrix::identity(n)).then(|| Witness::new(vec![], "tau sigma", "id")),
    ));

    let ideal = t.ideal();
    let mut w = None;
    'curv: for x in 0..n {
        for y in 0..n {
            let s = |v: &SparseVec| t.sigma.apply(v);
            let c = s(a.mul_basis(x, y)).sub(&t.algebra.mul(t.sigma.column(x), t.sigma.column(y)));
            if !ideal.contains(&c) {
                w = Some(Witness::new(vec![x, y], format!("{c:?}"), "in J"));
                break 'curv;
            }
        }
    }
    rep.push(Check::from_witness("curvature in J", w));

    let powers = ideal_powers(t);
    let order = powers.len();
    let w = (order > t.level + 1).then(|| Witness::new(vec![], format!("J^{} != 0", t.level + 1), "0"));
    rep.push(Check::from_witness("J nilpotent", w).with_value(format!("J^{order} = 0")));
    rep
}
