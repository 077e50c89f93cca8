//! Equivariant differential forms `Ω^n_H(A) = H ⊗ Ω^n(A)` and the
//! operators `d`, `b`, `κ`, `B`, `T`.
//!
//! The basis element `e_x ⊗ ω` of `Ω^n_H(A)` has index `x · dim Ω^n + ω`.

use crate::action::HAlgebra;
use crate::ayd::{AydModule, ParamixedComplex};
use crate::exactla::{Accumulator, Scalar, SparseMatrix, SparseVec};
use crate::hopf::HopfAlgebra;

use super::calculus::{combine_ops, FormCalculus, Terms};

fn sign(k: usize) -> Scalar {
    if k % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Column-level operators on `Ω_H(A)`, shared by the full construction and
/// by checks that only need a few columns of a large degree.
pub struct EqCtx<'a> {
    pub h: &'a HopfAlgebra,
    pub calc: FormCalculus,
    /// `S^{-1}(e_y)` acting on A.
    sinv_a: Vec<SparseMatrix>,
    /// `S^{-1}(e_y)` acting on `Ω^k`, filled on demand up to some degree.
    sinv_forms: Vec<Vec<SparseMatrix>>,
}

impl<'a> EqCtx<'a> {
    pub fn new(h: &'a HopfAlgebra, a: &HAlgebra) -> Self {
        let calc = FormCalculus::new(a.clone());
        let sinv_a = (0..h.dim()).map(|y| combine_ops(&a.action, h.sinv_basis(y))).collect();
        EqCtx { h, calc, sinv_a, sinv_forms: Vec::new() }
    }

    /// Makes the `S^{-1}` operators on `Ω^k` available for `k ≤ top`.
    pub fn prepare(&mut self, top: usize) {
        while self.sinv_forms.len() <= top {
            let k = self.sinv_forms.len();
            let acts = self.calc.actions(self.h, k);
            let ops = (0..self.h.dim()).map(|y| combine_ops(&acts, self.h.sinv_basis(y))).collect();
            self.sinv_forms.push(ops);
        }
    }

    pub fn dim(&self, k: usize) -> usize {
        self.h.dim() * self.calc.dim(k)
    }

    fn split(&self, k: usize, idx: usize) -> (usize, Vec<usize>) {
        let m = self.calc.dim(k);
        (idx / m, self.calc.decode(k, idx % m))
    }

    fn push(&self, acc: &mut Accumulator, k: usize, x: usize, terms: Terms, c: &Scalar) {
        let m = self.calc.dim(k);
        for (w, y) in terms {
            acc.add(x * m + self.calc.encode(&w), c * &y);
        }
    }

    pub fn d_col(&self, k: usize, idx: usize) -> SparseVec {
        let (x, w) = self.split(k, idx);
        let mut acc = Accumulator::new();
        if let Some(u) = self.calc.d(&w) {
            acc.add(x * self.calc.dim(k + 1) + self.calc.encode(&u), Scalar::one());
        }
        acc.finish(self.dim(k + 1))
    }

    /// `b(x ⊗ ω da) = (−1)^{|ω|} (x ⊗ ωa − x₂ ⊗ (S^{-1}(x₁)·a) ω)`.
    pub fn b_col(&self, k: usize, idx: usize) -> SparseVec {
        assert!(k > 0);
        let (x, w) = self.split(k, idx);
        let (omega, a) = (&w[..k], w[k]);
        let s = sign(k - 1);
        let mut acc = Accumulator::new();
        self.push(&mut acc, k - 1, x, self.calc.right_mul(omega, a), &s);
        let ms = -&s;
        for (x1, x2, c) in self.h.coproduct(x) {
            for (a2, y) in self.sinv_a[*x1].column(a).iter() {
                self.push(&mut acc, k - 1, *x2, self.calc.left_mul(a2, omega), &(&ms * &(c * y)));
            }
        }
        acc.finish(self.dim(k - 1))
    }

    /// `T(x ⊗ ω) = x₂ ⊗ S^{-1}(x₁)·ω`.
    pub fn t_col(&self, k: usize, idx: usize) -> SparseVec {
        let m = self.calc.dim(k);
        let (x, wi) = (idx / m, idx % m);
        let mut acc = Accumulator::new();
        for (x1, x2, c) in self.h.coproduct(x) {
            for (j, y) in self.sinv_forms[k][*x1].column(wi).iter() {
                acc.add(x2 * m + j, c * y);
            }
        }
        acc.finish(self.dim(k))
    }

    /// `κ(x ⊗ ω da) = (−1)^{n−1} x₂ ⊗ (S^{-1}(x₁)·da) ω` for `n > 0`, and `T`
    /// in degree 0.
    pub fn kappa_col(&self, k: usize, idx: usize) -> SparseVec {
        if k == 0 {
            return self.t_col(0, idx);
        }
        let (x, w) = self.split(k, idx);
        let (omega, a) = (&w[..k], w[k]);
        let s = sign(k - 1);
        let unit = self.calc.unit();
        let mut acc = Accumulator::new();
        for (x1, x2, c) in self.h.coproduct(x) {
            for (a2, y) in self.sinv_a[*x1].column(a).iter() {
                self.push(&mut acc, k, *x2, self.calc.mul(&[unit, a2], omega), &(&s * &(c * y)));
            }
        }
        acc.finish(self.dim(k))
    }

    /// `B(x ⊗ a₀da₁⋯daₙ) = Σ_i (−1)^{ni} x₂ ⊗ S^{-1}(x₁)·(da_{n+1−i}⋯daₙ) da₀⋯da_{n−i}`.
    pub fn big_b_cyclic_col(&self, n: usize, idx: usize) -> SparseVec {
        let (x, w) = self.split(n, idx);
        let unit = self.calc.unit();
        let mut acc = Accumulator::new();
        if w[0] == unit {
            return acc.finish(self.dim(n + 1));
        }
        let m1 = self.calc.dim(n + 1);
        for i in 0..=n {
            let s = sign(n * i);
            let mut suffix = vec![unit];
            suffix.extend_from_slice(&w[..=n - i]);
            if i == 0 {
                acc.add(x * m1 + self.calc.encode(&suffix), s);
                continue;
            }
            let mut prefix = vec![unit];
            prefix.extend_from_slice(&w[n + 1 - i..]);
            let p = self.calc.encode(&prefix);
            for (x1, x2, c) in self.h.coproduct(x) {
                for (j, y) in self.sinv_forms[i][*x1].column(p).iter() {
                    let pw = self.calc.decode(i, j);
                    self.push(&mut acc, n + 1, *x2, self.calc.mul(&pw, &suffix), &(&s * &(c * y)));
                }
            }
        }
        acc.finish(self.dim(n + 1))
    }

    pub fn matrix(&self, k: usize, l: usize, col: impl Fn(usize) -> SparseVec) -> SparseMatrix {
        SparseMatrix::from_columns(self.dim(l), (0..self.dim(k)).map(col).collect())
    }

    /// `Ω^k_H(A)` with `t·(x⊗ω) = t₃ x S(t₁) ⊗ t₂·ω` and `f·(x⊗ω) = f(x₂) x₁ ⊗ ω`.
    pub fn space(&self, k: usize) -> AydModule {
        let h = self.h;
        let d = h.dim();
        let acts = self.calc.actions(h, k);
        let h_action = (0..d)
            .map(|t| {
                let mut acc = SparseMatrix::zero(self.dim(k), self.dim(k));
                for (ix, c) in h.iterated_coproduct(t, 3) {
                    let cols = (0..d)
                        .map(|x| h.mul(&h.mul(&h.basis(ix[2]), &h.basis(x)), h.s_basis(ix[0])))
                        .collect();
                    let l = SparseMatrix::from_columns(d, cols);
                    acc = acc.add_scaled(&l.kron(&acts[ix[1]]), &c);
                }
                acc
            })
            .collect();
        let id = SparseMatrix::identity(self.calc.dim(k));
        let hhat_action = (0..d)
            .map(|i| {
                let cols = (0..d)
                    .map(|x| {
                        SparseVec::from_pairs(
                            d,
                            h.coproduct(x).iter().filter(|t| t.1 == i).map(|(x1, _, c)| (*x1, c.clone())),
                        )
                    })
                    .collect();
                SparseMatrix::from_columns(d, cols).kron(&id)
            })
            .collect();
        AydModule::new(format!("Omega^{k}_H({})", self.calc.algebra.name), self.dim(k), h_action, hhat_action)
    }
}

/// `Ω^n_H(A)` for `n ≤ top` with all operators.
///
/// `d[n]` and `big_b[n]` map degree `n` to `n + 1` and exist for `n < top`;
/// `b[n]` maps degree `n` to `n − 1` (`b[0]` to the zero space); `t` and
/// `kappa` exist in every degree, `kappa_def` for `n < top`.
#[derive(Clone, Debug)]
pub struct EquivariantForms {
    pub hopf: HopfAlgebra,
    pub calc: FormCalculus,
    pub top: usize,
    pub spaces: Vec<AydModule>,
    pub d: Vec<SparseMatrix>,
    pub b: Vec<SparseMatrix>,
    pub t: Vec<SparseMatrix>,
    /// From the closed formula.
    pub kappa: Vec<SparseMatrix>,
    /// `1 − (bd + db)`.
    pub kappa_def: Vec<SparseMatrix>,
    /// `Σ_{j=0}^n κ^j d`.
    pub big_b: Vec<SparseMatrix>,
    /// From the cyclic-sum formula.
    pub big_b_cyclic: Vec<SparseMatrix>,
}

pub fn mat_pow(m: &SparseMatrix, e: usize) -> SparseMatrix {
    let mut out = SparseMatrix::identity(m.cols());
    for _ in 0..e {
        out = m.compose(&out);
    }
    out
}

/// Builds degrees `0..=n_max + 1`, so that every operator appearing in a
/// degree-`n` identity with `n ≤ n_max` is available.
pub fn build_forms(h: &HopfAlgebra, a: &HAlgebra, n_max: usize) -> EquivariantForms {
    EquivariantForms::new(h, a, n_max + 1)
}

impl EquivariantForms {
    pub fn new(h: &HopfAlgebra, a: &HAlgebra, top: usize) -> Self {
        let mut ctx = EqCtx::new(h, a);
        ctx.prepare(top);
        let spaces: Vec<AydModule> = (0..=top).map(|k| ctx.space(k)).collect();
        let d: Vec<_> = (0..top).map(|k| ctx.matrix(k, k + 1, |i| ctx.d_col(k, i))).collect();
        let mut b = vec![SparseMatrix::zero(0, ctx.dim(0))];
        b.extend((1..=top).map(|k| ctx.matrix(k, k - 1, |i| ctx.b_col(k, i))));
        let t: Vec<_> = (0..=top).map(|k| ctx.matrix(k, k, |i| ctx.t_col(k, i))).collect();
        let kappa: Vec<_> = (0..=top).map(|k| ctx.matrix(k, k, |i| ctx.kappa_col(k, i))).collect();
        let kappa_def = (0..top)
            .map(|k| {
                let mut bd = b[k + 1].compose(&d[k]);
                if k > 0 {
                    bd = bd.add(&d[k - 1].compose(&b[k]));
                }
                SparseMatrix::identity(ctx.dim(k)).sub(&bd)
            })
            .collect();
        let big_b = (0..top)
            .map(|n| {
                let mut acc = SparseMatrix::zero(ctx.dim(n + 1), ctx.dim(n));
                let mut term = d[n].clone();
                for _ in 0..=n {
                    acc = acc.add(&term);
                    term = kappa[n + 1].compose(&term);
                }
                acc
            })
            .collect();
        let big_b_cyclic = (0..top).map(|n| ctx.matrix(n, n + 1, |i| ctx.big_b_cyclic_col(n, i))).collect();
        EquivariantForms {
            hopf: h.clone(),
            calc: ctx.calc,
            top,
            spaces,
            d,
            b,
            t,
            kappa,
            kappa_def,
            big_b,
            big_b_cyclic,
        }
    }

    pub fn dim(&self, k: usize) -> usize {
        self.spaces[k].dim
    }

    /// The paramixed complex `(Ω_H(A), b, B)` on all built degrees.
    pub fn paramixed(&self) -> ParamixedComplex {
        ParamixedComplex { modules: self.spaces.clone(), b: self.b.clone(), big_b: self.big_b.clone() }
    }
}
