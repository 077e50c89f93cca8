//! The trace map `tr : X_H(l(b; B)) → X_H(B)` and its checks.

use crate::action::{admissible_vector, pairing_algebra, HAlgebra, PairedSpace};
use crate::ayd::is_ayd_map;
use crate::exactla::{Accumulator, Scalar, SparseMatrix, SparseVec};
use crate::hopf::HopfAlgebra;
use crate::report::{Check, ValidationReport, Witness};
use crate::HopfError;

use super::calculus::combine_ops;
use super::equivariant::{EqCtx, EquivariantForms};
use super::suite::matrix_check;

#[derive(Clone, Debug)]
pub struct StabilityTrace {
    /// `l(b; B)`, index `(v·n + a)·m + w`.
    pub pairing_algebra: HAlgebra,
    /// `tr` on `Ω⁰_H(l(b; B)) → Ω⁰_H(B)`.
    pub tr0: SparseMatrix,
    /// `tr` on `Ω¹_H(l(b; B)) → Ω¹_H(B)`, before passing to the quotients.
    pub tr1: SparseMatrix,
    pub admissible: Option<SparseVec>,
    /// `X_H(ι)` in degrees 0 and 1, when an admissible vector exists.
    pub iota: Option<(SparseMatrix, SparseMatrix)>,
    pub report: ValidationReport,
}

/// `tr_x(v ⊗ w) = b(S^{-1}(x)·w, v)` for each basis element `x`, as a
/// table `[x][v·m + w]`.
fn twisted_traces(h: &HopfAlgebra, p: &PairedSpace) -> Vec<Vec<Scalar>> {
    let m = p.dim();
    (0..h.dim())
        .map(|x| {
            let op = combine_ops(&p.module.action, h.sinv_basis(x));
            let mut row = vec![Scalar::zero(); m * m];
            for w in 0..m {
                let sw = op.column(w);
                for v in 0..m {
                    row[v * m + w] = p.eval(sw, &SparseVec::unit(m, v));
                }
            }
            row
        })
        .collect()
}

/// `tr_x(T₀T₁) = tr_{x₂}((S^{-1}(x₁)·T₁) T₀)` on all basis triples of `l(b)`.
pub fn twisted_trace_check(h: &HopfAlgebra, p: &PairedSpace) -> Result<Check, HopfError> {
    let l = pairing_algebra(h, p, &HAlgebra::scalars(h))?;
    let tr = twisted_traces(h, p);
    let n = l.dim;
    let eval = |x: usize, v: &SparseVec| v.iter().fold(Scalar::zero(), |acc, (i, c)| acc + &(c * &tr[x][i]));
    let sinv_ops: Vec<SparseMatrix> = (0..h.dim()).map(|y| combine_ops(&l.action, h.sinv_basis(y))).collect();
    for x in 0..h.dim() {
        for t0 in 0..n {
            for t1 in 0..n {
                let lhs = eval(x, l.mul_basis(t0, t1));
                let mut rhs = Scalar::zero();
                for (x1, x2, c) in h.coproduct(x) {
                    let st1 = sinv_ops[*x1].column(t1);
                    rhs += &(c * &eval(*x2, &l.mul(st1, &SparseVec::unit(n, t0))));
                }
                if lhs != rhs {
                    return Ok(Check::fail("twisted trace", Witness::new(vec![x, t0, t1], lhs, rhs)));
                }
            }
        }
    }
    Ok(Check::pass("twisted trace"))
}

pub fn stability_trace(h: &HopfAlgebra, p: &PairedSpace, b_alg: &HAlgebra) -> Result<StabilityTrace, HopfError> {
    let l = pairing_algebra(h, p, b_alg)?;
    let (m, n) = (p.dim(), b_alg.dim);
    let dh = h.dim();
    let lctx = EqCtx::new(h, &l);
    let target = EquivariantForms::new(h, b_alg, 2);
    let tc = &target.calc;
    let lc = &lctx.calc;
    let tr = twisted_traces(h, p);
    let split = |q: usize| (q / (n * m), (q / m) % n, q % m);
    let mut rep = ValidationReport::new(format!("stability {}", l.name));

    // tr(x ⊗ v₀⊗a₀⊗w₀) = b(S^{-1}(x₁)·w₀, v₀) x₂ ⊗ a₀
    let t0 = tc.dim(0);
    let tr0 = SparseMatrix::from_columns(
        dh * t0,
        (0..dh * lc.dim(0))
            .map(|i| {
                let (x, (v0, a0, w0)) = (i / lc.dim(0), split(i % lc.dim(0)));
                let mut acc = Accumulator::new();
                for (x1, x2, c) in h.coproduct(x) {
                    acc.add(x2 * t0 + a0, c * &tr[*x1][v0 * m + w0]);
                }
                acc.finish(dh * t0)
            })
            .collect(),
    );

    // tr(x ⊗ T₀ dT₁) = b(S^{-1}(x₁)·w₁, v₀) b(w₀, v₁) x₂ ⊗ a₀ da₁; for
    // T₀ = 1 the matrix part is T₁ alone.
    let t1 = tc.dim(1);
    let tr1 = SparseMatrix::from_columns(
        dh * t1,
        (0..dh * lc.dim(1))
            .map(|i| {
                let (x, w) = (i / lc.dim(1), lc.decode(1, i % lc.dim(1)));
                let (v1, a1, w1) = split(w[1]);
                let (v0, head, k) = if w[0] == lc.unit() {
                    (v1, tc.unit(), Scalar::one())
                } else {
                    let (v0, a0, w0) = split(w[0]);
                    (v0, a0, p.pairing.get(w0, v1).clone())
                };
                let mut acc = Accumulator::new();
                if !k.is_zero() {
                    let col = tc.encode(&[head, a1]);
                    for (x1, x2, c) in h.coproduct(x) {
                        acc.add(x2 * t1 + col, &(c * &tr[*x1][v0 * m + w1]) * &k);
                    }
                }
                acc.finish(dh * t1)
            })
            .collect(),
    );

    rep.push(twisted_trace_check(h, p)?);

    let lb1 = lctx.matrix(1, 0, |i| lctx.b_col(1, i));
    let ld0 = lctx.matrix(0, 1, |i| lctx.d_col(0, i));
    rep.push(matrix_check("chain map: tr b = b tr", &tr0.compose(&lb1), &target.b[1].compose(&tr1)));
    let image = target.b[2].image();
    let diff = tr1.compose(&ld0).sub(&target.d[0].compose(&tr0));
    let w = (0..diff.cols()).find(|&c| !image.contains(diff.column(c))).map(|c| {
        Witness::new(vec![c], format!("{:?}", diff.column(c)), "in b(Omega^2)")
    });
    rep.push(Check::from_witness("chain map: tr d = d tr mod b", w));
    let w = (0..lctx.dim(2)).find_map(|c| {
        let v = tr1.apply(&lctx.b_col(2, c));
        (!image.contains(&v)).then(|| Witness::new(vec![c], format!("{v:?}"), "in b(Omega^2)"))
    });
    rep.push(Check::from_witness("descends to X", w));

    for (k, op) in [(0usize, &tr0), (1, &tr1)] {
        let w = is_ayd_map(&lctx.space(k), &target.spaces[k], op);
        rep.push(Check::from_witness(format!("ayd_map [n={k}]"), w));
    }

    let admissible = admissible_vector(h, p);
    let iota = admissible.as_ref().map(|u| {
        // ι(a) = u ⊗ a ⊗ u
        let iota_a = |a: usize| {
            let mut acc = Accumulator::new();
            for (v, x) in u.iter() {
                for (w, y) in u.iter() {
                    acc.add((v * n + a) * m + w, x * y);
                }
            }
            acc.finish(l.dim)
        };
        let i0 = SparseMatrix::from_columns(
            dh * lc.dim(0),
            (0..dh * t0)
                .map(|i| iota_a(i % t0).shifted(dh * lc.dim(0), (i / t0) * lc.dim(0)))
                .collect(),
        );
        let i1 = SparseMatrix::from_columns(
            dh * lc.dim(1),
            (0..dh * t1)
                .map(|i| {
                    let (x, w) = (i / t1, tc.decode(1, i % t1));
                    let first = if w[0] == tc.unit() {
                        SparseVec::unit(l.dim + 1, l.dim)
                    } else {
                        iota_a(w[0]).shifted(l.dim + 1, 0)
                    };
                    let second = iota_a(w[1]);
                    let mut acc = Accumulator::new();
                    for (f, c) in first.iter() {
                        for (s, e) in second.iter() {
                            acc.add(x * lc.dim(1) + lc.encode(&[f, s]), c * e);
                        }
                    }
                    acc.finish(dh * lc.dim(1))
                })
                .collect(),
        );
        (i0, i1)
    });
    match &iota {
        Some((i0, i1)) => {
            rep.push(matrix_check("tr iota = id [n=0]", &tr0.compose(i0), &SparseMatrix::identity(dh * t0)));
            rep.push(matrix_check("tr iota = id [n=1]", &tr1.compose(i1), &SparseMatrix::identity(dh * t1)));
        }
        None => rep.push(Check::unchecked("tr iota = id", "no admissible vector found")),
    }
    Ok(StabilityTrace { pairing_algebra: l, tr0, tr1, admissible, iota, report: rep })
}
