//! Levels of the Hodge tower and the equivariant X-complex.

use crate::action::HAlgebra;
use crate::ayd::{validate_paracomplex, AydModule, Paracomplex};
use crate::exactla::{Quotient, SparseMatrix, SparseVec};
use crate::hopf::HopfAlgebra;
use crate::report::{Check, ValidationReport, Witness};

use super::equivariant::EquivariantForms;

/// `θ^n Ω_H(A) = Ω⁰_H ⊕ ⋯ ⊕ Ω^{n−1}_H ⊕ Ω^n_H / b(Ω^{n+1}_H)` with `B + b`,
/// split into even and odd degrees.
#[derive(Clone, Debug)]
pub struct HodgeLevel {
    pub level: usize,
    /// `(degree, offset, dim)` of each block inside `c0` (even) or `c1` (odd).
    pub blocks: Vec<(usize, usize, usize)>,
    pub quotient: Quotient,
    pub paracomplex: Paracomplex,
    pub report: ValidationReport,
}

impl HodgeLevel {
    pub fn dims(&self) -> (usize, usize) {
        (self.paracomplex.c0.dim, self.paracomplex.c1.dim)
    }
}

/// Places `(row offset, col offset, block)` entries into one matrix.
pub(crate) fn place(rows: usize, cols: usize, parts: &[(usize, usize, &SparseMatrix)]) -> SparseMatrix {
    let mut out: Vec<Vec<(usize, crate::Scalar)>> = vec![Vec::new(); cols];
    for (r0, c0, m) in parts {
        for c in 0..m.cols() {
            out[c0 + c].extend(m.column(c).iter().map(|(r, x)| (r0 + r, x.clone())));
        }
    }
    SparseMatrix::from_columns(rows, out.into_iter().map(|p| SparseVec::from_pairs(rows, p)).collect())
}

fn quotient_module(q: &Quotient, m: &AydModule) -> AydModule {
    AydModule::new(
        format!("{}/b", m.name),
        q.dim(),
        m.h_action.iter().map(|a| q.descend(a)).collect(),
        m.hhat_action.iter().map(|a| q.descend(a)).collect(),
    )
}

/// The quotient `Ω^n_H / b(Ω^{n+1}_H)`, with checks that the image is an
/// AYD submodule and that `b` descends.
fn top_quotient(f: &EquivariantForms, n: usize, rep: &mut ValidationReport) -> (Quotient, AydModule) {
    let q = Quotient::new(f.b[n + 1].image());
    let sp = &f.spaces[n];
    let inv = sp.h_action.iter().chain(&sp.hhat_action).all(|a| q.is_invariant(a));
    rep.push(Check::from_witness("image of b is a submodule", (!inv).then(|| Witness::new(vec![n], "not invariant", "invariant"))));
    let bb = f.b[n].compose(&f.b[n + 1]);
    rep.push(Check::from_witness("b descends", (!bb.is_zero()).then(|| Witness::new(vec![n], "b b != 0", "0"))));
    let m = quotient_module(&q, sp);
    (q, m)
}

pub fn hodge_level(f: &EquivariantForms, n: usize) -> HodgeLevel {
    assert!(n < f.top, "hodge level {n} needs forms up to degree {}", n + 1);
    let h = &f.hopf;
    let mut rep = ValidationReport::new(format!("theta^{n}"));
    let (q, qm) = top_quotient(f, n, &mut rep);

    let module = |j: usize| if j == n { qm.clone() } else { f.spaces[j].clone() };
    let mut blocks = Vec::new();
    let mut offs = [0usize, 0usize];
    let mut parts: [AydModule; 2] = [AydModule::zero(h), AydModule::zero(h)];
    for j in 0..=n {
        let m = module(j);
        let p = j % 2;
        blocks.push((j, offs[p], m.dim));
        offs[p] += m.dim;
        parts[p] = parts[p].direct_sum(&m);
    }
    let [c0, c1] = parts;
    let offset = |j: usize| blocks[j].1;

    // ∂ = B + b block by block; B out of degree n − 1 lands in the quotient,
    // b out of the quotient goes through the lift.
    let mut ops: [Vec<(usize, usize, SparseMatrix)>; 2] = [Vec::new(), Vec::new()];
    for j in 0..=n {
        if j < n {
            let big = if j + 1 == n { q.projection.compose(&f.big_b_cyclic[j]) } else { f.big_b_cyclic[j].clone() };
            ops[j % 2].push((offset(j + 1), offset(j), big));
        }
        if j > 0 {
            let small = if j == n { f.b[j].compose(&q.lift) } else { f.b[j].clone() };
            ops[j % 2].push((offset(j - 1), offset(j), small));
        }
    }
    let build = |p: usize, rows: usize, cols: usize| {
        let refs: Vec<_> = ops[p].iter().map(|(r, c, m)| (*r, *c, m)).collect();
        place(rows, cols, &refs)
    };
    let d0 = build(0, c1.dim, c0.dim);
    let d1 = build(1, c0.dim, c1.dim);
    let paracomplex = Paracomplex { c0, c1, d0, d1 };
    rep.extend(validate_paracomplex(h, &paracomplex));
    HodgeLevel { level: n, blocks, quotient: q, paracomplex, report: rep }
}

/// `X_H(A) : Ω⁰_H(A) ⇄ Ω¹_H(A) / b(Ω²_H(A))`, with `d` upward and `b` downward.
#[derive(Clone, Debug)]
pub struct XComplex {
    pub quotient: Quotient,
    pub paracomplex: Paracomplex,
    pub report: ValidationReport,
}

pub fn x_complex_of(f: &EquivariantForms) -> XComplex {
    assert!(f.top >= 2);
    let mut rep = ValidationReport::new("X_H");
    let (q, c1) = top_quotient(f, 1, &mut rep);
    let paracomplex = Paracomplex {
        c0: f.spaces[0].clone(),
        c1,
        d0: q.projection.compose(&f.d[0]),
        d1: f.b[1].compose(&q.lift),
    };
    rep.extend(validate_paracomplex(&f.hopf, &paracomplex));
    XComplex { quotient: q, paracomplex, report: rep }
}

pub fn x_complex(h: &HopfAlgebra, a: &HAlgebra) -> XComplex {
    x_complex_of(&EquivariantForms::new(h, a, 2))
}
