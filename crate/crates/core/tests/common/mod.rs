//! Independent oracles shared by the integration tests and the acceptance
//! runner. None of them go through the forms or homology code.
#![allow(dead_code)]

use hopfcyc::action::HAlgebra;
use hopfcyc::exactla::{Accumulator, SparseMatrix};

/// The Hochschild boundary `C_n(A) = A^{⊗(n+1)} → C_{n−1}(A)`.
fn hochschild_b(a: &HAlgebra, n: usize) -> SparseMatrix {
    let m = a.dim;
    let rows = m.pow(n as u32);
    let digits = |mut idx: usize, len: usize| {
        let mut out = vec![0; len];
        for k in (0..len).rev() {
            out[k] = idx % m;
            idx /= m;
        }
        out
    };
    let encode = |w: &[usize]| w.iter().fold(0, |acc, &x| acc * m + x);
    let cols = (0..m.pow(n as u32 + 1))
        .map(|idx| {
            let w = digits(idx, n + 1);
            let mut acc = Accumulator::new();
            for i in 0..n {
                let s = if i % 2 == 0 { 1 } else { -1 };
                for (p, c) in a.mul_basis(w[i], w[i + 1]).iter() {
                    let mut v = w[..i].to_vec();
                    v.push(p);
                    v.extend_from_slice(&w[i + 2..]);
                    acc.add(encode(&v), c * &hopfcyc::Scalar::from_int(s));
                }
            }
            let s = if n % 2 == 0 { 1 } else { -1 };
            for (p, c) in a.mul_basis(w[n], w[0]).iter() {
                let mut v = vec![p];
                v.extend_from_slice(&w[1..n]);
                acc.add(encode(&v), c * &hopfcyc::Scalar::from_int(s));
            }
            acc.finish(rows)
        })
        .collect();
    SparseMatrix::from_columns(rows, cols)
}

/// `dim HH_n(A)` for `n = 0..=top`, from the unnormalized Hochschild complex.
pub fn hochschild_dims(a: &HAlgebra, top: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (1..=top + 1).map(|n| hochschild_b(a, n).rank()).collect();
    (0..=top)
        .map(|n| {
            let dim = a.dim.pow(n as u32 + 1);
            let out = if n == 0 { 0 } else { ranks[n - 1] };
            dim - out - ranks[n]
        })
        .collect()
}

/// Ordinary periodic cyclic homology `(HP₀, HP₁)` of a separable algebra:
/// when `HH₁ = HH₂ = 0`, Connes' sequence gives `HP₀ = HH₀`, `HP₁ = 0`.
pub fn ordinary_hp_separable(a: &HAlgebra) -> [usize; 2] {
    let hh = hochschild_dims(a, 2);
    assert_eq!(&hh[1..], &[0, 0], "{} is not separable: HH = {hh:?}", a.name);
    [hh[0], 0]
}

/// Ranks of `Hom(HP(A), HP(B))` by parity.
pub fn hom_ranks(a: [usize; 2], b: [usize; 2]) -> [usize; 2] {
    [a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0]]
}
