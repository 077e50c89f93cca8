//! Noncommutative differential forms `Ω^n(A) = A⁺ ⊗ A^{⊗n}`, `Ω⁰(A) = A`.
//!
//! A basis form `a₀ da₁ ⋯ daₙ` is stored as the word `[a₀, a₁, …, aₙ]`,
//! where `a₀ = dim A` stands for the adjoined unit of `A⁺`.

use crate::action::HAlgebra;
use crate::exactla::{Accumulator, Scalar, SparseMatrix, SparseVec};
use crate::hopf::HopfAlgebra;

pub type Word = Vec<usize>;
pub type Terms = Vec<(Word, Scalar)>;

/// Dimensions of one degree of `Ω(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormSpace {
    pub degree: usize,
    pub algebra_dim: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct FormCalculus {
    pub algebra: HAlgebra,
}

impl FormCalculus {
    pub fn new(algebra: HAlgebra) -> Self {
        FormCalculus { algebra }
    }

    /// Index of the unit of `A⁺` in the first slot.
    pub fn unit(&self) -> usize {
        self.algebra.dim
    }

    pub fn dim(&self, k: usize) -> usize {
        let n = self.algebra.dim;
        if k == 0 {
            n
        } else {
            (n + 1) * n.pow(k as u32)
        }
    }

    pub fn space(&self, k: usize) -> FormSpace {
        FormSpace { degree: k, algebra_dim: self.algebra.dim, dim: self.dim(k) }
    }

    pub fn encode(&self, w: &[usize]) -> usize {
        let n = self.algebra.dim;
        if w.len() == 1 {
            assert!(w[0] < n, "degree-0 form must lie in A");
            return w[0];
        }
        w[1..].iter().fold(w[0], |acc, &a| acc * n + a)
    }

    pub fn decode(&self, k: usize, mut idx: usize) -> Word {
        let n = self.algebra.dim;
        let mut w = vec![0; k + 1];
        for slot in (1..=k).rev() {
            w[slot] = idx % n;
            idx /= n;
        }
        w[0] = idx;
        w
    }

    pub fn to_vec(&self, k: usize, terms: Terms) -> SparseVec {
        let mut acc = Accumulator::new();
        for (w, c) in terms {
            debug_assert_eq!(w.len(), k + 1);
            acc.add(self.encode(&w), c);
        }
        acc.finish(self.dim(k))
    }

    /// `d(a₀ da₁ ⋯) = da₀ da₁ ⋯`, zero when `a₀ = 1`.
    pub fn d(&self, w: &[usize]) -> Option<Word> {
        if w[0] == self.unit() {
            return None;
        }
        let mut out = Vec::with_capacity(w.len() + 1);
        out.push(self.unit());
        out.extend_from_slice(w);
        Some(out)
    }

    /// `a · (a₀ da₁ ⋯)`.
    pub fn left_mul(&self, a: usize, w: &[usize]) -> Terms {
        if w[0] == self.unit() {
            let mut out = w.to_vec();
            out[0] = a;
            return vec![(out, Scalar::one())];
        }
        self.algebra
            .mul_basis(a, w[0])
            .iter()
            .map(|(c, x)| {
                let mut out = w.to_vec();
                out[0] = c;
                (out, x.clone())
            })
            .collect()
    }

    /// `ω · b` through `ω da · b = ω d(ab) − (ω a) db`.
    pub fn right_mul(&self, w: &[usize], b: usize) -> Terms {
        let k = w.len() - 1;
        if k == 0 {
            if w[0] == self.unit() {
                return vec![(vec![b], Scalar::one())];
            }
            return self.algebra.mul_basis(w[0], b).iter().map(|(c, x)| (vec![c], x.clone())).collect();
        }
        let (omega, a) = (&w[..k], w[k]);
        let mut out = Terms::new();
        for (c, x) in self.algebra.mul_basis(a, b).iter() {
            let mut v = omega.to_vec();
            v.push(c);
            out.push((v, x.clone()));
        }
        for (mut v, x) in self.right_mul(omega, a) {
            v.push(b);
            out.push((v, -x));
        }
        out
    }

    /// Product of basis forms; the degrees add.
    pub fn mul(&self, w1: &[usize], w2: &[usize]) -> Terms {
        let tail = &w2[1..];
        let head = if w2[0] == self.unit() {
            vec![(w1.to_vec(), Scalar::one())]
        } else {
            self.right_mul(w1, w2[0])
        };
        head.into_iter()
            .map(|(mut v, x)| {
                v.extend_from_slice(tail);
                (v, x)
            })
            .collect()
    }

    /// Product of linear combinations in degrees `k1` and `k2`.
    pub fn mul_vec(&self, k1: usize, v: &SparseVec, k2: usize, w: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in v.iter() {
            let wi = self.decode(k1, i);
            for (j, y) in w.iter() {
                let xy = x * y;
                for (u, c) in self.mul(&wi, &self.decode(k2, j)) {
                    acc.add(self.encode(&u), &xy * &c);
                }
            }
        }
        acc.finish(self.dim(k1 + k2))
    }

    pub fn d_vec(&self, k: usize, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in v.iter() {
            if let Some(u) = self.d(&self.decode(k, i)) {
                acc.add(self.encode(&u), x.clone());
            }
        }
        acc.finish(self.dim(k + 1))
    }

    /// Matrix of a map `Ω^k → Ω^l` given on basis words.
    pub fn assemble(&self, k: usize, l: usize, f: impl Fn(&[usize]) -> Terms) -> SparseMatrix {
        let cols = (0..self.dim(k)).map(|i| self.to_vec(l, f(&self.decode(k, i)))).collect();
        SparseMatrix::from_columns(self.dim(l), cols)
    }

    /// The diagonal action of each basis element of H on `Ω^k`, with `H`
    /// acting on the unit of `A⁺` through the counit.
    pub fn actions(&self, h: &HopfAlgebra, k: usize) -> Vec<SparseMatrix> {
        let a = &self.algebra.action;
        (0..h.dim())
            .map(|t| {
                let dim = self.dim(k);
                let mut acc = SparseMatrix::zero(dim, dim);
                for (ix, c) in h.iterated_coproduct(t, k + 1) {
                    let mut op = if k == 0 {
                        a[ix[0]].clone()
                    } else {
                        a[ix[0]].direct_sum(&SparseMatrix::identity(1).scale(h.counit(ix[0])))
                    };
                    for &ti in &ix[1..] {
                        op = op.kron(&a[ti]);
                    }
                    acc = acc.add_scaled(&op, &c);
                }
                acc
            })
            .collect()
    }
}

/// The operator of `y = Σ y_t e_t` from the basis operators.
pub fn combine_ops(ops: &[SparseMatrix], y: &SparseVec) -> SparseMatrix {
    let (r, c) = (ops[0].rows(), ops[0].cols());
    y.iter().fold(SparseMatrix::zero(r, c), |acc, (t, x)| acc.add_scaled(&ops[t], x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::{group_algebra, trivial, Group};

    fn c2_forms() -> FormCalculus {
        let h = trivial();
        FormCalculus::new(HAlgebra::from_hopf_trivial(&group_algebra(&Group::cyclic(2)), &h))
    }

    #[test]
    fn encode_roundtrip() {
        let f = c2_forms();
        for k in 0..4 {
            assert_eq!(f.dim(k), if k == 0 { 2 } else { 3 << k });
            for i in 0..f.dim(k) {
                assert_eq!(f.encode(&f.decode(k, i)), i);
            }
        }
    }

    #[test]
    fn leibniz_and_associativity() {
        let f = c2_forms();
        // d(ω η) = dω η + (−1)^{|ω|} ω dη on basis forms of low degree
        for k1 in 0..3 {
            for k2 in 0..2 {
                for i in 0..f.dim(k1) {
                    for j in 0..f.dim(k2) {
                        let (v, w) = (SparseVec::unit(f.dim(k1), i), SparseVec::unit(f.dim(k2), j));
                        let l = f.d_vec(k1 + k2, &f.mul_vec(k1, &v, k2, &w));
                        let mut r = f.mul_vec(k1 + 1, &f.d_vec(k1, &v), k2, &w);
                        let s = f.mul_vec(k1, &v, k2 + 1, &f.d_vec(k2, &w));
                        r = if k1 % 2 == 0 { r.add(&s) } else { r.sub(&s) };
                        assert_eq!(l, r, "k1={k1} k2={k2} i={i} j={j}");
                    }
                }
            }
        }
        for i in 0..f.dim(1) {
            for j in 0..f.dim(1) {
                for l in 0..f.dim(0) {
                    let (u, v, w) = (SparseVec::unit(6, i), SparseVec::unit(6, j), SparseVec::unit(2, l));
                    let a = f.mul_vec(2, &f.mul_vec(1, &u, 1, &v), 0, &w);
                    let b = f.mul_vec(1, &u, 1, &f.mul_vec(1, &v, 0, &w));
                    assert_eq!(a, b);
                }
            }
        }
    }
}
