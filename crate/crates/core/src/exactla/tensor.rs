//! Three-index tensors for structure constants.

use super::{LinalgError, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    First,
    Second,
    Third,
}

/// Entries `t[i][j][k]` with dims `(d₁, d₂, d₃)`, stored with `k` fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 { dims: (d1, d2, d3), data: vec![Scalar::zero(); d1 * d2 * d3] }
    }

    pub fn from_fn(d1: usize, d2: usize, d3: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(d1 * d2 * d3);
        for i in 0..d1 {
            for j in 0..d2 {
                for k in 0..d3 {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dims: (d1, d2, d3), data }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims.1 + j) * self.dims.2 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        let n = self.idx(i, j, k);
        self.data[n] = x;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }
}

/// Contracts `v` against one slot.
///
/// The result is the operator from the first remaining slot to the second:
/// entry `(b, a)` is `Σ_s v_s t[..]` with `a` the lower remaining slot index
/// and `b` the higher one. Contracting the multiplication tensor in the first
/// slot with `x` therefore gives left multiplication by `x`.
pub fn tensor_contract(t: &Tensor3, v: &[Scalar], slot: Slot) -> Result<Matrix, LinalgError> {
    let (d1, d2, d3) = t.dims;
    let (ds, da, db) = match slot {
        Slot::First => (d1, d2, d3),
        Slot::Second => (d2, d1, d3),
        Slot::Third => (d3, d1, d2),
    };
    if v.len() != ds {
        return Err(LinalgError::DimensionMismatch { expected: ds, got: v.len() });
    }
    let mut m = Matrix::zeros(db, da);
    for (s, vs) in v.iter().enumerate() {
        if vs.is_zero() {
            continue;
        }
        for a in 0..da {
            for b in 0..db {
                let x = match slot {
                    Slot::First => t.get(s, a, b),
                    Slot::Second => t.get(a, s, b),
                    Slot::Third => t.get(a, b, s),
                };
                if !x.is_zero() {
                    let cur = m.get(b, a) + &(vs * x);
                    m.set(b, a, cur);
                }
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contraction_shapes() {
        let t = Tensor3::from_fn(2, 3, 4, |i, j, k| Scalar::from_int((i * 100 + j * 10 + k) as i64));
        let m = tensor_contract(&t, &[Scalar::zero(), Scalar::one()], Slot::First).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 3));
        assert_eq!(m.get(2, 1), &Scalar::from_int(112));
        assert!(tensor_contract(&t, &[Scalar::one()], Slot::Second).is_err());
    }
}
