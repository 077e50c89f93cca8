//! Dense row-major matrices of exact scalars.

use std::fmt;

use super::echelon::{kernel_of_rows, Subspace};
use super::{LinalgError, Scalar, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn from_ints(rows: usize, cols: usize, data: &[i64]) -> Self {
        Matrix::from_vec(rows, cols, data.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix product dimension mismatch")
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|i| SparseVec::from_dense(self.row(i))).collect()
    }

    /// Row space in reduced echelon form.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.cols, self.sparse_rows())
    }

    /// Column space in reduced echelon form.
    pub fn column_space(&self) -> Subspace {
        self.transpose().row_space()
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    pub fn kernel(&self) -> Subspace {
        kernel_of_rows(self.cols, self.sparse_rows())
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Exact inverse by Gauss–Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let rows: Vec<SparseVec> = (0..n)
            .map(|i| {
                let mut pairs: Vec<(usize, Scalar)> = self
                    .row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect();
                pairs.push((n + i, Scalar::one()));
                SparseVec::from_pairs(2 * n, pairs)
            })
            .collect();
        let rref = Subspace::from_vectors(2 * n, rows);
        if rref.dim() != n || rref.pivots().iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinalgError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for (i, r) in rref.basis().iter().enumerate() {
            for (j, x) in r.iter() {
                if j >= n {
                    inv.set(i, j - n, x.clone());
                }
            }
        }
        Ok(inv)
    }

    /// `λ` with `self = λ·other`, requiring identical zero patterns and a
    /// constant nonzero ratio. Two zero matrices give `λ = 1`.
    pub fn proportionality(&self, other: &Matrix) -> Option<Scalar> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        let mut ratio: Option<Scalar> = None;
        for (a, b) in self.data.iter().zip(&other.data) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let r = a * &b.inv();
                    match &ratio {
                        None => ratio = Some(r),
                        Some(q) if *q == r => {}
                        Some(_) => return None,
                    }
                }
                _ => return None,
            }
        }
        Some(ratio.unwrap_or_else(Scalar::one))
    }

    /// Kronecker product with index `(i·r₂ + k, j·c₂ + l)`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let a = Matrix::from_ints(3, 3, &[2, 1, 0, 0, 1, 4, 1, 0, 1]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn singular_inverse_fails() {
        let a = Matrix::from_ints(2, 2, &[1, 2, 2, 4]);
        assert_eq!(a.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn rank_nullity_small() {
        let a = Matrix::from_ints(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.kernel().dim(), 2);
        for k in a.kernel().basis() {
            assert!(a.mul_vec(&k.to_dense()).iter().all(Scalar::is_zero));
        }
    }
}
