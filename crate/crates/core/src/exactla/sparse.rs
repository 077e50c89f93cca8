//! Sparse vectors and column-compressed matrices.
//!
//! Form spaces grow quickly (tens of thousands of basis elements) while the
//! operators on them touch only a handful of coordinates per column, so the
//! module-level code works with these instead of [`Matrix`].

use std::collections::BTreeMap;

use super::{LinalgError, Matrix, Scalar};

/// A vector stored as sorted `(index, value)` pairs with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "unit vector index {i} out of range {dim}");
        SparseVec { dim, entries: vec![(i, Scalar::one())] }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        let entries = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        SparseVec { dim: v.len(), entries }
    }

    /// Builds from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, x) in pairs {
            assert!(i < dim, "index {i} out of range {dim}");
            if x.is_zero() {
                continue;
            }
            match acc.get_mut(&i) {
                Some(v) => *v += &x,
                None => {
                    acc.insert(i, x);
                }
            }
        }
        Self::from_map(dim, acc)
    }

    pub fn from_map(dim: usize, map: BTreeMap<usize, Scalar>) -> Self {
        let entries = map.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        SparseVec { dim, entries }
    }

    /// Trusts the caller that `entries` are sorted, in range and nonzero.
    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, x)| *i < dim && !x.is_zero()));
        SparseVec { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, x)| (*i, x))
    }

    pub fn first(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, x)| (*i, x))
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn get_ref(&self, i: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &self.entries[k].1)
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero(self.dim);
        }
        let entries = self.entries.iter().map(|(i, x)| (*i, x * c)).collect();
        SparseVec { dim: self.dim, entries }
    }

    pub fn neg(&self) -> SparseVec {
        let entries = self.entries.iter().map(|(i, x)| (*i, -x)).collect();
        SparseVec { dim: self.dim, entries }
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &Scalar) -> SparseVec {
        assert_eq!(self.dim, other.dim, "sparse vector dimension mismatch");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { dim: self.dim, entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Scalar::from_int(-1))
    }

    /// Embeds into a larger space by shifting every index by `offset`.
    pub fn shifted(&self, dim: usize, offset: usize) -> SparseVec {
        assert!(offset + self.dim <= dim);
        let entries = self.entries.iter().map(|(i, x)| (i + offset, x.clone())).collect();
        SparseVec { dim, entries }
    }

    /// Restricts to the index window `[start, start + len)`, reindexed from 0.
    pub fn window(&self, start: usize, len: usize) -> SparseVec {
        let entries = self
            .entries
            .iter()
            .filter(|(i, _)| *i >= start && *i < start + len)
            .map(|(i, x)| (i - start, x.clone()))
            .collect();
        SparseVec { dim: len, entries }
    }

    pub fn dot_dense(&self, w: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, x) in &self.entries {
            if !w[*i].is_zero() {
                acc += &(x * &w[*i]);
            }
        }
        acc
    }
}

/// Accumulates `Σ c_k v_k` without re-merging after every term.
#[derive(Debug, Default)]
pub struct Accumulator {
    map: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator { map: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, x: Scalar) {
        if x.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(v) => *v += &x,
            None => {
                self.map.insert(i, x);
            }
        }
    }

    pub fn add_scaled(&mut self, v: &SparseVec, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.add(i, x * c);
        }
    }

    pub fn finish(self, dim: usize) -> SparseVec {
        SparseVec::from_map(dim, self.map)
    }
}

/// A matrix stored by columns; column `j` is the image of the basis vector `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![SparseVec::zero(rows); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, columns: (0..n).map(|i| SparseVec::unit(n, i)).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        assert!(columns.iter().all(|c| c.dim() == rows), "column dimension mismatch");
        SparseMatrix { rows, cols: columns.len(), columns }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let columns = (0..m.cols())
            .map(|j| SparseVec::from_dense(&m.column(j)))
            .collect();
        SparseMatrix { rows: m.rows(), cols: m.cols(), columns }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
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

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.columns[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.cols, "apply: dimension mismatch");
        let mut acc = Accumulator::new();
        for (j, x) in v.iter() {
            acc.add_scaled(&self.columns[j], x);
        }
        acc.finish(self.rows)
    }

    pub fn try_apply(&self, v: &SparseVec) -> Result<SparseVec, LinalgError> {
        if v.dim() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.dim() });
        }
        Ok(self.apply(v))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "compose: dimension mismatch");
        let columns = other.columns.iter().map(|c| self.apply(c)).collect();
        SparseMatrix { rows: self.rows, cols: other.cols, columns }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
                cols[i].push((j, x.clone()));
            }
        }
        let columns = cols
            .into_iter()
            .map(|e| SparseVec::from_sorted_unchecked(self.cols, e))
            .collect();
        SparseMatrix { rows: self.cols, cols: self.rows, columns }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(other, &Scalar::from_int(-1))
    }

    pub fn add_scaled(&self, other: &SparseMatrix, c: &Scalar) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add: shape mismatch");
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.add_scaled(b, c))
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        let columns = self.columns.iter().map(|v| v.scale(c)).collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    /// The rows as sparse vectors (the columns of the transpose).
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        self.transpose().columns
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let rows = self.rows + other.rows;
        let mut columns: Vec<SparseVec> = self.columns.iter().map(|c| c.shifted(rows, 0)).collect();
        columns.extend(other.columns.iter().map(|c| c.shifted(rows, self.rows)));
        SparseMatrix { rows, cols: self.cols + other.cols, columns }
    }

    /// Kronecker product: `(A ⊗ B)(e_i ⊗ e_j) = A e_i ⊗ B e_j` with index `i·dim_B + j`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let rows = self.rows * other.rows;
        let mut columns = Vec::with_capacity(self.cols * other.cols);
        for a in &self.columns {
            for b in &other.columns {
                let mut e = Vec::with_capacity(a.nnz() * b.nnz());
                for (i, x) in a.iter() {
                    for (j, y) in b.iter() {
                        e.push((i * other.rows + j, x * y));
                    }
                }
                columns.push(SparseVec::from_sorted_unchecked(rows, e));
            }
        }
        SparseMatrix { rows, cols: self.cols * other.cols, columns }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(dim: usize, pairs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(dim, pairs.iter().map(|&(i, x)| (i, Scalar::from_int(x))))
    }

    #[test]
    fn add_scaled_cancels() {
        let a = v(5, &[(0, 1), (3, 2)]);
        let b = v(5, &[(3, 1), (4, 7)]);
        let c = a.add_scaled(&b, &Scalar::from_int(-2));
        assert_eq!(c, v(5, &[(0, 1), (4, -14)]));
    }

    #[test]
    fn from_pairs_merges_duplicates() {
        let a = v(4, &[(2, 1), (1, 3), (2, -1)]);
        assert_eq!(a.entries().len(), 1);
        assert_eq!(a.get(1), Scalar::from_int(3));
    }

    #[test]
    fn compose_matches_dense() {
        let a = Matrix::from_ints(2, 3, &[1, 2, 0, 0, -1, 3]);
        let b = Matrix::from_ints(3, 2, &[1, 1, 0, 2, 5, 0]);
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.compose(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
    }

    #[test]
    fn kron_of_identities() {
        let i2 = SparseMatrix::identity(2);
        let i3 = SparseMatrix::identity(3);
        assert_eq!(i2.kron(&i3), SparseMatrix::identity(6));
    }
}
