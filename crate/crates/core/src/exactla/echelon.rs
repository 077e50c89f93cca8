//! Reduced row echelon forms, subspaces, kernels and linear solves.
//!
//! Pivots are always the first nonzero column and leading entries are
//! normalized to 1, so a subspace has exactly one representation.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::sparse::Accumulator;
use super::{LinalgError, Matrix, Scalar, SparseMatrix, SparseVec};

/// A linear subspace of `K^ambient`, stored as its reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: HashMap<usize, usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_rref_rows(ambient, (0..ambient).map(|i| SparseVec::unit(ambient, i)).collect())
    }

    fn from_rref_rows(ambient: usize, rows: Vec<SparseVec>) -> Self {
        let pivots: Vec<usize> = rows.iter().map(|r| r.first().expect("zero row").0).collect();
        let pivot_row = pivots.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        Subspace { ambient, rows, pivots, pivot_row }
    }

    /// Span of the given vectors.
    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        // Forward elimination in a scratch buffer; `live` holds the indices
        // that may be nonzero, smallest first.
        let mut by_pivot: Vec<Option<SparseVec>> = vec![None; ambient];
        let mut buf: Vec<Option<Scalar>> = vec![None; ambient];
        let mut live: BTreeSet<usize> = BTreeSet::new();
        for v in vectors {
            assert_eq!(v.dim(), ambient, "subspace ambient mismatch");
            for (i, x) in v.iter() {
                buf[i] = Some(x.clone());
                live.insert(i);
            }
            while let Some(c) = live.pop_first() {
                let Some(x) = buf[c].take() else { continue };
                if x.is_zero() {
                    continue;
                }
                match &by_pivot[c] {
                    Some(r) => {
                        for (j, y) in r.iter().skip(1) {
                            let t = &x * y;
                            match &mut buf[j] {
                                Some(b) => *b -= &t,
                                slot => *slot = Some(-t),
                            }
                            live.insert(j);
                        }
                    }
                    None => {
                        let k = x.inv();
                        let mut pairs = vec![(c, Scalar::one())];
                        for j in std::mem::take(&mut live) {
                            if let Some(y) = buf[j].take() {
                                if !y.is_zero() {
                                    pairs.push((j, &y * &k));
                                }
                            }
                        }
                        by_pivot[c] = Some(SparseVec::from_sorted_unchecked(ambient, pairs));
                        break;
                    }
                }
            }
        }
        let mut echelon: BTreeMap<usize, SparseVec> =
            by_pivot.into_iter().enumerate().filter_map(|(c, r)| r.map(|r| (c, r))).collect();
        // Back substitution, highest pivot first, so later rows are already reduced.
        let pivots: Vec<usize> = echelon.keys().copied().collect();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for &p in pivots.iter().rev() {
            let row = echelon.remove(&p).unwrap();
            let hits: Vec<(usize, Scalar)> = row
                .iter()
                .skip(1)
                .filter(|(c, _)| done.contains_key(c))
                .map(|(c, x)| (c, x.clone()))
                .collect();
            let reduced = if hits.is_empty() {
                row
            } else {
                let mut acc = Accumulator::new();
                acc.add_scaled(&row, &Scalar::one());
                for (c, x) in hits {
                    acc.add_scaled(&done[&c], &-x);
                }
                acc.finish(ambient)
            };
            done.insert(p, reduced);
        }
        Subspace::from_rref_rows(ambient, done.into_values().collect())
    }

    pub fn from_dense_vectors(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Subspace::from_vectors(ambient, vectors.iter().map(|v| SparseVec::from_dense(v)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    /// The reduced echelon basis, ordered by pivot.
    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo the subspace; zero at every pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.ambient, "reduce: ambient mismatch");
        let mut hits = Vec::new();
        for (c, x) in v.iter() {
            if let Some(&k) = self.pivot_row.get(&c) {
                hits.push((k, x));
            }
        }
        if hits.is_empty() {
            return v.clone();
        }
        if hits.len() == 1 {
            let (k, x) = hits[0];
            return v.add_scaled(&self.rows[k], &-x);
        }
        let mut acc = Accumulator::new();
        acc.add_scaled(v, &Scalar::one());
        for (k, x) in hits {
            acc.add_scaled(&self.rows[k], &-x);
        }
        acc.finish(self.ambient)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates in the echelon basis, read off at the pivots.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.get(p)).collect())
    }

    /// Like [`Subspace::coordinates`] but without the membership check.
    pub fn coordinates_unchecked(&self, v: &SparseVec) -> SparseVec {
        let pairs = self
            .pivots
            .iter()
            .enumerate()
            .filter_map(|(k, &p)| v.get_ref(p).map(|x| (k, x.clone())));
        SparseVec::from_sorted_unchecked(self.dim(), pairs.collect())
    }

    /// Linear combination of the basis with the given coordinates.
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        assert_eq!(coords.dim(), self.dim());
        let mut acc = Accumulator::new();
        for (k, x) in coords.iter() {
            acc.add_scaled(&self.rows[k], x);
        }
        acc.finish(self.ambient)
    }

    /// Non-pivot positions; the unit vectors there span a complement.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.codim());
        let mut piv = self.pivots.iter().peekable();
        for i in 0..self.ambient {
            if piv.peek() == Some(&&i) {
                piv.next();
            } else {
                out.push(i);
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_vectors(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // Kernel of (x, y) ↦ Σ x_i u_i − Σ y_j w_j.
        let (a, b) = (self.dim(), other.dim());
        let mut cols: Vec<SparseVec> = self.rows.clone();
        cols.extend(other.rows.iter().map(SparseVec::neg));
        let m = SparseMatrix::from_columns(self.ambient, cols);
        let ker = kernel_of_rows(a + b, m.row_vectors());
        let vecs = ker.basis().iter().map(|k| self.combine(&k.window(0, a))).collect::<Vec<_>>();
        Subspace::from_vectors(self.ambient, vecs)
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.ambient);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter() {
                m.set(i, j, x.clone());
            }
        }
        m
    }
}

/// Kernel of the matrix whose rows are `rows`.
pub fn kernel_of_rows(cols: usize, rows: Vec<SparseVec>) -> Subspace {
    let rref = Subspace::from_vectors(cols, rows);
    kernel_from_rref(&rref)
}

fn kernel_from_rref(rref: &Subspace) -> Subspace {
    let cols = rref.ambient;
    let mut free_entries: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
    for (k, r) in rref.rows.iter().enumerate() {
        let p = rref.pivots[k];
        for (c, x) in r.iter().skip(1) {
            free_entries.entry(c).or_default().push((p, -x));
        }
    }
    let vecs: Vec<SparseVec> = rref
        .complement_positions()
        .into_iter()
        .map(|f| {
            let mut pairs = free_entries.remove(&f).unwrap_or_default();
            pairs.push((f, Scalar::one()));
            SparseVec::from_pairs(cols, pairs)
        })
        .collect();
    Subspace::from_vectors(cols, vecs)
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Solution set of `A x = b`: a particular solution plus the kernel of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub particular: SparseVec,
    pub direction: Subspace,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.direction.dim()
    }

    pub fn is_unique(&self) -> bool {
        self.direction.dim() == 0
    }

    pub fn contains(&self, x: &SparseVec) -> bool {
        self.direction.contains(&x.sub(&self.particular))
    }
}

/// Solves `A x = b` given the rows of `A`; `None` when inconsistent.
pub fn solve_rows(cols: usize, rows: &[SparseVec], rhs: &SparseVec) -> Result<Option<AffineSpace>, LinalgError> {
    if rhs.dim() != rows.len() {
        return Err(LinalgError::DimensionMismatch { expected: rows.len(), got: rhs.dim() });
    }
    let aug: Vec<SparseVec> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            if r.dim() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, got: r.dim() });
            }
            let mut e: Vec<(usize, Scalar)> = r.iter().map(|(j, x)| (j, x.clone())).collect();
            let bi = rhs.get(i);
            if !bi.is_zero() {
                e.push((cols, bi));
            }
            Ok(SparseVec::from_sorted_unchecked(cols + 1, e))
        })
        .collect::<Result<_, _>>()?;
    let rref = Subspace::from_vectors(cols + 1, aug);
    if rref.pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let particular = SparseVec::from_pairs(
        cols,
        rref.rows.iter().zip(&rref.pivots).map(|(r, &p)| (p, r.get(cols))),
    );
    let restricted = Subspace::from_rref_rows(cols, rref.rows.iter().map(|r| r.window(0, cols)).collect());
    Ok(Some(AffineSpace { particular, direction: kernel_from_rref(&restricted) }))
}

/// Full affine solution space of `A x = b`, or `None` if there is none.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<Option<AffineSpace>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch { expected: a.rows(), got: b.len() });
    }
    solve_rows(a.cols(), &a.sparse_rows(), &SparseVec::from_dense(b))
}

#[derive(Clone, Debug)]
pub struct KernelImageQuotient {
    pub kernel: Subspace,
    pub image: Subspace,
    /// Coordinates of the target modulo the image, on the complement spanned
    /// by the unit vectors at the image's non-pivot positions.
    pub quotient_projection: Matrix,
}

pub fn kernel_image_quotient(a: &Matrix) -> KernelImageQuotient {
    let image = a.column_space();
    let kernel = a.kernel();
    let comp = image.complement_positions();
    let mut q = Matrix::zeros(comp.len(), a.rows());
    let index: HashMap<usize, usize> = comp.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    for j in 0..a.rows() {
        let r = image.reduce(&SparseVec::unit(a.rows(), j));
        for (i, x) in r.iter() {
            q.set(index[&i], j, x.clone());
        }
    }
    KernelImageQuotient { kernel, image, quotient_projection: q }
}

/// `K^n / U`, realized on the complement spanned by the unit vectors at the
/// non-pivot positions of `U`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub sub: Subspace,
    pub complement: Vec<usize>,
    /// `K^n → K^n / U`.
    pub projection: SparseMatrix,
    /// The section `K^n / U → K^n` onto the complement.
    pub lift: SparseMatrix,
}

impl Quotient {
    pub fn new(sub: Subspace) -> Self {
        let n = sub.ambient();
        let complement = sub.complement_positions();
        let q = complement.len();
        let index: HashMap<usize, usize> = complement.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let projection = SparseMatrix::from_columns(
            q,
            (0..n)
                .map(|j| {
                    let r = sub.reduce(&SparseVec::unit(n, j));
                    SparseVec::from_pairs(q, r.iter().map(|(i, x)| (index[&i], x.clone())))
                })
                .collect(),
        );
        let lift = SparseMatrix::from_columns(n, complement.iter().map(|&p| SparseVec::unit(n, p)).collect());
        Quotient { sub, complement, projection, lift }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// `P X L` for an operator `X` preserving the subspace.
    pub fn descend(&self, x: &SparseMatrix) -> SparseMatrix {
        self.projection.compose(x).compose(&self.lift)
    }

    /// `X` maps the subspace into itself.
    pub fn is_invariant(&self, x: &SparseMatrix) -> bool {
        self.sub.basis().iter().all(|v| self.sub.contains(&x.apply(v)))
    }
}

impl SparseMatrix {
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.rows(), self.columns().iter().cloned())
    }

    pub fn kernel(&self) -> Subspace {
        kernel_of_rows(self.cols(), self.row_vectors())
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn identity_solve_is_unique() {
        let sol = solve_linear(&Matrix::identity(3), &[s(1), s(0), s(0)]).unwrap().unwrap();
        assert!(sol.is_unique());
        assert_eq!(sol.particular.to_dense(), vec![s(1), s(0), s(0)]);
    }

    #[test]
    fn zero_solve_is_everything() {
        let sol = solve_linear(&Matrix::zeros(2, 2), &[s(0), s(0)]).unwrap().unwrap();
        assert_eq!(sol.dim(), 2);
    }

    #[test]
    fn inconsistent_solve() {
        let a = Matrix::from_ints(2, 2, &[1, 1, 2, 2]);
        assert!(solve_linear(&a, &[s(1), s(3)]).unwrap().is_none());
    }

    #[test]
    fn kiq_identity_and_zero() {
        let k = kernel_image_quotient(&Matrix::identity(4));
        assert_eq!((k.kernel.dim(), k.image.dim(), k.quotient_projection.rows()), (0, 4, 0));
        let z = kernel_image_quotient(&Matrix::zeros(3, 4));
        assert_eq!((z.kernel.dim(), z.image.dim()), (4, 0));
        assert!(z.quotient_projection.is_identity());
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::from_dense_vectors(3, &[vec![s(2), s(4), s(0)], vec![s(0), s(1), s(1)]]);
        let b = Subspace::from_dense_vectors(3, &[vec![s(1), s(3), s(1)], vec![s(0), s(-3), s(-3)]]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
        assert!(a.basis()[0].get(0).is_one());
        assert!(a.basis()[0].get(1).is_zero());
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::from_dense_vectors(3, &[vec![s(1), s(0), s(0)], vec![s(0), s(1), s(0)]]);
        let b = Subspace::from_dense_vectors(3, &[vec![s(0), s(1), s(0)], vec![s(0), s(0), s(1)]]);
        let c = a.intersection(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&SparseVec::unit(3, 1)));
    }

    #[test]
    fn quotient_projection_kills_image() {
        let a = Matrix::from_ints(3, 2, &[1, 0, 1, 1, 0, 1]);
        let k = kernel_image_quotient(&a);
        assert!(k.quotient_projection.mul(&a).is_zero());
        assert_eq!(k.quotient_projection.rank(), 1);
    }
}
