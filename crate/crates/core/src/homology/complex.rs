//! Hom-complexes between paracomplexes and their homology.

use crate::ayd::{hom_ayd, AydModule, Paracomplex};
use crate::exactla::{Accumulator, Scalar, SparseMatrix, SparseVec, Subspace};
use crate::report::{Check, ValidationReport, Witness};
use crate::HopfError;

/// An AYD map `P → Q` of parity `p`: `parts[0] : P₀ → Q_p` and
/// `parts[1] : P₁ → Q_{1−p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub parity: usize,
    pub parts: [SparseMatrix; 2],
}

impl ChainMap {
    pub fn identity(p: &Paracomplex) -> Self {
        ChainMap { parity: 0, parts: [SparseMatrix::identity(p.c0.dim), SparseMatrix::identity(p.c1.dim)] }
    }

    /// `y ∘ self`, of parity `|self| + |y|`.
    pub fn then(&self, y: &ChainMap) -> Result<ChainMap, HopfError> {
        let p = self.parity;
        let (a, b) = (&y.parts[p], &y.parts[1 - p]);
        if a.cols() != self.parts[0].rows() || b.cols() != self.parts[1].rows() {
            return Err(HopfError::Structure(format!(
                "cannot compose: {}x{} after {}x{}",
                a.rows(),
                a.cols(),
                self.parts[0].rows(),
                self.parts[0].cols()
            )));
        }
        Ok(ChainMap { parity: (p + y.parity) % 2, parts: [a.compose(&self.parts[0]), b.compose(&self.parts[1])] })
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        ChainMap { parity: self.parity, parts: [self.parts[0].sub(&other.parts[0]), self.parts[1].sub(&other.parts[1])] }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(SparseMatrix::is_zero)
    }
}

/// `Hom(P, Q)` with `∂f = ∂_Q f − (−1)^{|f|} f ∂_P`.
///
/// The space of parity `p` is `Hom(P₀, Q_p) ⊕ Hom(P₁, Q_{1−p})`, each block
/// with the echelon basis of its solved AYD maps (matrices flattened row by
/// row).
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub source: Paracomplex,
    pub target: Paracomplex,
    blocks: [[Subspace; 2]; 2],
    /// `∂ : Hom_0 → Hom_1` and `∂ : Hom_1 → Hom_0` in block coordinates.
    pub d: [SparseMatrix; 2],
}

fn flatten(m: &SparseMatrix) -> SparseVec {
    let c = m.cols();
    let mut acc = Accumulator::new();
    for (j, col) in m.columns().iter().enumerate() {
        for (i, x) in col.iter() {
            acc.add(i * c + j, x.clone());
        }
    }
    acc.finish(m.rows() * c)
}

fn unflatten(v: &SparseVec, rows: usize, cols: usize) -> SparseMatrix {
    let mut out: Vec<Accumulator> = (0..cols).map(|_| Accumulator::new()).collect();
    for (k, x) in v.iter() {
        out[k % cols].add(k / cols, x.clone());
    }
    SparseMatrix::from_columns(rows, out.into_iter().map(|a| a.finish(rows)).collect())
}

fn module(p: &Paracomplex, k: usize) -> &AydModule {
    if k == 0 {
        &p.c0
    } else {
        &p.c1
    }
}

fn diff(p: &Paracomplex, k: usize) -> &SparseMatrix {
    if k == 0 {
        &p.d0
    } else {
        &p.d1
    }
}

impl HomComplex {
    pub fn new(source: &Paracomplex, target: &Paracomplex) -> Result<Self, HopfError> {
        let (ns, nt) = (source.c0.h_action.len(), target.c0.h_action.len());
        if ns != nt {
            return Err(HopfError::Structure(format!("paracomplexes over Hopf algebras of dimension {ns} and {nt}")));
        }
        let block = |i: usize, j: usize| {
            let (m, n) = (module(source, i), module(target, j));
            Subspace::from_vectors(m.dim * n.dim, hom_ayd(m, n).iter().map(flatten))
        };
        let blocks = [[block(0, 0), block(1, 1)], [block(0, 1), block(1, 0)]];
        let mut c = HomComplex {
            source: source.clone(),
            target: target.clone(),
            blocks,
            d: [SparseMatrix::zero(0, 0), SparseMatrix::zero(0, 0)],
        };
        c.d = [0, 1].map(|p| {
            let cols = (0..c.dim(p))
                .map(|i| {
                    let f = c.chain_map(p, &SparseVec::unit(c.dim(p), i));
                    c.coordinates(&c.boundary(&f)).expect("the boundary of an AYD map is an AYD map")
                })
                .collect();
            SparseMatrix::from_columns(c.dim(1 - p), cols)
        });
        Ok(c)
    }

    pub fn dim(&self, parity: usize) -> usize {
        self.blocks[parity].iter().map(Subspace::dim).sum()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim(0), self.dim(1))
    }

    fn shape(&self, parity: usize, k: usize) -> (usize, usize) {
        let tgt = if k == 0 { parity } else { 1 - parity };
        (module(&self.target, tgt).dim, module(&self.source, k).dim)
    }

    /// The AYD map with the given coordinates.
    pub fn chain_map(&self, parity: usize, coords: &SparseVec) -> ChainMap {
        let n0 = self.blocks[parity][0].dim();
        let parts = [0, 1].map(|k| {
            let (rows, cols) = self.shape(parity, k);
            let sub = &self.blocks[parity][k];
            let c = if k == 0 { coords.window(0, n0) } else { coords.window(n0, sub.dim()) };
            unflatten(&sub.combine(&c), rows, cols)
        });
        ChainMap { parity, parts }
    }

    /// Coordinates of an AYD map, or `None` if it is not one.
    pub fn coordinates(&self, f: &ChainMap) -> Option<SparseVec> {
        let p = f.parity;
        let n = self.dim(p);
        let mut pairs = Vec::new();
        let mut offset = 0;
        for k in 0..2 {
            if (f.parts[k].rows(), f.parts[k].cols()) != self.shape(p, k) {
                return None;
            }
            let sub = &self.blocks[p][k];
            let c = sub.coordinates(&flatten(&f.parts[k]))?;
            pairs.extend(c.into_iter().enumerate().map(|(i, x)| (offset + i, x)));
            offset += sub.dim();
        }
        Some(SparseVec::from_pairs(n, pairs))
    }

    /// `∂_Q f − (−1)^{|f|} f ∂_P`, computed on the matrices.
    pub fn boundary(&self, f: &ChainMap) -> ChainMap {
        let p = f.parity;
        let s = if p == 0 { Scalar::one() } else { -Scalar::one() };
        let (dq_p, dq_q) = (diff(&self.target, p), diff(&self.target, 1 - p));
        let [f0, f1] = &f.parts;
        ChainMap {
            parity: 1 - p,
            parts: [
                dq_p.compose(f0).sub(&f1.compose(&self.source.d0).scale(&s)),
                dq_q.compose(f1).sub(&f0.compose(&self.source.d1).scale(&s)),
            ],
        }
    }

    pub fn is_cycle(&self, f: &ChainMap) -> bool {
        self.boundary(f).is_zero()
    }

    /// Whether `f` lies in the image of `∂`.
    pub fn is_boundary(&self, f: &ChainMap) -> bool {
        match self.coordinates(f) {
            None => false,
            Some(v) => self.d[1 - f.parity].image().contains(&v),
        }
    }

    /// `∂² = 0` in both parities, on the coordinate matrices and on the
    /// underlying maps of every basis element.
    pub fn check(&self) -> ValidationReport {
        let mut rep = ValidationReport::new("hom_complex");
        for p in 0..2 {
            let dd = self.d[1 - p].compose(&self.d[p]);
            let w = (!dd.is_zero()).then(|| {
                let c = (0..dd.cols()).find(|&c| !dd.column(c).is_zero()).unwrap_or(0);
                Witness::new(vec![p, c], format!("{:?}", dd.column(c)), "0")
            });
            rep.push(Check::from_witness(format!("d^2 = 0 [parity {p}]"), w));
        }
        let w = (0..2).find_map(|p| {
            (0..self.dim(p)).find_map(|i| {
                let f = self.chain_map(p, &SparseVec::unit(self.dim(p), i));
                let dd = self.boundary(&self.boundary(&f));
                (!dd.is_zero()).then(|| Witness::new(vec![p, i], "d d f", "0"))
            })
        });
        rep.push(Check::from_witness("d^2 = 0 on maps", w));
        rep
    }
}

#[derive(Clone, Debug)]
pub struct HomologyRanks {
    pub ranks: [usize; 2],
    /// Cycles whose classes form a basis of the homology, in Hom coordinates.
    pub representatives: [Vec<SparseVec>; 2],
}

pub fn homology_ranks(c: &HomComplex) -> HomologyRanks {
    let reps = [0, 1].map(|p| {
        let mut span = c.d[1 - p].image();
        let mut out = Vec::new();
        for v in c.d[p].kernel().basis() {
            let r = span.reduce(v);
            if !r.is_zero() {
                span = span.sum(&Subspace::from_vectors(c.dim(p), [r.clone()]));
                out.push(r);
            }
        }
        out
    });
    HomologyRanks { ranks: [reps[0].len(), reps[1].len()], representatives: reps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::trivial;

    fn toy(d0: SparseMatrix, d1: SparseMatrix, n0: usize, n1: usize) -> Paracomplex {
        let h = trivial();
        Paracomplex { c0: AydModule::trivial(&h, n0), c1: AydModule::trivial(&h, n1), d0, d1 }
    }

    #[test]
    fn zero_complex() {
        let z = toy(SparseMatrix::zero(0, 0), SparseMatrix::zero(0, 0), 0, 0);
        let c = HomComplex::new(&z, &z).unwrap();
        assert_eq!(c.dims(), (0, 0));
        assert!(c.check().all_passed());
        assert_eq!(homology_ranks(&c).ranks, [0, 0]);
    }

    #[test]
    fn zero_differential() {
        // ℂ² in even degree: Hom_0 = M_2, everything is a cycle
        let p = toy(SparseMatrix::zero(0, 2), SparseMatrix::zero(2, 0), 2, 0);
        let q = toy(SparseMatrix::zero(0, 1), SparseMatrix::zero(1, 0), 1, 0);
        let c = HomComplex::new(&q, &p).unwrap();
        assert_eq!(homology_ranks(&c).ranks, [2, 0]);
    }

    #[test]
    fn contractible() {
        // ℂ --id--> ℂ --0--> ℂ: ∂² = 0 since T = id on trivial modules
        let p = toy(SparseMatrix::identity(1), SparseMatrix::zero(1, 1), 1, 1);
        let c = HomComplex::new(&p, &p).unwrap();
        assert!(c.check().all_passed());
        assert_eq!(homology_ranks(&c).ranks, [0, 0]);
    }

    #[test]
    fn flatten_round_trip() {
        let m = SparseMatrix::from_dense(&crate::Matrix::from_ints(2, 3, &[1, 0, 2, 0, -1, 3]));
        assert_eq!(unflatten(&flatten(&m), 2, 3), m);
    }

    #[test]
    fn composition_with_identity() {
        let p = toy(SparseMatrix::zero(1, 2), SparseMatrix::zero(2, 1), 2, 1);
        let c = HomComplex::new(&p, &p).unwrap();
        let id = ChainMap::identity(&p);
        assert!(c.is_cycle(&id));
        for par in 0..2 {
            for i in 0..c.dim(par) {
                let f = c.chain_map(par, &SparseVec::unit(c.dim(par), i));
                assert_eq!(f.then(&id).unwrap(), f);
                assert_eq!(id.then(&f).unwrap(), f);
            }
        }
    }
}
