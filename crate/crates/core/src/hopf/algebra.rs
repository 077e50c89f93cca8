//! Hopf algebra data given by structure constants, and its validation.

use serde::Serialize;

use crate::exactla::{Accumulator, FieldSpec, Matrix, Scalar, SparseMatrix, SparseVec, Tensor3};
use crate::report::{Check, ValidationReport, Witness};
use crate::HopfError;

/// Raw structure constants, not yet known to satisfy the axioms.
///
/// `mult[i][j][k]` is the coefficient of `e_k` in `e_i e_j`,
/// `comult[k][i][j]` the coefficient of `e_i ⊗ e_j` in `Δ(e_k)`, and column
/// `j` of `antipode` is `S(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: Tensor3,
    pub unit: Vec<Scalar>,
    pub comult: Tensor3,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

impl HopfData {
    pub fn check_shapes(&self) -> Result<(), HopfError> {
        let d = self.dim;
        let bad = |what: &str| Err(HopfError::Structure(format!("{what} has the wrong shape for dimension {d}")));
        if d == 0 {
            return Err(HopfError::Structure("dimension must be positive".into()));
        }
        if self.mult.dims() != (d, d, d) {
            return bad("multiplication tensor");
        }
        if self.comult.dims() != (d, d, d) {
            return bad("comultiplication tensor");
        }
        if self.unit.len() != d {
            return bad("unit");
        }
        if self.counit.len() != d {
            return bad("counit");
        }
        if self.antipode.rows() != d || self.antipode.cols() != d {
            return bad("antipode");
        }
        let entries = self
            .mult
            .entries()
            .iter()
            .chain(self.comult.entries())
            .chain(&self.unit)
            .chain(&self.counit);
        for x in entries {
            if x.field().join(self.field).ok() != Some(self.field) {
                return Err(HopfError::Structure(format!("scalar {x} is not in {}", self.field)));
            }
        }
        Ok(())
    }
}

/// Sparse lookup tables derived from [`HopfData`].
#[derive(Clone, Debug)]
pub(crate) struct Tables {
    pub d: usize,
    pub prod: Vec<SparseVec>,
    pub coprod: Vec<Vec<(usize, usize, Scalar)>>,
    pub s: Vec<SparseVec>,
    pub counit: Vec<Scalar>,
    pub unit: SparseVec,
}

impl Tables {
    pub fn new(h: &HopfData) -> Self {
        let d = h.dim;
        let mut prod = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                prod.push(SparseVec::from_pairs(d, (0..d).map(|k| (k, h.mult.get(i, j, k).clone()))));
            }
        }
        let coprod = (0..d)
            .map(|k| {
                let mut v = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        let x = h.comult.get(k, i, j);
                        if !x.is_zero() {
                            v.push((i, j, x.clone()));
                        }
                    }
                }
                v
            })
            .collect();
        let s = (0..d).map(|j| SparseVec::from_dense(&h.antipode.column(j))).collect();
        Tables { d, prod, coprod, s, counit: h.counit.clone(), unit: SparseVec::from_dense(&h.unit) }
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&self.prod[i * self.d + j], &(x * y));
            }
        }
        acc.finish(self.d)
    }

    /// Product in `H ⊗ H` with index `i·d + j`.
    pub fn mul2(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let d = self.d;
        let mut acc = Accumulator::new();
        for (p, x) in a.iter() {
            for (q, y) in b.iter() {
                let c = x * y;
                let l = &self.prod[(p / d) * d + q / d];
                let r = &self.prod[(p % d) * d + q % d];
                for (k, u) in l.iter() {
                    for (m, v) in r.iter() {
                        acc.add(k * d + m, &c * &(u * v));
                    }
                }
            }
        }
        acc.finish(d * d)
    }

    pub fn delta(&self, a: &SparseVec) -> SparseVec {
        let d = self.d;
        let mut acc = Accumulator::new();
        for (k, x) in a.iter() {
            for (i, j, c) in &self.coprod[k] {
                acc.add(i * d + j, x * c);
            }
        }
        acc.finish(d * d)
    }

    pub fn eps(&self, a: &SparseVec) -> Scalar {
        a.dot_dense(&self.counit)
    }

    pub fn antipode(&self, a: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, x) in a.iter() {
            acc.add_scaled(&self.s[j], x);
        }
        acc.finish(self.d)
    }
}

fn elem(v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter().map(|(i, x)| format!("({x})e{i}")).collect::<Vec<_>>().join(" + ")
}

/// Checks every Hopf axiom and reports each one separately.
pub fn validate_hopf(h: &HopfData) -> Result<ValidationReport, HopfError> {
    h.check_shapes()?;
    let t = Tables::new(h);
    let d = h.dim;
    let e = |i: usize| SparseVec::unit(d, i);
    let mut rep = ValidationReport::new(h.name.clone());

    // associativity
    let mut w = None;
    'assoc: for i in 0..d {
        for j in 0..d {
            let ij = &t.prod[i * d + j];
            for k in 0..d {
                let lhs = t.mul(ij, &e(k));
                let rhs = t.mul(&e(i), &t.prod[j * d + k]);
                if lhs != rhs {
                    w = Some(Witness::new(vec![i, j, k], elem(&lhs), elem(&rhs)));
                    break 'assoc;
                }
            }
        }
    }
    rep.push(Check::from_witness("associativity", w));

    // unitality
    let mut w = None;
    for i in 0..d {
        let l = t.mul(&t.unit, &e(i));
        let r = t.mul(&e(i), &t.unit);
        if l != e(i) {
            w = Some(Witness::new(vec![i], elem(&l), elem(&e(i))));
            break;
        }
        if r != e(i) {
            w = Some(Witness::new(vec![i], elem(&r), elem(&e(i))));
            break;
        }
    }
    rep.push(Check::from_witness("unitality", w));

    // coassociativity
    let mut w = None;
    for k in 0..d {
        let mut l = Accumulator::new();
        let mut r = Accumulator::new();
        for (i, j, c) in &t.coprod[k] {
            for (a, b, c2) in &t.coprod[*i] {
                l.add((a * d + b) * d + j, c * c2);
            }
            for (a, b, c2) in &t.coprod[*j] {
                r.add((i * d + a) * d + b, c * c2);
            }
        }
        let (l, r) = (l.finish(d * d * d), r.finish(d * d * d));
        if l != r {
            w = Some(Witness::new(vec![k], elem(&l), elem(&r)));
            break;
        }
    }
    rep.push(Check::from_witness("coassociativity", w));

    // counitality
    let mut w = None;
    for k in 0..d {
        let mut l = Accumulator::new();
        let mut r = Accumulator::new();
        for (i, j, c) in &t.coprod[k] {
            l.add(*j, c * &t.counit[*i]);
            r.add(*i, c * &t.counit[*j]);
        }
        let (l, r) = (l.finish(d), r.finish(d));
        if l != e(k) || r != e(k) {
            let bad = if l != e(k) { l } else { r };
            w = Some(Witness::new(vec![k], elem(&bad), elem(&e(k))));
            break;
        }
    }
    rep.push(Check::from_witness("counitality", w));

    // Δ multiplicative and unital
    let mut w = None;
    let one2 = t.delta(&t.unit);
    let unit2 = SparseVec::from_pairs(
        d * d,
        t.unit.iter().flat_map(|(i, x)| t.unit.iter().map(move |(j, y)| (i * d + j, x * y))),
    );
    if one2 != unit2 {
        w = Some(Witness::new(vec![], elem(&one2), elem(&unit2)));
    }
    'dm: for i in 0..d {
        for j in 0..d {
            let l = t.delta(&t.prod[i * d + j]);
            let r = t.mul2(&t.delta(&e(i)), &t.delta(&e(j)));
            if l != r && w.is_none() {
                w = Some(Witness::new(vec![i, j], elem(&l), elem(&r)));
                break 'dm;
            }
        }
    }
    rep.push(Check::from_witness("comultiplication_multiplicative", w));

    // ε multiplicative and unital
    let mut w = None;
    if !t.eps(&t.unit).is_one() {
        w = Some(Witness::new(vec![], t.eps(&t.unit), "1"));
    }
    'em: for i in 0..d {
        for j in 0..d {
            let l = t.eps(&t.prod[i * d + j]);
            let r = &t.counit[i] * &t.counit[j];
            if l != r && w.is_none() {
                w = Some(Witness::new(vec![i, j], l, r));
                break 'em;
            }
        }
    }
    rep.push(Check::from_witness("counit_multiplicative", w));

    // S(x₁)x₂ = ε(x)1 and x₁S(x₂) = ε(x)1
    let mut wl = None;
    let mut wr = None;
    for k in 0..d {
        let mut l = Accumulator::new();
        let mut r = Accumulator::new();
        for (i, j, c) in &t.coprod[k] {
            l.add_scaled(&t.mul(&t.s[*i], &e(*j)), c);
            r.add_scaled(&t.mul(&e(*i), &t.s[*j]), c);
        }
        let target = t.unit.scale(&t.counit[k]);
        let (l, r) = (l.finish(d), r.finish(d));
        if l != target && wl.is_none() {
            wl = Some(Witness::new(vec![k], elem(&l), elem(&target)));
        }
        if r != target && wr.is_none() {
            wr = Some(Witness::new(vec![k], elem(&r), elem(&target)));
        }
    }
    rep.push(Check::from_witness("antipode_left", wl));
    rep.push(Check::from_witness("antipode_right", wr));

    // μ(S⊗id)γ_r = ε⊗id and μ(id⊗S)ρ_l = id⊗ε
    let mut wl = None;
    let mut wr = None;
    'gal: for x in 0..d {
        for y in 0..d {
            let mut l = Accumulator::new();
            let mut r = Accumulator::new();
            for (i, j, c) in &t.coprod[x] {
                // γ_r(x⊗y) = x₁ ⊗ x₂y
                l.add_scaled(&t.mul(&t.s[*i], &t.prod[j * d + y]), c);
            }
            for (i, j, c) in &t.coprod[y] {
                // ρ_l(x⊗y) = xy₁ ⊗ y₂
                r.add_scaled(&t.mul(&t.prod[x * d + i], &t.s[*j]), c);
            }
            let (l, r) = (l.finish(d), r.finish(d));
            let lt = e(y).scale(&t.counit[x]);
            let rt = e(x).scale(&t.counit[y]);
            if l != lt && wl.is_none() {
                wl = Some(Witness::new(vec![x, y], elem(&l), elem(&lt)));
            }
            if r != rt && wr.is_none() {
                wr = Some(Witness::new(vec![x, y], elem(&r), elem(&rt)));
            }
            if wl.is_some() && wr.is_some() {
                break 'gal;
            }
        }
    }
    rep.push(Check::from_witness("antipode_galois_right", wl));
    rep.push(Check::from_witness("antipode_galois_left", wr));

    // S anti-multiplicative
    let mut w = None;
    let s1 = t.antipode(&t.unit);
    if s1 != t.unit {
        w = Some(Witness::new(vec![], elem(&s1), elem(&t.unit)));
    }
    'sm: for i in 0..d {
        for j in 0..d {
            let l = t.antipode(&t.prod[i * d + j]);
            let r = t.mul(&t.s[j], &t.s[i]);
            if l != r && w.is_none() {
                w = Some(Witness::new(vec![i, j], elem(&l), elem(&r)));
                break 'sm;
            }
        }
    }
    rep.push(Check::from_witness("antipode_antimultiplicative", w));

    // S anti-comultiplicative: Δ(S x) = S(x₂) ⊗ S(x₁), ε∘S = ε
    let mut w = None;
    for k in 0..d {
        let l = t.delta(&t.s[k]);
        let mut r = Accumulator::new();
        for (i, j, c) in &t.coprod[k] {
            for (a, u) in t.s[*j].iter() {
                for (b, v) in t.s[*i].iter() {
                    r.add(a * d + b, c * &(u * v));
                }
            }
        }
        let r = r.finish(d * d);
        if l != r {
            w = Some(Witness::new(vec![k], elem(&l), elem(&r)));
            break;
        }
        let es = t.eps(&t.s[k]);
        if es != t.counit[k] {
            w = Some(Witness::new(vec![k], es, &t.counit[k]));
            break;
        }
    }
    rep.push(Check::from_witness("antipode_anticomultiplicative", w));

    // S invertible
    let rank = h.antipode.rank();
    let c = if rank == d {
        Check::pass("antipode_invertible")
    } else {
        Check::fail("antipode_invertible", Witness::new(vec![], format!("rank {rank}"), format!("rank {d}")))
    };
    rep.push(c);

    for (name, m) in galois_maps(&t) {
        let r = m.rank();
        let c = if r == d * d {
            Check::pass(name)
        } else {
            Check::fail(name, Witness::new(vec![], format!("rank {r}"), format!("rank {}", d * d)))
        };
        rep.push(c.with_value(r));
    }
    Ok(rep)
}

/// The four Galois maps as `d² × d²` matrices.
pub(crate) fn galois_maps(t: &Tables) -> [(&'static str, SparseMatrix); 4] {
    let d = t.d;
    let build = |f: &dyn Fn(usize, usize, &mut Accumulator)| {
        let cols = (0..d * d)
            .map(|p| {
                let mut acc = Accumulator::new();
                f(p / d, p % d, &mut acc);
                acc.finish(d * d)
            })
            .collect();
        SparseMatrix::from_columns(d * d, cols)
    };
    // γ_l(x⊗y) = x₁y ⊗ x₂
    let gl = build(&|x, y, acc| {
        for (i, j, c) in &t.coprod[x] {
            for (k, u) in t.prod[i * d + y].iter() {
                acc.add(k * d + j, c * u);
            }
        }
    });
    // γ_r(x⊗y) = x₁ ⊗ x₂y
    let gr = build(&|x, y, acc| {
        for (i, j, c) in &t.coprod[x] {
            for (k, u) in t.prod[j * d + y].iter() {
                acc.add(i * d + k, c * u);
            }
        }
    });
    // ρ_l(x⊗y) = xy₁ ⊗ y₂
    let rl = build(&|x, y, acc| {
        for (i, j, c) in &t.coprod[y] {
            for (k, u) in t.prod[x * d + i].iter() {
                acc.add(k * d + j, c * u);
            }
        }
    });
    // ρ_r(x⊗y) = y₁ ⊗ xy₂
    let rr = build(&|x, y, acc| {
        for (i, j, c) in &t.coprod[y] {
            for (k, u) in t.prod[x * d + j].iter() {
                acc.add(i * d + k, c * u);
            }
        }
    });
    [("galois_gamma_l", gl), ("galois_gamma_r", gr), ("galois_rho_l", rl), ("galois_rho_r", rr)]
}

/// Composed coproduct term: basis indices and coefficient.
pub type CoproductTerm = (Vec<usize>, Scalar);

/// A validated finite-dimensional Hopf algebra with cached tables.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    data: HopfData,
    t: Tables,
    antipode_inv: Matrix,
    sinv: Vec<SparseVec>,
}

impl HopfAlgebra {
    /// Validates and wraps; any failed axiom is an error.
    pub fn new(data: HopfData) -> Result<Self, HopfError> {
        let rep = validate_hopf(&data)?;
        if let Some(c) = rep.failures().next() {
            return Err(HopfError::Axiom { name: data.name.clone(), check: Box::new(c.clone()) });
        }
        Ok(Self::new_unchecked(data))
    }

    /// Wraps without validating. The antipode must be invertible.
    pub fn new_unchecked(data: HopfData) -> Self {
        let antipode_inv = data.antipode.inverse().expect("antipode is not invertible");
        let sinv = (0..data.dim).map(|j| SparseVec::from_dense(&antipode_inv.column(j))).collect();
        let t = Tables::new(&data);
        HopfAlgebra { data, t, antipode_inv, sinv }
    }

    pub fn data(&self) -> &HopfData {
        &self.data
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn field(&self) -> FieldSpec {
        self.data.field
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(self.dim(), i)
    }

    pub fn one(&self) -> SparseVec {
        self.t.unit.clone()
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.data.antipode
    }

    pub fn antipode_inv_matrix(&self) -> &Matrix {
        &self.antipode_inv
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.t.prod[i * self.dim() + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.t.mul(a, b)
    }

    /// `Δ(e_k)` as `(i, j, c)` triples.
    pub fn coproduct(&self, k: usize) -> &[(usize, usize, Scalar)] {
        &self.t.coprod[k]
    }

    /// `Δ(a)` in `H ⊗ H`, index `i·d + j`.
    pub fn delta(&self, a: &SparseVec) -> SparseVec {
        self.t.delta(a)
    }

    /// `(Δ ⊗ id ⊗ …)` iterated to `n` tensor factors.
    pub fn iterated_coproduct(&self, k: usize, n: usize) -> Vec<CoproductTerm> {
        assert!(n >= 1);
        let mut terms: Vec<CoproductTerm> = vec![(vec![k], Scalar::one())];
        for _ in 1..n {
            let mut next: std::collections::BTreeMap<Vec<usize>, Scalar> = Default::default();
            for (idx, c) in terms {
                let (first, rest) = idx.split_first().unwrap();
                for (i, j, c2) in &self.t.coprod[*first] {
                    let mut key = Vec::with_capacity(idx.len() + 1);
                    key.push(*i);
                    key.push(*j);
                    key.extend_from_slice(rest);
                    let v = &c * c2;
                    match next.get_mut(&key) {
                        Some(x) => *x += &v,
                        None => {
                            next.insert(key, v);
                        }
                    }
                }
            }
            terms = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        terms
    }

    pub fn counit(&self, k: usize) -> &Scalar {
        &self.t.counit[k]
    }

    pub fn counit_vec(&self) -> &[Scalar] {
        &self.t.counit
    }

    pub fn eps(&self, a: &SparseVec) -> Scalar {
        self.t.eps(a)
    }

    /// `S(e_j)`.
    pub fn s_basis(&self, j: usize) -> &SparseVec {
        &self.t.s[j]
    }

    /// `S^{-1}(e_j)`.
    pub fn sinv_basis(&self, j: usize) -> &SparseVec {
        &self.sinv[j]
    }

    pub fn s(&self, a: &SparseVec) -> SparseVec {
        self.t.antipode(a)
    }

    pub fn sinv(&self, a: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, x) in a.iter() {
            acc.add_scaled(&self.sinv[j], x);
        }
        acc.finish(self.dim())
    }

    /// `S^n` for any integer `n`.
    pub fn s_pow(&self, a: &SparseVec, n: i32) -> SparseVec {
        let mut v = a.clone();
        for _ in 0..n.unsigned_abs() {
            v = if n > 0 { self.s(&v) } else { self.sinv(&v) };
        }
        v
    }

    /// Left multiplication by `a` as a matrix.
    pub fn left_mul_matrix(&self, a: &SparseVec) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(a, &self.basis(j)).to_dense()).collect();
        Matrix::from_columns(d, &cols)
    }

    pub fn right_mul_matrix(&self, a: &SparseVec) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..d).map(|j| self.mul(&self.basis(j), a).to_dense()).collect();
        Matrix::from_columns(d, &cols)
    }

    pub fn is_involutive(&self) -> bool {
        (0..self.dim()).all(|j| self.s(&self.t.s[j]) == self.basis(j))
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|k| {
            let a = SparseVec::from_pairs(d * d, self.t.coprod[k].iter().map(|(i, j, c)| (i * d + j, c.clone())));
            let b = SparseVec::from_pairs(d * d, self.t.coprod[k].iter().map(|(i, j, c)| (j * d + i, c.clone())));
            a == b
        })
    }

    /// `Δ(a) = a ⊗ a` and `ε(a) = 1`.
    pub fn is_grouplike(&self, a: &SparseVec) -> bool {
        let d = self.dim();
        let mut aa = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in a.iter() {
                aa.add(i * d + j, x * y);
            }
        }
        !a.is_zero() && self.delta(a) == aa.finish(d * d) && self.eps(a).is_one()
    }
}

/// Summary used in reports.
#[derive(Clone, Debug, Serialize)]
pub struct HopfSummary {
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub involutive: bool,
    pub commutative: bool,
    pub cocommutative: bool,
}

impl HopfAlgebra {
    pub fn summary(&self) -> HopfSummary {
        HopfSummary {
            name: self.name().to_string(),
            field: self.field().to_string(),
            dim: self.dim(),
            involutive: self.is_involutive(),
            commutative: self.is_commutative(),
            cocommutative: self.is_cocommutative(),
        }
    }
}
