//! Anti-Yetter-Drinfeld modules, their maps and the operator `T`.

use rand::{Rng, SeedableRng};

use crate::action::{module_to_comodule, random_invertible, validate_module, HComodule, HModule};
use crate::exactla::{kernel_of_rows, Accumulator, Scalar, SparseMatrix, SparseVec, Subspace};
use crate::hopf::{dual_hopf, HopfAlgebra};
use crate::report::{Check, ValidationReport, Witness};
use crate::HopfError;

use super::algebra::{sandwich, AydAlgebra};

/// A space with a left H-action and a left Ĥ-action (indexed by `f^i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AydModule {
    pub name: String,
    pub dim: usize,
    pub h_action: Vec<SparseMatrix>,
    pub hhat_action: Vec<SparseMatrix>,
}

impl AydModule {
    pub fn new(name: impl Into<String>, dim: usize, h_action: Vec<SparseMatrix>, hhat_action: Vec<SparseMatrix>) -> Self {
        AydModule { name: name.into(), dim, h_action, hhat_action }
    }

    pub fn h_module(&self) -> HModule {
        HModule::new(self.dim, self.h_action.clone())
    }

    pub fn hhat_module(&self) -> HModule {
        HModule::new(self.dim, self.hhat_action.clone())
    }

    /// `η(m) = Σ_i (f^i · m) ⊗ e_i`.
    pub fn coaction(&self, h: &HopfAlgebra) -> Result<HComodule, HopfError> {
        module_to_comodule(h, &self.hhat_module())
    }

    /// Trivial H-action and `f · m = f(1) m`. This is an AYD module exactly
    /// when `S² = id`.
    pub fn trivial(h: &HopfAlgebra, dim: usize) -> Self {
        let one = h.one();
        let hhat = (0..h.dim()).map(|i| SparseMatrix::identity(dim).scale(&one.get(i))).collect();
        AydModule::new("C", dim, HModule::trivial(h, dim).action, hhat)
    }

    /// `A(H)` with its left actions through `ι_H` and `ι_Ĥ`.
    pub fn regular(a: &AydAlgebra) -> Self {
        let d = a.d;
        AydModule::new(
            "A(H)",
            a.dim(),
            (0..d).map(|t| a.left_mul(a.iota_h.column(t))).collect(),
            (0..d).map(|i| a.left_mul(a.iota_hhat.column(i))).collect(),
        )
    }

    pub fn zero(h: &HopfAlgebra) -> Self {
        let z = vec![SparseMatrix::zero(0, 0); h.dim()];
        AydModule::new("0", 0, z.clone(), z)
    }

    pub fn direct_sum(&self, other: &AydModule) -> Self {
        let ds = |a: &[SparseMatrix], b: &[SparseMatrix]| a.iter().zip(b).map(|(x, y)| x.direct_sum(y)).collect();
        AydModule::new(
            format!("{}+{}", self.name, other.name),
            self.dim + other.dim,
            ds(&self.h_action, &other.h_action),
            ds(&self.hhat_action, &other.hhat_action),
        )
    }

    /// Transport along an invertible change of basis.
    pub fn conjugate(&self, p: &SparseMatrix, p_inv: &SparseMatrix) -> Self {
        let c = |v: &[SparseMatrix]| v.iter().map(|a| p.compose(a).compose(p_inv)).collect();
        AydModule::new(self.name.clone(), self.dim, c(&self.h_action), c(&self.hhat_action))
    }

    /// The same module in a pseudo-random basis.
    pub fn scrambled(&self, seed: u64) -> Self {
        let (p, p_inv) = random_invertible(self.dim, seed);
        self.conjugate(&p, &p_inv)
    }
}

fn show(v: &SparseVec) -> String {
    format!("{v:?}")
}

/// Module axioms, the compatibility
/// `t·(f·m) = (S²(t₁) ⇀ f ↼ S^{-1}(t₃))·(t₂·m)` on basis triples and,
/// independently, `(t·m)₀ ⊗ (t·m)₁ = t₂·m₀ ⊗ t₃ m₁ S(t₁)` on basis pairs.
pub fn validate_ayd(h: &HopfAlgebra, m: &AydModule) -> ValidationReport {
    let d = h.dim();
    let n = m.dim;
    let mut rep = ValidationReport::new(m.name.clone());
    let mut hm = validate_module(h, &m.h_module());
    hm.subject = "H".into();
    rep.extend(hm);
    let dual = dual_hopf(h);
    let mut fm = validate_module(&dual, &m.hhat_module());
    fm.subject = "Hhat".into();
    rep.extend(fm);

    let hhat = m.hhat_module();
    let mut w = None;
    'act: for t in 0..d {
        let terms = h.iterated_coproduct(t, 3);
        for j in 0..d {
            let lhs_op = m.h_action[t].compose(&m.hhat_action[j]);
            let mut rhs_op = SparseMatrix::zero(n, n);
            for (ix, c) in &terms {
                let a = h.s_pow(&h.basis(ix[0]), 2);
                let g = sandwich(h, &a, &SparseVec::unit(d, j), h.sinv_basis(ix[2]));
                if g.is_zero() {
                    continue;
                }
                rhs_op = rhs_op.add_scaled(&hhat.operator(&g).compose(&m.h_action[ix[1]]), c);
            }
            if lhs_op != rhs_op {
                let v = (0..n).find(|&v| lhs_op.column(v) != rhs_op.column(v)).unwrap_or(0);
                w = Some(Witness::new(vec![t, j, v], show(lhs_op.column(v)), show(rhs_op.column(v))));
                break 'act;
            }
        }
    }
    rep.push(Check::from_witness("ayd_action_form", w));

    let w = match m.coaction(h) {
        Err(e) => Some(Witness::new(vec![], e, "coaction")),
        Ok(co) => (0..d).find_map(|t| {
            let terms = h.iterated_coproduct(t, 3);
            (0..n).find_map(|v| {
                let l = co.coaction.apply(m.h_action[t].column(v));
                let mut r = Accumulator::new();
                for (q, x) in co.coaction.column(v).iter() {
                    let (m0, m1) = (q / d, q % d);
                    for (ix, c) in &terms {
                        let tm0 = m.h_action[ix[1]].column(m0);
                        let hm = h.mul(&h.mul(&h.basis(ix[2]), &h.basis(m1)), h.s_basis(ix[0]));
                        let k = x * c;
                        for (p, a) in tm0.iter() {
                            for (i, b) in hm.iter() {
                                r.add(p * d + i, &(&k * a) * b);
                            }
                        }
                    }
                }
                let r = r.finish(n * d);
                (l != r).then(|| Witness::new(vec![t, v], show(&l), show(&r)))
            })
        }),
    };
    rep.push(Check::from_witness("ayd_coaction_form", w));
    let a = rep.get("ayd_action_form").map(|c| c.passed());
    let b = rep.get("ayd_coaction_form").map(|c| c.passed());
    rep.push(Check::from_witness(
        "formulations_agree",
        (a != b).then(|| Witness::new(vec![], format!("action form {a:?}"), format!("coaction form {b:?}"))),
    ));
    rep
}

/// `T(m) = S^{-1}(m₁) · m₀`, read off from the coaction.
pub fn t_operator(h: &HopfAlgebra, m: &AydModule) -> Result<SparseMatrix, HopfError> {
    let d = h.dim();
    let co = m.coaction(h)?;
    let hm = m.h_module();
    let cols = (0..m.dim)
        .map(|v| {
            let mut acc = Accumulator::new();
            for (q, x) in co.coaction.column(v).iter() {
                acc.add_scaled(&hm.act(h.sinv_basis(q % d), &SparseVec::unit(m.dim, q / d)), x);
            }
            acc.finish(m.dim)
        })
        .collect();
    Ok(SparseMatrix::from_columns(m.dim, cols))
}

/// `ξ` commutes with both actions.
pub fn is_ayd_map(m: &AydModule, n: &AydModule, xi: &SparseMatrix) -> Option<Witness> {
    for (k, (a, b)) in m.h_action.iter().zip(&n.h_action).enumerate() {
        if xi.compose(a) != b.compose(xi) {
            return Some(Witness::new(vec![0, k], "xi t", "t xi"));
        }
    }
    for (k, (a, b)) in m.hhat_action.iter().zip(&n.hhat_action).enumerate() {
        if xi.compose(a) != b.compose(xi) {
            return Some(Witness::new(vec![1, k], "xi f", "f xi"));
        }
    }
    None
}

/// T is invertible, an AYD automorphism, and the identity on trivial coactions.
pub fn t_report(h: &HopfAlgebra, m: &AydModule) -> ValidationReport {
    let mut rep = ValidationReport::new("T");
    match t_operator(h, m) {
        Err(e) => rep.push(Check::fail("T", Witness::new(vec![], e, "coaction"))),
        Ok(t) => {
            let r = t.rank();
            rep.push(Check::from_witness(
                "invertible",
                (r != m.dim).then(|| Witness::new(vec![], format!("rank {r}"), format!("rank {}", m.dim))),
            ));
            rep.push(Check::from_witness("ayd_map", is_ayd_map(m, m, &t)));
        }
    }
    rep
}

/// Basis of the space of AYD maps `M → N`, as `dim N × dim M` matrices.
///
/// The generators are imposed one at a time, each on the kernel left by the
/// previous ones, which keeps the eliminations small.
pub fn hom_ayd(m: &AydModule, n: &AydModule) -> Vec<SparseMatrix> {
    let (p, q) = (m.dim, n.dim);
    let unknowns = q * p;
    // X[r][c] at index r·p + c; equations (X A − B X)[r][c] = 0
    let mut kernel: Option<Vec<SparseVec>> = None;
    let gens = m.h_action.iter().zip(&n.h_action).chain(m.hhat_action.iter().zip(&n.hhat_action));
    for (a, b) in gens {
        if kernel.as_ref().is_some_and(Vec::is_empty) {
            break;
        }
        let bt = b.transpose();
        // rows of the current kernel basis, indexed by unknown
        let by_unknown: Option<Vec<Vec<(usize, Scalar)>>> = kernel.as_ref().map(|k| {
            let mut t = vec![Vec::new(); unknowns];
            for (j, v) in k.iter().enumerate() {
                for (i, x) in v.iter() {
                    t[i].push((j, x.clone()));
                }
            }
            t
        });
        let width = kernel.as_ref().map_or(unknowns, Vec::len);
        let mut rows = Vec::new();
        for r in 0..q {
            for c in 0..p {
                let mut eq = Accumulator::new();
                // Σ_k X[r][k] A[k][c]
                for (k, x) in a.column(c).iter() {
                    eq.add(r * p + k, x.clone());
                }
                // − Σ_k B[r][k] X[k][c]
                for (k, x) in bt.column(r).iter() {
                    eq.add(k * p + c, -x.clone());
                }
                let eq = eq.finish(unknowns);
                let v = match &by_unknown {
                    None => eq,
                    Some(t) => {
                        let mut acc = Accumulator::new();
                        for (i, x) in eq.iter() {
                            for (j, y) in &t[i] {
                                acc.add(*j, x * y);
                            }
                        }
                        acc.finish(width)
                    }
                };
                if !v.is_zero() {
                    rows.push(v);
                }
            }
        }
        if rows.is_empty() {
            continue;
        }
        let sol = kernel_of_rows(width, rows);
        kernel = Some(match &kernel {
            None => sol.basis().to_vec(),
            Some(k) => {
                let mut out = Vec::with_capacity(sol.dim());
                for s in sol.basis() {
                    let mut acc = Accumulator::new();
                    for (j, x) in s.iter() {
                        acc.add_scaled(&k[j], x);
                    }
                    out.push(acc.finish(unknowns));
                }
                out
            }
        });
    }
    let space = match kernel {
        None => Subspace::full(unknowns),
        Some(k) => Subspace::from_vectors(unknowns, k),
    };
    space
        .basis()
        .iter()
        .map(|v| {
            let mut cols: Vec<Accumulator> = (0..p).map(|_| Accumulator::new()).collect();
            for (idx, x) in v.iter() {
                cols[idx % p].add(idx / p, x.clone());
            }
            SparseMatrix::from_columns(q, cols.into_iter().map(|a| a.finish(q)).collect())
        })
        .collect()
}

/// A pseudo-random element of a solved Hom basis.
pub fn random_combination(basis: &[SparseMatrix], rows: usize, cols: usize, seed: u64) -> SparseMatrix {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut acc = SparseMatrix::zero(rows, cols);
    for b in basis {
        acc = acc.add_scaled(b, &Scalar::from_int(rng.gen_range(-3..=3)));
    }
    acc
}

/// A module over `A(H)`: `action[i·d + y]` is the operator of `f^i ⊗ e_y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AhModule {
    pub dim: usize,
    pub action: Vec<SparseMatrix>,
}

impl AhModule {
    pub fn operator(&self, a: &SparseVec) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.dim, self.dim);
        for (i, c) in a.iter() {
            m = m.add_scaled(&self.action[i], c);
        }
        m
    }
}

/// `(f ⊗ t) · m = f · (t · m)`; rejects non-AYD input.
pub fn ayd_to_ah_module(h: &HopfAlgebra, m: &AydModule) -> Result<AhModule, HopfError> {
    let rep = validate_ayd(h, m);
    if let Some(c) = rep.failures().next() {
        return Err(HopfError::Axiom { name: "AYD module".into(), check: Box::new(c.clone()) });
    }
    let d = h.dim();
    let action = (0..d * d).map(|p| m.hhat_action[p / d].compose(&m.h_action[p % d])).collect();
    Ok(AhModule { dim: m.dim, action })
}

/// Restriction along `ι_H` and `ι_Ĥ`.
pub fn ah_module_to_ayd(a: &AydAlgebra, m: &AhModule, name: &str) -> AydModule {
    let d = a.d;
    AydModule::new(
        name,
        m.dim,
        (0..d).map(|t| m.operator(a.iota_h.column(t))).collect(),
        (0..d).map(|i| m.operator(a.iota_hhat.column(i))).collect(),
    )
}

/// The product of `A(H)` acts as composition and the unit as the identity.
pub fn validate_ah_module(a: &AydAlgebra, m: &AhModule) -> ValidationReport {
    let n = a.dim();
    let mut rep = ValidationReport::new("A(H)-module");
    let mut w = None;
    'm: for p in 0..n {
        for q in 0..n {
            let l = m.operator(a.mul_basis(p, q));
            let r = m.action[p].compose(&m.action[q]);
            if l != r {
                w = Some(Witness::new(vec![p, q], "(pq).m", "p.(q.m)"));
                break 'm;
            }
        }
    }
    rep.push(Check::from_witness("product_acts_as_composition", w));
    let u = m.operator(&a.unit);
    rep.push(Check::from_witness(
        "unital",
        (u != SparseMatrix::identity(m.dim)).then(|| Witness::new(vec![], "1.m", "m")),
    ));
    rep
}
