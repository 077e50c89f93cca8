//! The algebra `A(H) = Ĥ ⊗ H` whose modules are the AYD modules, and its
//! description on `H ⊗ H`.

use crate::exactla::{Accumulator, Matrix, SparseMatrix, SparseVec};
use crate::hopf::{dual_hopf, HaarData, HopfAlgebra, Pontrjagin};
use crate::report::{Check, ValidationReport, Witness};

/// `a ⇀ g ↼ b` for `g ∈ Ĥ`, i.e. the functional `z ↦ g(b z a)`.
pub fn sandwich(h: &HopfAlgebra, a: &SparseVec, g: &SparseVec, b: &SparseVec) -> SparseVec {
    let d = h.dim();
    let mut pairs = Vec::new();
    for z in 0..d {
        let bza = h.mul(&h.mul(b, &h.basis(z)), a);
        let mut v = crate::exactla::Scalar::zero();
        for (j, c) in bza.iter() {
            if let Some(gj) = g.get_ref(j) {
                v += &(c * gj);
            }
        }
        pairs.push((z, v));
    }
    SparseVec::from_pairs(d, pairs)
}

/// `S²(x₁) ⇀ g ↼ S^{-1}(x₃)` summed against the coefficient of `x₂`; returns
/// pairs `(functional, index of x₂)`.
fn twisted_terms(h: &HopfAlgebra, x: usize, g: &SparseVec) -> Vec<(SparseVec, usize)> {
    let mut out = Vec::new();
    for (ix, c) in h.iterated_coproduct(x, 3) {
        let a = h.s_pow(&h.basis(ix[0]), 2);
        let b = h.sinv_basis(ix[2]);
        let f = sandwich(h, &a, g, b).scale(&c);
        if !f.is_zero() {
            out.push((f, ix[1]));
        }
    }
    out
}

/// `A(H)` with basis `f^i ⊗ e_y` at index `i·d + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AydAlgebra {
    pub d: usize,
    pub prod: Vec<SparseVec>,
    pub unit: SparseVec,
    /// Column `x` is `ε ⊗ e_x`.
    pub iota_h: SparseMatrix,
    /// Column `i` is `f^i ⊗ 1`.
    pub iota_hhat: SparseMatrix,
}

impl AydAlgebra {
    pub fn dim(&self) -> usize {
        self.d * self.d
    }

    pub fn mul_basis(&self, p: usize, q: usize) -> &SparseVec {
        &self.prod[p * self.dim() + q]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(self.mul_basis(i, j), &(x * y));
            }
        }
        acc.finish(self.dim())
    }

    pub fn left_mul(&self, a: &SparseVec) -> SparseMatrix {
        let n = self.dim();
        SparseMatrix::from_columns(n, (0..n).map(|q| self.mul(a, &SparseVec::unit(n, q))).collect())
    }

    pub fn right_mul(&self, a: &SparseVec) -> SparseMatrix {
        let n = self.dim();
        SparseMatrix::from_columns(n, (0..n).map(|q| self.mul(&SparseVec::unit(n, q), a)).collect())
    }
}

/// `(f ⊗ x)(g ⊗ y) = f (S²(x₁) ⇀ g ↼ S^{-1}(x₃)) ⊗ x₂ y`.
pub fn build_ah(h: &HopfAlgebra) -> AydAlgebra {
    let d = h.dim();
    let n = d * d;
    let dual = dual_hopf(h);
    let mut prod = Vec::with_capacity(n * n);
    // twisted[x][j] = terms of S²(x₁) ⇀ f^j ↼ S^{-1}(x₃) ⊗ x₂
    let twisted: Vec<Vec<Vec<(SparseVec, usize)>>> =
        (0..d).map(|x| (0..d).map(|j| twisted_terms(h, x, &SparseVec::unit(d, j))).collect()).collect();
    for p in 0..n {
        let (i, x) = (p / d, p % d);
        for q in 0..n {
            let (j, y) = (q / d, q % d);
            let mut acc = Accumulator::new();
            for (g, x2) in &twisted[x][j] {
                let fg = dual.mul(&SparseVec::unit(d, i), g);
                let xy = h.mul_basis(*x2, y);
                for (k, u) in fg.iter() {
                    for (l, v) in xy.iter() {
                        acc.add(k * d + l, u * v);
                    }
                }
            }
            prod.push(acc.finish(n));
        }
    }
    let eps = SparseVec::from_dense(h.counit_vec());
    let one = h.one();
    let tensor = |f: &SparseVec, y: &SparseVec| {
        SparseVec::from_pairs(n, f.iter().flat_map(|(i, a)| y.iter().map(move |(k, b)| (i * d + k, a * b))))
    };
    let unit = tensor(&eps, &one);
    let iota_h = SparseMatrix::from_columns(n, (0..d).map(|x| tensor(&eps, &h.basis(x))).collect());
    let iota_hhat = SparseMatrix::from_columns(n, (0..d).map(|i| tensor(&SparseVec::unit(d, i), &one)).collect());
    AydAlgebra { d, prod, unit, iota_h, iota_hhat }
}

/// `c(f ⊗ x) = S(x₁) ⇀ f ↼ x₃ ⊗ x₂`.
pub fn c_map(h: &HopfAlgebra) -> SparseMatrix {
    let d = h.dim();
    let n = d * d;
    let cols = (0..n)
        .map(|p| {
            let (i, x) = (p / d, p % d);
            let mut acc = Accumulator::new();
            for (ix, c) in h.iterated_coproduct(x, 3) {
                let f = sandwich(h, h.s_basis(ix[0]), &SparseVec::unit(d, i), &h.basis(ix[2]));
                for (k, u) in f.iter() {
                    acc.add(k * d + ix[1], &c * u);
                }
            }
            acc.finish(n)
        })
        .collect();
    SparseMatrix::from_columns(n, cols)
}

/// Associativity, unit, the two embeddings and the map `c`.
pub fn validate_ah(h: &HopfAlgebra, a: &AydAlgebra) -> ValidationReport {
    let d = h.dim();
    let n = a.dim();
    let dual = dual_hopf(h);
    let mut rep = ValidationReport::new("A(H)");
    let mut w = None;
    'assoc: for p in 0..n {
        for q in 0..n {
            let pq = a.mul_basis(p, q);
            for r in 0..n {
                let l = a.mul(pq, &SparseVec::unit(n, r));
                let rr = a.mul(&SparseVec::unit(n, p), a.mul_basis(q, r));
                if l != rr {
                    w = Some(Witness::new(vec![p, q, r], format!("{l:?}"), format!("{rr:?}")));
                    break 'assoc;
                }
            }
        }
    }
    rep.push(Check::from_witness("associativity", w));
    let w = (0..n).find_map(|p| {
        let e = SparseVec::unit(n, p);
        let (l, r) = (a.mul(&a.unit, &e), a.mul(&e, &a.unit));
        (l != e || r != e).then(|| Witness::new(vec![p], format!("{l:?}"), format!("{r:?}")))
    });
    rep.push(Check::from_witness("unit", w));

    for (name, iota, k) in [("iota_H", &a.iota_h, h), ("iota_Hhat", &a.iota_hhat, &dual)] {
        let mut w = None;
        'm: for x in 0..d {
            for y in 0..d {
                let l = iota.apply(k.mul_basis(x, y));
                let r = a.mul(iota.column(x), iota.column(y));
                if l != r {
                    w = Some(Witness::new(vec![x, y], format!("{l:?}"), format!("{r:?}")));
                    break 'm;
                }
            }
        }
        rep.push(Check::from_witness(format!("{name}_multiplicative"), w));
        let rank = iota.rank();
        rep.push(Check::from_witness(
            format!("{name}_injective"),
            (rank != d).then(|| Witness::new(vec![], format!("rank {rank}"), format!("rank {d}"))),
        ));
    }

    // c intertwines left multiplication by ι_H(t) with t acting on the H leg only.
    let c = c_map(h);
    let w = (0..d).find_map(|t| {
        let l = c.compose(&a.left_mul(a.iota_h.column(t)));
        let lt = SparseMatrix::from_columns(d, (0..d).map(|y| h.mul_basis(t, y).clone()).collect());
        let r = SparseMatrix::identity(d).kron(&lt).compose(&c);
        (l != r).then(|| Witness::new(vec![t], "c(t.m)", "t.c(m)"))
    });
    rep.push(Check::from_witness("c_linear", w));
    let rank = c.rank();
    rep.push(Check::from_witness(
        "c_bijective",
        (rank != n).then(|| Witness::new(vec![], format!("rank {rank}"), format!("rank {n}"))),
    ));
    rep
}

fn dense_to_sparse(m: &Matrix) -> SparseMatrix {
    SparseMatrix::from_dense(m)
}

fn operator(h: &HopfAlgebra, f: impl Fn(usize) -> SparseVec) -> SparseMatrix {
    SparseMatrix::from_columns(h.dim(), (0..h.dim()).map(f).collect())
}

/// `A(H)` transported to `H ⊗ H` (index `x·d + y`) by
/// `λ(f ⊗ y) = F̂_l(f) ⊗ y ↼ δ̂^{-1}`.
#[derive(Clone, Debug)]
pub struct LambdaPicture {
    pub lambda: SparseMatrix,
    /// `λ^{-1}(x ⊗ y) = S G_l(x) ⊗ y ↼ δ̂` as printed.
    pub lambda_inv: SparseMatrix,
    /// `T(x ⊗ y) = x₂ ⊗ S^{-1}(x₁) y`.
    pub t: SparseMatrix,
    pub left_h: Vec<SparseMatrix>,
    pub left_hhat: Vec<SparseMatrix>,
    pub right_h: Vec<SparseMatrix>,
    pub right_hhat: Vec<SparseMatrix>,
}

pub fn lambda_picture(h: &HopfAlgebra, haar: &HaarData, pd: &Pontrjagin) -> LambdaPicture {
    use crate::hopf::{left_harpoon, right_harpoon};
    let d = h.dim();
    let n = d * d;
    let rh = |f: &crate::hopf::Functional| operator(h, |y| right_harpoon(h, &h.basis(y), f));
    let fhat = dense_to_sparse(&pd.dual_maps.fl);
    let sgl = dense_to_sparse(&h.antipode_matrix().transpose().mul(&crate::hopf::fourier::fourier_with(h, &haar.phi, &haar.psi).gl));
    let lambda = fhat.kron(&rh(&haar.delta_hat_inv));
    let lambda_inv = sgl.kron(&rh(&haar.delta_hat));

    let tensor = |x: &SparseVec, y: &SparseVec, c: &crate::exactla::Scalar, acc: &mut Accumulator| {
        for (i, u) in x.iter() {
            for (k, v) in y.iter() {
                acc.add(i * d + k, &(c * u) * v);
            }
        }
    };

    let t = SparseMatrix::from_columns(
        n,
        (0..n)
            .map(|p| {
                let (x, y) = (p / d, p % d);
                let mut acc = Accumulator::new();
                for (x1, x2, c) in h.coproduct(x) {
                    tensor(&h.basis(*x2), &h.mul(h.sinv_basis(*x1), &h.basis(y)), c, &mut acc);
                }
                acc.finish(n)
            })
            .collect(),
    );

    let build = |f: &dyn Fn(usize, usize, &mut Accumulator)| {
        SparseMatrix::from_columns(
            n,
            (0..n)
                .map(|p| {
                    let mut acc = Accumulator::new();
                    f(p / d, p % d, &mut acc);
                    acc.finish(n)
                })
                .collect(),
        )
    };

    // t · (x ⊗ y) = t₃ x S(t₁) ⊗ t₂ y
    let left_h = (0..d)
        .map(|t| {
            let terms = h.iterated_coproduct(t, 3);
            build(&|x, y, acc| {
                for (ix, c) in &terms {
                    let l = h.mul(&h.mul(&h.basis(ix[2]), &h.basis(x)), h.s_basis(ix[0]));
                    tensor(&l, h.mul_basis(ix[1], y), c, acc);
                }
            })
        })
        .collect();
    // f · (x ⊗ y) = (f ⇀ x) ⊗ y
    let left_hhat = (0..d)
        .map(|i| {
            let f = crate::hopf::Functional::new(SparseVec::unit(d, i).to_dense());
            build(&|x, y, acc| {
                let fx = left_harpoon(h, &f, &h.basis(x));
                tensor(&fx, &h.basis(y), &crate::exactla::Scalar::one(), acc);
            })
        })
        .collect();
    // (x ⊗ y) · t = x ⊗ y (t ↼ δ̂^{-1})
    let right_h = (0..d)
        .map(|t| {
            let td = right_harpoon(h, &h.basis(t), &haar.delta_hat_inv);
            build(&|x, y, acc| {
                tensor(&h.basis(x), &h.mul(&h.basis(y), &td), &crate::exactla::Scalar::one(), acc);
            })
        })
        .collect();
    // (x ⊗ y) · g = x₂ (S²(y₂) ⇀ g ↼ S^{-1}(y₄))(S^{-2}(x₁) δ) ⊗ δ̂(y₁) y₃ ↼ δ̂^{-1}
    let right_hhat = (0..d)
        .map(|j| {
            build(&|x, y, acc| {
                let yt = h.iterated_coproduct(y, 4);
                for (x1, x2, cx) in h.coproduct(x) {
                    let arg = h.mul(&h.s_pow(&h.basis(*x1), -2), &haar.delta);
                    for (iy, cy) in &yt {
                        let dh = haar.delta_hat.at(iy[0]);
                        if dh.is_zero() {
                            continue;
                        }
                        // (a ⇀ g ↼ b)(z) = g(b z a)
                        let a = h.s_pow(&h.basis(iy[1]), 2);
                        let b = h.sinv_basis(iy[3]);
                        let val = h.mul(&h.mul(b, &arg), &a).get(j);
                        if val.is_zero() {
                            continue;
                        }
                        let c = &(&(cx * cy) * dh) * &val;
                        let y3 = right_harpoon(h, &h.basis(iy[2]), &haar.delta_hat_inv);
                        tensor(&h.basis(*x2), &y3, &c, acc);
                    }
                }
            })
        })
        .collect();
    LambdaPicture { lambda, lambda_inv, t, left_h, left_hhat, right_h, right_hhat }
}

/// Compares the four actions of `A(H)` on itself with their `λ`-transported
/// formulas, and checks that `T` is a bimodule map in that picture.
pub fn lambda_report(h: &HopfAlgebra, a: &AydAlgebra, lp: &LambdaPicture) -> ValidationReport {
    let d = h.dim();
    let n = a.dim();
    let mut rep = ValidationReport::new("lambda");
    let id = SparseMatrix::identity(n);
    let prod = lp.lambda_inv.compose(&lp.lambda);
    rep.push(Check::from_witness(
        "lambda_inverse",
        (prod != id || lp.lambda.compose(&lp.lambda_inv) != id)
            .then(|| Witness::new(vec![], "lambda^-1 lambda", "id")),
    ));
    let actual: [(&str, Vec<SparseMatrix>); 4] = [
        ("left_H", (0..d).map(|t| a.left_mul(a.iota_h.column(t))).collect()),
        ("left_Hhat", (0..d).map(|i| a.left_mul(a.iota_hhat.column(i))).collect()),
        ("right_H", (0..d).map(|t| a.right_mul(a.iota_h.column(t))).collect()),
        ("right_Hhat", (0..d).map(|i| a.right_mul(a.iota_hhat.column(i))).collect()),
    ];
    let formulas = [&lp.left_h, &lp.left_hhat, &lp.right_h, &lp.right_hhat];
    for ((name, act), formula) in actual.iter().zip(formulas) {
        let w = (0..d).find_map(|k| {
            let l = lp.lambda.compose(&act[k]).compose(&lp.lambda_inv);
            (l != formula[k]).then(|| {
                let col = (0..n).find(|&c| l.column(c) != formula[k].column(c)).unwrap_or(0);
                Witness::new(vec![k, col], format!("{:?}", l.column(col)), format!("{:?}", formula[k].column(col)))
            })
        });
        rep.push(Check::from_witness(format!("{name}_formula"), w));
        let w = (0..d).find_map(|k| {
            (lp.t.compose(&formula[k]) != formula[k].compose(&lp.t)).then(|| Witness::new(vec![k], "T a", "a T"))
        });
        rep.push(Check::from_witness(format!("T_commutes_{name}"), w));
    }
    rep
}
