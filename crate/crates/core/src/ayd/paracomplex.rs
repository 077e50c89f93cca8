//! Paracomplexes and paramixed complexes of AYD modules.

use crate::exactla::SparseMatrix;
use crate::hopf::HopfAlgebra;
use crate::report::{Check, ValidationReport, Witness};

use super::module::{is_ayd_map, t_operator, AydModule};

/// `∂₀: C₀ → C₁`, `∂₁: C₁ → C₀` with `∂² = id − T`.
#[derive(Clone, Debug)]
pub struct Paracomplex {
    pub c0: AydModule,
    pub c1: AydModule,
    pub d0: SparseMatrix,
    pub d1: SparseMatrix,
}

/// Modules `M_0..=M_N` with `b[n]: M_n → M_{n-1}` (`b[0]` is the zero map to
/// the zero space) and `big_b[n]: M_n → M_{n+1}` for `n < N`.
#[derive(Clone, Debug)]
pub struct ParamixedComplex {
    pub modules: Vec<AydModule>,
    pub b: Vec<SparseMatrix>,
    pub big_b: Vec<SparseMatrix>,
}

impl ParamixedComplex {
    pub fn top(&self) -> usize {
        self.modules.len() - 1
    }
}

fn id_minus_t(h: &HopfAlgebra, m: &AydModule) -> Result<SparseMatrix, Witness> {
    t_operator(h, m)
        .map(|t| SparseMatrix::identity(m.dim).sub(&t))
        .map_err(|e| Witness::new(vec![], e, "coaction"))
}

pub fn validate_paracomplex(h: &HopfAlgebra, p: &Paracomplex) -> ValidationReport {
    let mut rep = ValidationReport::new("paracomplex");
    rep.push(Check::from_witness("d0_ayd_map", is_ayd_map(&p.c0, &p.c1, &p.d0)));
    rep.push(Check::from_witness("d1_ayd_map", is_ayd_map(&p.c1, &p.c0, &p.d1)));
    for (name, first, second, m) in [
        ("d1 d0 = id - T", &p.d0, &p.d1, &p.c0),
        ("d0 d1 = id - T", &p.d1, &p.d0, &p.c1),
    ] {
        let w = match id_minus_t(h, m) {
            Err(w) => Some(w),
            Ok(r) => {
                let l = second.compose(first);
                (l != r).then(|| {
                    let c = (0..m.dim).find(|&c| l.column(c) != r.column(c)).unwrap_or(0);
                    Witness::new(vec![c], format!("{:?}", l.column(c)), format!("{:?}", r.column(c)))
                })
            }
        };
        rep.push(Check::from_witness(name, w));
    }
    rep
}

/// `b² = 0`, `B² = 0` and `bB + Bb = id − T` in every degree `n < N`, where
/// both sides only involve maps inside the truncation.
pub fn validate_paramixed(h: &HopfAlgebra, x: &ParamixedComplex) -> ValidationReport {
    let mut rep = ValidationReport::new("paramixed");
    let n_top = x.top();
    let mut w = None;
    for n in 0..=n_top {
        let src = &x.modules[n];
        if n > 0 {
            if let Some(e) = is_ayd_map(src, &x.modules[n - 1], &x.b[n]) {
                w.get_or_insert(Witness::new(vec![n], "b", format!("{e:?}")));
            }
        }
        if n < n_top {
            if let Some(e) = is_ayd_map(src, &x.modules[n + 1], &x.big_b[n]) {
                w.get_or_insert(Witness::new(vec![n], "B", format!("{e:?}")));
            }
        }
    }
    rep.push(Check::from_witness("ayd_maps", w));

    let w = (2..=n_top).find_map(|n| {
        (!x.b[n - 1].compose(&x.b[n]).is_zero()).then(|| Witness::new(vec![n], "b b", "0"))
    });
    rep.push(Check::from_witness("b^2 = 0", w));
    let w = (0..n_top.saturating_sub(1)).find_map(|n| {
        (!x.big_b[n + 1].compose(&x.big_b[n]).is_zero()).then(|| Witness::new(vec![n], "B B", "0"))
    });
    rep.push(Check::from_witness("B^2 = 0", w));

    let w = (0..n_top).find_map(|n| {
        let m = &x.modules[n];
        let mut l = x.b[n + 1].compose(&x.big_b[n]);
        if n > 0 {
            l = l.add(&x.big_b[n - 1].compose(&x.b[n]));
        }
        match id_minus_t(h, m) {
            Err(w) => Some(w),
            Ok(r) => (l != r).then(|| {
                let c = (0..m.dim).find(|&c| l.column(c) != r.column(c)).unwrap_or(0);
                Witness::new(vec![n, c], format!("{:?}", l.column(c)), format!("{:?}", r.column(c)))
            }),
        }
    });
    rep.push(Check::from_witness("bB + Bb = id - T", w));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::corpus::{group_algebra, Group};

    #[test]
    fn zero_paracomplex() {
        let h = group_algebra(&Group::cyclic(2));
        let z = AydModule::zero(&h);
        let p = Paracomplex { c0: z.clone(), c1: z, d0: SparseMatrix::zero(0, 0), d1: SparseMatrix::zero(0, 0) };
        assert!(validate_paracomplex(&h, &p).all_passed());
    }

    #[test]
    fn mixed_complex_is_paramixed() {
        // ℂ in degrees 0 and 1 with b = 0, B = 0; T = id on trivial modules.
        let h = group_algebra(&Group::cyclic(2));
        let c = AydModule::trivial(&h, 1);
        let x = ParamixedComplex {
            modules: vec![c.clone(), c],
            b: vec![SparseMatrix::zero(0, 1), SparseMatrix::zero(1, 1)],
            big_b: vec![SparseMatrix::zero(1, 1)],
        };
        assert!(validate_paramixed(&h, &x).all_passed());
    }
}
