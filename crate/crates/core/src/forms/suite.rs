//! The identity suite for `κ`, `B` and `T`, and structural checks on `Ω_H(A)`.

use crate::ayd::{is_ayd_map, validate_ayd};
use crate::exactla::SparseMatrix;
use crate::report::{Check, ValidationReport, Witness};

use super::equivariant::{mat_pow, EquivariantForms};

/// Compares two operators, reporting the first differing column.
pub fn matrix_check(name: impl Into<String>, l: &SparseMatrix, r: &SparseMatrix) -> Check {
    let w = (l != r).then(|| {
        if (l.rows(), l.cols()) != (r.rows(), r.cols()) {
            return Witness::new(vec![], format!("{}x{}", l.rows(), l.cols()), format!("{}x{}", r.rows(), r.cols()));
        }
        let c = (0..l.cols()).find(|&c| l.column(c) != r.column(c)).unwrap_or(0);
        Witness::new(vec![c], format!("{:?}", l.column(c)), format!("{:?}", r.column(c)))
    });
    Check::from_witness(name, w)
}

fn zero_check(name: impl Into<String>, m: &SparseMatrix) -> Check {
    matrix_check(name, m, &SparseMatrix::zero(m.rows(), m.cols()))
}

/// Every `Ω^n_H(A)` is an AYD module and `d`, `b`, `κ`, `B`, `T` are AYD maps.
pub fn validate_forms(f: &EquivariantForms) -> ValidationReport {
    let h = &f.hopf;
    let mut rep = ValidationReport::new("forms");
    for (n, m) in f.spaces.iter().enumerate() {
        let r = validate_ayd(h, m);
        let w = r.failures().next().map(|c| Witness::new(vec![n], &c.name, "pass"));
        rep.push(Check::from_witness(format!("ayd_module [n={n}]"), w));
    }
    for n in 0..=f.top {
        let sp = &f.spaces;
        let mut w = None;
        if n < f.top {
            w = w.or(is_ayd_map(&sp[n], &sp[n + 1], &f.d[n]));
            w = w.or(is_ayd_map(&sp[n], &sp[n + 1], &f.big_b[n]));
        }
        if n > 0 {
            w = w.or(is_ayd_map(&sp[n], &sp[n - 1], &f.b[n]));
        }
        w = w.or(is_ayd_map(&sp[n], &sp[n], &f.kappa[n]));
        w = w.or(is_ayd_map(&sp[n], &sp[n], &f.t[n]));
        rep.push(Check::from_witness(format!("ayd_maps [n={n}]"), w));
    }
    rep
}

/// The six identities relating `κ`, `b`, `d`, `B` and `T`, together with
/// `d² = b² = B² = 0`, the agreement of the two constructions of `κ` and of
/// `B`, and commutation with `T`, degree by degree.
pub fn lemma6_suite(f: &EquivariantForms) -> ValidationReport {
    let mut rep = ValidationReport::new("forms_identities");
    let id = |n: usize| SparseMatrix::identity(f.dim(n));
    let (d, b, t, k, bb) = (&f.d, &f.b, &f.t, &f.kappa, &f.big_b);
    for n in 0..f.top {
        let tag = |s: &str| format!("{s} [n={n}]");
        rep.push(matrix_check(tag("kappa definition = closed form"), &f.kappa_def[n], &k[n]));
        rep.push(matrix_check(tag("B sum = cyclic sum"), &bb[n], &f.big_b_cyclic[n]));
        if n + 1 < f.top {
            rep.push(zero_check(tag("d^2 = 0"), &d[n + 1].compose(&d[n])));
            rep.push(zero_check(tag("B^2 = 0"), &bb[n + 1].compose(&bb[n])));
        }
        if n >= 2 {
            rep.push(zero_check(tag("b^2 = 0"), &b[n - 1].compose(&b[n])));
        }

        // a) κ^{n+1} d = T d
        rep.push(matrix_check(tag("a) kappa^(n+1) d = T d"), &mat_pow(&k[n + 1], n + 1).compose(&d[n]), &t[n + 1].compose(&d[n])));
        // b) κ^n = T + b κ^n d
        let rhs = t[n].add(&b[n + 1].compose(&mat_pow(&k[n + 1], n)).compose(&d[n]));
        rep.push(matrix_check(tag("b) kappa^n = T + b kappa^n d"), &mat_pow(&k[n], n), &rhs));
        // c) κ^n b = b T
        if n > 0 {
            rep.push(matrix_check(
                tag("c) kappa^n b = b T"),
                &mat_pow(&k[n - 1], n).compose(&b[n]),
                &b[n].compose(&t[n]),
            ));
        }
        // d) κ^{n+1} = (id − d b) T
        let db = if n > 0 { d[n - 1].compose(&b[n]) } else { SparseMatrix::zero(f.dim(0), f.dim(0)) };
        rep.push(matrix_check(tag("d) kappa^(n+1) = (id - d b) T"), &mat_pow(&k[n], n + 1), &id(n).sub(&db).compose(&t[n])));
        // e) (κ^{n+1} − T)(κ^n − T) = 0
        let e = mat_pow(&k[n], n + 1).sub(&t[n]).compose(&mat_pow(&k[n], n).sub(&t[n]));
        rep.push(zero_check(tag("e) (kappa^(n+1) - T)(kappa^n - T) = 0"), &e));
        // f) B b + b B = id − T
        let mut l = b[n + 1].compose(&bb[n]);
        if n > 0 {
            l = l.add(&bb[n - 1].compose(&b[n]));
        }
        rep.push(matrix_check(tag("f) B b + b B = id - T"), &l, &id(n).sub(&t[n])));

        let mut w = None;
        for (name, op, src, dst) in [("d", &d[n], n, n + 1), ("B", &bb[n], n, n + 1), ("kappa", &k[n], n, n)] {
            if op.compose(&t[src]) != t[dst].compose(op) {
                w.get_or_insert(Witness::new(vec![n], name, "T"));
            }
        }
        if n > 0 && b[n].compose(&t[n]) != t[n - 1].compose(&b[n]) {
            w.get_or_insert(Witness::new(vec![n], "b", "T"));
        }
        rep.push(Check::from_witness(tag("operators commute with T"), w));
    }
    rep
}
