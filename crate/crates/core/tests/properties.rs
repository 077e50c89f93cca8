//! Property tests for the linear algebra, the Hopf axioms and basis independence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use hopfcyc::action::{random_invertible, HAlgebra};
use hopfcyc::ayd::{build_ah, hom_ayd, t_operator, validate_ayd, AydModule};
use hopfcyc::exactla::{Accumulator, FieldSpec, Matrix, Scalar, SparseMatrix, SparseVec, Subspace};
use hopfcyc::forms::{hodge_level, EquivariantForms};
use hopfcyc::hopf::corpus::{group_algebra, standard_corpus, sweedler, Group};
use hopfcyc::hopf::HopfAlgebra;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

/// Rank by plain Gaussian elimination on rationals.
fn naive_rank(rows: usize, cols: usize, data: &[i64]) -> usize {
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigRational::from_integer(BigInt::from(data[i * cols + j]))).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in 0..cols {
                    let t = &f * &m[rank][k];
                    m[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn int_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn cyclotomic_element(order: u32) -> impl Strategy<Value = Scalar> {
    let f = FieldSpec::cyclotomic(order).unwrap();
    prop::collection::vec((-5i64..=5, 1i64..=4), f.degree()).prop_map(move |cs| {
        Scalar::from_coeffs(
            f,
            cs.into_iter().map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect(),
        )
    })
}

fn element(h: &HopfAlgebra, coeffs: &[i64]) -> SparseVec {
    SparseVec::from_pairs(h.dim(), coeffs.iter().enumerate().map(|(i, &c)| (i, Scalar::from_int(c))))
}

/// `(Δx)(Δy)` in `H ⊗ H`, index `i·d + j`.
fn tensor_square_mul(h: &HopfAlgebra, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let d = h.dim();
    let mut acc = Accumulator::new();
    for (p, a) in x.iter() {
        for (q, b) in y.iter() {
            let (l, r) = (h.mul_basis(p / d, q / d), h.mul_basis(p % d, q % d));
            let ab = a * b;
            for (i, u) in l.iter() {
                for (j, v) in r.iter() {
                    acc.add(i * d + j, &(u * v) * &ab);
                }
            }
        }
    }
    acc.finish(d * d)
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn rational_inverse(n in -50i64..=50, d in 1i64..=50) {
        prop_assume!(n != 0);
        let x = Scalar::from_frac(n, d);
        prop_assert!((&x * &x.inv()).is_one());
    }

    #[test]
    fn cyclotomic_inverse(x in cyclotomic_element(5)) {
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv()).is_one());
    }

    #[test]
    fn roots_of_unity(order in 1u32..13, k in -20i64..20) {
        let f = FieldSpec::cyclotomic(order).unwrap();
        let z = Scalar::root_of_unity(f, k);
        prop_assert!(z.pow(order).is_one());
        prop_assert!((&z * &Scalar::root_of_unity(f, -k)).is_one());
    }

    #[test]
    fn rank_matches_naive_elimination((r, c, data) in int_matrix()) {
        let m = Matrix::from_ints(r, c, &data);
        prop_assert_eq!(m.rank(), naive_rank(r, c, &data));
    }

    #[test]
    fn rank_nullity((r, c, data) in int_matrix()) {
        let m = Matrix::from_ints(r, c, &data);
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), c);
        for v in k.basis() {
            prop_assert!(m.mul_vec(&v.to_dense()).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn echelon_form_is_canonical((r, c, data) in int_matrix(), seed in any::<u64>()) {
        let m = Matrix::from_ints(r, c, &data);
        let rows = m.sparse_rows();
        let a = Subspace::from_vectors(c, rows.clone());
        // a different spanning set of the same space
        let (p, _) = random_invertible(r, seed);
        let pm = p.to_dense().mul(&m);
        let b = Subspace::from_vectors(c, pm.sparse_rows().into_iter().rev());
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.dim(), naive_rank(r, c, &data));
    }

    #[test]
    fn random_invertible_inverts(dim in 1usize..12, seed in any::<u64>()) {
        let (p, q) = random_invertible(dim, seed);
        prop_assert_eq!(p.compose(&q), SparseMatrix::identity(dim));
        prop_assert_eq!(q.compose(&p), SparseMatrix::identity(dim));
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn hopf_axioms_on_random_elements(which in 0usize..7, seed in prop::collection::vec(-3i64..=3, 24)) {
        let h = &standard_corpus()[which];
        let d = h.dim();
        let (x, y) = (element(h, &seed[..d]), element(h, &seed[12..12 + d]));
        let xy = h.mul(&x, &y);
        // Δ and ε are algebra maps
        prop_assert_eq!(h.delta(&xy), tensor_square_mul(h, &h.delta(&x), &h.delta(&y)));
        prop_assert_eq!(h.eps(&xy), &h.eps(&x) * &h.eps(&y));
        // S(x₁) x₂ = ε(x) 1 = x₁ S(x₂)
        let mut left = Accumulator::new();
        let mut right = Accumulator::new();
        for (k, c) in h.delta(&x).iter() {
            let (a, b) = (SparseVec::unit(d, k / d), SparseVec::unit(d, k % d));
            left.add_scaled(&h.mul(&h.s(&a), &b), c);
            right.add_scaled(&h.mul(&a, &h.s(&b)), c);
        }
        let unit = h.one().scale(&h.eps(&x));
        prop_assert_eq!(left.finish(d), unit.clone());
        prop_assert_eq!(right.finish(d), unit);
        // S is an antihomomorphism
        prop_assert_eq!(h.s(&xy), h.mul(&h.s(&y), &h.s(&x)));
        prop_assert_eq!(h.sinv(&h.s(&x)), x);
    }

    #[test]
    fn ayd_hom_ranks_ignore_the_basis(s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = group_algebra(&Group::cyclic(2));
        let a = build_ah(&h);
        let reg = AydModule::regular(&a);
        let triv = AydModule::trivial(&h, 1);
        let big = reg.direct_sum(&triv);
        let base = hom_ayd(&reg, &big).len();
        let (m, n) = (reg.scrambled(s1), big.scrambled(s2));
        prop_assert!(validate_ayd(&h, &m).all_passed());
        prop_assert!(validate_ayd(&h, &n).all_passed());
        prop_assert_eq!(hom_ayd(&m, &n).len(), base);
        prop_assert_eq!(hom_ayd(&n, &m).len(), hom_ayd(&big, &reg).len());
    }
}

proptest! {
    #![proptest_config(config(8))]

    /// `∂² = id − T` holds in any basis of the Hodge paracomplex.
    #[test]
    fn paracomplex_square_in_scrambled_bases(level in 0usize..3, s0 in any::<u64>(), s1 in any::<u64>(), which in 0usize..2) {
        let h = if which == 0 { group_algebra(&Group::cyclic(2)) } else { sweedler() };
        let a = HAlgebra::scalars(&h);
        let f = EquivariantForms::new(&h, &a, 3);
        let p = hodge_level(&f, level).paracomplex;
        let (p0, q0) = random_invertible(p.c0.dim, s0);
        let (p1, q1) = random_invertible(p.c1.dim, s1);
        let (c0, c1) = (p.c0.conjugate(&p0, &q0), p.c1.conjugate(&p1, &q1));
        let d0 = p1.compose(&p.d0).compose(&q0);
        let d1 = p0.compose(&p.d1).compose(&q1);
        for (m, first, second) in [(&c0, &d0, &d1), (&c1, &d1, &d0)] {
            let t = t_operator(&h, m).unwrap();
            prop_assert_eq!(second.compose(first), SparseMatrix::identity(m.dim).sub(&t));
        }
    }
}

#[test]
fn naive_rank_oracle_sanity() {
    assert_eq!(naive_rank(2, 2, &[1, 2, 2, 4]), 1);
    assert_eq!(naive_rank(2, 2, &[1, 0, 0, 1]), 2);
}
