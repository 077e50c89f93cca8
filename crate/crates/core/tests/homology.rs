mod common;

use hopfcyc::action::HAlgebra;
use hopfcyc::ayd::AydModule;
use hopfcyc::action::PairedSpace;
use hopfcyc::forms::{stability_trace, x_complex, EquivariantForms};
use hopfcyc::homology::ChainMap;
use hopfcyc::hopf::normalized_duality;
use hopfcyc::homology::{homology_ranks, hp_equivariant, HomComplex, HpMode};
use hopfcyc::hopf::corpus::{function_algebra, group_algebra, trivial, Group};
use hopfcyc::SparseMatrix;

fn coefficient_algebras() -> Vec<HAlgebra> {
    let h = trivial();
    vec![
        HAlgebra::scalars(&h),
        HAlgebra::from_hopf_trivial(&group_algebra(&Group::cyclic(2)), &h),
        HAlgebra::from_hopf_trivial(&function_algebra(&Group::cyclic(2)), &h),
    ]
}

#[test]
fn oracle_sees_separable_algebras() {
    for a in coefficient_algebras() {
        let hp = common::ordinary_hp_separable(&a);
        assert_eq!(hp, [a.dim, 0], "{}", a.name);
    }
}

#[test]
fn trivial_hopf_matches_ordinary_hp() {
    let h = trivial();
    for a in coefficient_algebras() {
        let expected = common::hom_ranks(common::ordinary_hp_separable(&a), common::ordinary_hp_separable(&a));
        let r = hp_equivariant(&h, &a, &a, HpMode::Theta, 3, None).unwrap();
        assert!(r.report.all_passed(), "{}", a.name);
        for row in &r.table {
            assert_eq!(row.ranks, expected, "{} level {}", a.name, row.level);
        }
    }
}

#[test]
fn self_hom_of_the_x_complex_of_scalars() {
    let h = trivial();
    let x = x_complex(&h, &HAlgebra::scalars(&h));
    let c = HomComplex::new(&x.paracomplex, &x.paracomplex).unwrap();
    assert!(c.check().all_passed());
    assert_eq!(homology_ranks(&c).ranks, [1, 0]);
}

#[test]
fn mismatched_hopf_algebras_are_rejected() {
    let h2 = group_algebra(&Group::cyclic(2));
    let p = x_complex(&trivial(), &HAlgebra::scalars(&trivial())).paracomplex;
    let z = AydModule::zero(&h2);
    let q = hopfcyc::ayd::Paracomplex { c0: z.clone(), c1: z, d0: SparseMatrix::zero(0, 0), d1: SparseMatrix::zero(0, 0) };
    assert!(HomComplex::new(&p, &q).is_err());
}

#[test]
fn hom_complex_between_different_forms() {
    // Hom(θ¹Ω_H(ℂ), θ¹Ω_H(Ĥ)) over H = ℂ[C₂]
    let h = group_algebra(&Group::cyclic(2));
    let a = HAlgebra::scalars(&h);
    let b = HAlgebra::dual_regular(&h);
    let fa = EquivariantForms::new(&h, &a, 2);
    let fb = EquivariantForms::new(&h, &b, 2);
    let p = hopfcyc::forms::hodge_level(&fa, 1).paracomplex;
    let q = hopfcyc::forms::hodge_level(&fb, 1).paracomplex;
    let c = HomComplex::new(&p, &q).unwrap();
    assert!(c.check().all_passed());
    let r = homology_ranks(&c);
    assert!(r.ranks[0] + r.ranks[1] <= c.dims().0 + c.dims().1);
    for par in 0..2 {
        for v in &r.representatives[par] {
            assert!(c.is_cycle(&c.chain_map(par, v)));
        }
    }
}

#[test]
fn stability_classes_compose_to_identity() {
    let h = group_algebra(&Group::cyclic(2));
    let (_, pd) = normalized_duality(&h).unwrap();
    let p = PairedSpace::beta(&h, &pd);
    let b = HAlgebra::scalars(&h);
    let st = stability_trace(&h, &p, &b).unwrap();
    let (i0, i1) = st.iota.clone().expect("admissible vector over Q(zeta_8)");
    let xl = x_complex(&h, &st.pairing_algebra);
    let xb = x_complex(&h, &b);
    let (ql, qb) = (&xl.quotient, &xb.quotient);
    let tr = ChainMap { parity: 0, parts: [st.tr0.clone(), qb.projection.compose(&st.tr1).compose(&ql.lift)] };
    let iota = ChainMap { parity: 0, parts: [i0, ql.projection.compose(&i1).compose(&qb.lift)] };
    let forward = HomComplex::new(&xl.paracomplex, &xb.paracomplex).unwrap();
    let back = HomComplex::new(&xb.paracomplex, &xl.paracomplex).unwrap();
    assert!(forward.is_cycle(&tr));
    assert!(back.is_cycle(&iota));
    assert_eq!(iota.then(&tr).unwrap(), ChainMap::identity(&xb.paracomplex));
}
