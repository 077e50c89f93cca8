use super::*;
use crate::action::HAlgebra;
use crate::exactla::{kernel_of_rows, Accumulator, SparseVec};
use crate::hopf::corpus::{group_algebra, function_algebra, sweedler, taft, trivial, Group};
use crate::hopf::HopfAlgebra;
use crate::HopfError;

fn failures(r: &crate::ValidationReport) -> Vec<String> {
    r.failures().map(|c| format!("{} {:?}", c.name, c.witness)).collect()
}

/// `ε(Λ)` for a left integral `Λ ∈ H`, solving `e_i Λ = ε(e_i) Λ` directly.
fn counit_of_integral(h: &HopfAlgebra) -> crate::Scalar {
    let d = h.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for k in 0..d {
            let mut acc = Accumulator::new();
            for j in 0..d {
                acc.add(j, h.mul_basis(i, j).get(k));
            }
            acc.add(k, -h.counit(i).clone());
            let v = acc.finish(d);
            if !v.is_zero() {
                rows.push(v);
            }
        }
    }
    let space = kernel_of_rows(d, rows);
    assert_eq!(space.dim(), 1);
    h.eps(&space.basis()[0])
}

#[test]
fn semisimple_type_examples() {
    assert!(semisimple_type(&trivial()).unwrap());
    let c3 = group_algebra(&Group::cyclic(3));
    assert!(semisimple_type(&c3).unwrap());
    assert!(semisimple_type(&function_algebra(&Group::symmetric3())).unwrap());
    for h in [sweedler(), taft(3), c3] {
        let v = semisimple_value(&h).unwrap();
        assert_eq!(v.is_zero(), counit_of_integral(&h).is_zero(), "{}", h.name());
    }
    assert!(!semisimple_type(&taft(3)).unwrap());
    assert!(!semisimple_type(&sweedler()).unwrap());
}

#[test]
fn scalars_over_trivial_all_modes() {
    let h = trivial();
    let a = HAlgebra::scalars(&h);
    for mode in [HpMode::Full, HpMode::Semisimple, HpMode::Theta] {
        let r = hp_equivariant(&h, &a, &a, mode, 3, None).unwrap();
        assert!(r.report.all_passed(), "{:?}", failures(&r.report));
        assert_eq!(r.table.len(), 3);
        for row in &r.table {
            assert_eq!(row.ranks, [1, 0], "{mode} level {}", row.level);
        }
        let id = r.identity().unwrap();
        assert!(r.complex.is_cycle(&id.map));
        assert!(!r.complex.is_boundary(&id.map));
    }
}

#[test]
fn full_and_semisimple_agree_for_c2() {
    let h = group_algebra(&Group::cyclic(2));
    let a = HAlgebra::scalars(&h);
    let s = hp_equivariant(&h, &a, &a, HpMode::Semisimple, 1, None).unwrap();
    let f = hp_equivariant(&h, &a, &a, HpMode::Full, 1, None).unwrap();
    assert!(s.report.all_passed(), "{:?}", failures(&s.report));
    assert!(f.report.all_passed(), "{:?}", failures(&f.report));
    assert_eq!(s.ranks, f.ranks);
}

#[test]
fn semisimple_mode_rejects_sweedler() {
    let h = sweedler();
    let a = HAlgebra::scalars(&h);
    assert!(matches!(
        hp_equivariant(&h, &a, &a, HpMode::Semisimple, 1, None),
        Err(HopfError::Unsupported(_))
    ));
}

#[test]
fn cap_aborts_with_forecast() {
    let h = taft(3);
    let a = HAlgebra::scalars(&h);
    match hp_equivariant(&h, &a, &a, HpMode::Full, 3, Some(2000)) {
        Err(HopfError::CapExceeded { forecast, cap }) => {
            assert_eq!(cap, 2000);
            assert_eq!(forecast, *super::forecast(&h, 81, 3).last().unwrap());
        }
        other => panic!("expected cap abort, got {:?}", other.map(|r| r.ranks)),
    }
}

#[test]
fn composition_unit_and_associativity() {
    let h = group_algebra(&Group::cyclic(2));
    let a = HAlgebra::scalars(&h);
    let r = hp_equivariant(&h, &a, &a, HpMode::Theta, 2, None).unwrap();
    let id = r.identity().unwrap();
    let classes: Vec<HpClass> =
        (0..2).flat_map(|p| (0..r.homology.ranks[p]).map(move |i| (p, i))).map(|(p, i)| r.class(p, i)).collect();
    assert!(!classes.is_empty());
    for x in &classes {
        assert!(r.complex.is_cycle(&x.map));
        assert_eq!(compose_classes(x, &id).unwrap(), *x);
        assert_eq!(compose_classes(&id, x).unwrap(), *x);
        for y in &classes {
            let xy = compose_classes(x, y).unwrap();
            assert!(r.complex.is_cycle(&xy.map));
            for z in &classes {
                let l = compose_classes(&xy, z).unwrap();
                let rr = compose_classes(x, &compose_classes(y, z).unwrap()).unwrap();
                let diff = l.map.sub(&rr.map);
                assert!(diff.is_zero() || r.complex.is_boundary(&diff));
            }
        }
    }
    let other = HpClass { level: 1, ..id.clone() };
    assert!(compose_classes(&id, &other).is_err());
}

#[test]
fn boundaries_are_cycles() {
    let h = group_algebra(&Group::cyclic(2));
    let a = HAlgebra::from_hopf_trivial(&group_algebra(&Group::cyclic(2)), &h);
    let r = hp_equivariant(&h, &a, &a, HpMode::Theta, 1, None).unwrap();
    let c = &r.complex;
    for p in 0..2 {
        for i in 0..c.dim(p) {
            let f = c.chain_map(p, &SparseVec::unit(c.dim(p), i));
            let df = c.boundary(&f);
            assert!(c.is_cycle(&df));
            assert!(df.is_zero() || c.is_boundary(&df));
        }
    }
}
