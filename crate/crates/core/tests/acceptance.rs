//! Acceptance runner: one line per criterion, exit status 1 if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopfcyc::action::{takesaki_takai, GammaForm, HAlgebra, PairedSpace};
use hopfcyc::ayd::{
    ah_module_to_ayd, ayd_to_ah_module, build_ah, hom_ayd, is_ayd_map, lambda_picture, lambda_report, t_operator,
    validate_ah, validate_ah_module, validate_ayd, AydModule,
};
use hopfcyc::exactla::SparseVec;
use hopfcyc::forms::{
    build_forms, hodge_level, lemma6_suite, stability_trace, validate_forms, xdiff_check, EquivariantForms,
};
use hopfcyc::homology::{compose_classes, hp_equivariant, HpClass, HpMode, HpResult};
use hopfcyc::hopf::corpus::{group_algebra, standard_corpus, sweedler, taft, trivial, Group};
use hopfcyc::hopf::fourier::{fourier, fourier_identities};
use hopfcyc::hopf::haar::{gram, left_invariant_space};
use hopfcyc::hopf::mutate::mutation_sweep;
use hopfcyc::hopf::radford::{fourier_chain, radford_check};
use hopfcyc::hopf::{haar_data, normalized_duality, validate_hopf, HopfAlgebra};
use hopfcyc::ValidationReport;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(what: &str, r: &ValidationReport) -> Result<(), String> {
    let f: Vec<String> = r.failures().map(|c| format!("{} {:?}", c.name, c.witness)).collect();
    ensure(f.is_empty(), || format!("{what}: {}", f.join("; ")))
}

fn c2() -> HopfAlgebra {
    group_algebra(&Group::cyclic(2))
}

fn criterion_1() -> Outcome {
    let mut caught = 0;
    for h in standard_corpus() {
        let rep = validate_hopf(h.data()).map_err(|e| e.to_string())?;
        all_pass(h.name(), &rep)?;
        for g in ["galois_gamma_l", "galois_gamma_r", "galois_rho_l", "galois_rho_r"] {
            ensure(rep.get(g).is_some_and(|c| c.passed()), || format!("{}: {g} missing", h.name()))?;
        }
        let sweep = mutation_sweep(h.data(), 1).map_err(|e| e.to_string())?;
        for m in &sweep {
            ensure(m.caught.as_ref().is_some_and(|c| c.witness.is_some()), || {
                format!("{}: corruption of {} entry {} not caught", h.name(), m.part, m.index)
            })?;
        }
        caught += sweep.len();
    }
    Ok(format!("{caught} corruptions caught"))
}

fn criterion_2() -> Outcome {
    for h in standard_corpus() {
        ensure(left_invariant_space(&h).dim() == 1, || format!("{}: invariant space", h.name()))?;
        let haar = haar_data(&h).map_err(|e| e.to_string())?;
        ensure(gram(&h, &haar.phi).is_invertible(), || format!("{}: degenerate", h.name()))?;
        // (ψ ⊗ id)Δ(e_k) = ψ(e_k)·1, expanded directly
        let one = h.one();
        for k in 0..h.dim() {
            let lhs = SparseVec::from_pairs(h.dim(), h.coproduct(k).iter().map(|(i, j, c)| (*j, c * haar.psi.at(*i))));
            ensure(lhs == one.scale(haar.psi.at(k)), || format!("{}: psi not right invariant at {k}", h.name()))?;
        }
    }
    Ok("dim 1, faithful, psi right invariant".into())
}

fn criterion_3() -> Outcome {
    for h in standard_corpus() {
        let haar = haar_data(&h).map_err(|e| e.to_string())?;
        let r = radford_check(&h, &haar);
        ensure(r.holds, || format!("{}: {:?}", h.name(), r.witness))?;
    }
    let t3 = taft(3);
    let r = radford_check(&t3, &haar_data(&t3).map_err(|e| e.to_string())?);
    ensure(!r.s4_is_identity, || "S^4 = id on Taft T3".into())?;
    Ok("exact on every basis element; S^4 != id on T3".into())
}

fn criterion_4() -> Outcome {
    let mut scalars = Vec::new();
    for h in standard_corpus() {
        let (haar, pd) = normalized_duality(&h).map_err(|e| e.to_string())?;
        all_pass(&format!("{} pontrjagin", h.name()), &pd.report)?;
        let maps = fourier(&h, &haar).map_err(|e| e.to_string())?;
        let id = fourier_identities(&h, &haar, &maps);
        all_pass(&format!("{} fourier", h.name()), &id)?;
        let chain = fourier_chain(&h, &haar, &maps, &pd);
        all_pass(&format!("{} chain", h.name()), &chain)?;
        scalars.push(format!("{}:{}", h.name(), pd.second_scalar));
    }
    Ok(format!("second scalars {}", scalars.join(", ")))
}

fn criterion_5() -> Outcome {
    let h2 = c2();
    let h4 = sweedler();
    let cases = [
        (h2.clone(), HAlgebra::scalars(&h2)),
        (h4.clone(), HAlgebra::scalars(&h4)),
        (h2.clone(), HAlgebra::dual_regular(&h2)),
    ];
    for (h, a) in &cases {
        let (haar, pd) = normalized_duality(h).map_err(|e| e.to_string())?;
        let tt = takesaki_takai(h, &haar, &pd, a, GammaForm::Printed).map_err(|e| e.to_string())?;
        all_pass(&format!("({}, {})", a.name, h.name()), &tt.report)?;
    }
    Ok("bijective, multiplicative on all pairs, equivariant".into())
}

fn criterion_6() -> Outcome {
    for h in [c2(), sweedler()] {
        let (haar, pd) = normalized_duality(&h).map_err(|e| e.to_string())?;
        let a = build_ah(&h);
        all_pass("A(H)", &validate_ah(&h, &a))?;
        let lp = lambda_picture(&h, &haar, &pd);
        all_pass("lambda", &lambda_report(&h, &a, &lp))?;
        let reg = AydModule::regular(&a);
        let t = t_operator(&h, &reg).map_err(|e| e.to_string())?;
        ensure(lp.lambda_inv.compose(&lp.t).compose(&lp.lambda) == t, || "T differs from lambda picture".into())?;
        // T as a bimodule map: it commutes with right multiplications
        for q in 0..a.dim() {
            let r = a.right_mul(&SparseVec::unit(a.dim(), q));
            ensure(t.compose(&r) == r.compose(&t), || format!("T not right A(H)-linear at {q}"))?;
        }
        let modules = [reg.scrambled(3), AydModule::regular(&a).direct_sum(&AydModule::regular(&a)).scrambled(5)];
        for m in &modules {
            all_pass("ayd", &validate_ayd(&h, m))?;
            let am = ayd_to_ah_module(&h, m).map_err(|e| e.to_string())?;
            all_pass("A(H)-module", &validate_ah_module(&a, &am))?;
            ensure(&ah_module_to_ayd(&a, &am, &m.name) == m, || "round trip".into())?;
        }
        let (m, n) = (&modules[0], &modules[1]);
        let (tm, tn) = (t_operator(&h, m).map_err(|e| e.to_string())?, t_operator(&h, n).map_err(|e| e.to_string())?);
        let basis = hom_ayd(m, n);
        ensure(!basis.is_empty(), || "empty Hom".into())?;
        for xi in &basis {
            ensure(is_ayd_map(m, n, xi).is_none(), || "Hom basis element is not an AYD map".into())?;
            ensure(xi.compose(&tm) == tn.compose(xi), || "T not natural".into())?;
        }
    }
    Ok("A(H), equivalence, T from coaction = T from lambda, naturality".into())
}

fn forms_cases() -> Vec<(HopfAlgebra, HAlgebra, usize)> {
    let t = trivial();
    let h2 = c2();
    let h4 = sweedler();
    vec![
        (t.clone(), HAlgebra::from_hopf_trivial(&c2(), &t), 4),
        (h2.clone(), HAlgebra::scalars(&h2), 4),
        (h4.clone(), HAlgebra::scalars(&h4), 3),
    ]
}

fn criterion_7() -> Outcome {
    let mut checks = 0;
    for (h, a, deg) in forms_cases() {
        let f = build_forms(&h, &a, deg);
        let suite = lemma6_suite(&f);
        all_pass(&format!("({}, {})", h.name(), a.name), &suite)?;
        all_pass("forms", &validate_forms(&f))?;
        checks += suite.checks.len();
    }
    Ok(format!("{checks} identities"))
}

fn criterion_8() -> Outcome {
    let mut levels = 0;
    let mut cases = forms_cases();
    cases.push((trivial(), HAlgebra::scalars(&trivial()), 3));
    for (h, a, _) in &cases {
        let f = EquivariantForms::new(h, a, 4);
        for n in 0..=3 {
            all_pass(&format!("theta^{n} ({}, {})", h.name(), a.name), &hodge_level(&f, n).report)?;
            levels += 1;
        }
    }
    for h in [trivial(), c2()] {
        let r = xdiff_check(&h, &HAlgebra::scalars(&h), 2);
        all_pass(&format!("xdiff {}", h.name()), &r)?;
        ensure(r.checks.iter().any(|c| c.verdict == hopfcyc::Verdict::Pass), || "nothing checked".into())?;
    }
    Ok(format!("{levels} Hodge levels, xdiff at N = 2"))
}

fn criterion_9() -> Outcome {
    let mut notes = Vec::new();
    for h in [c2(), sweedler()] {
        let (_, pd) = normalized_duality(&h).map_err(|e| e.to_string())?;
        let p = PairedSpace::beta(&h, &pd);
        let st = stability_trace(&h, &p, &HAlgebra::scalars(&h)).map_err(|e| e.to_string())?;
        all_pass(h.name(), &st.report)?;
        notes.push(format!("{}: admissible {}", h.name(), st.iota.is_some()));
    }
    Ok(notes.join(", "))
}

fn criterion_10() -> Outcome {
    let t = trivial();
    let c = HAlgebra::scalars(&t);
    let oracle = common::hom_ranks(common::ordinary_hp_separable(&c), common::ordinary_hp_separable(&c));
    ensure(oracle == [1, 0], || format!("oracle {oracle:?}"))?;
    for mode in [HpMode::Full, HpMode::Semisimple, HpMode::Theta] {
        let r = hp_equivariant(&t, &c, &c, mode, 3, None).map_err(|e| e.to_string())?;
        all_pass("hp", &r.report)?;
        for row in &r.table {
            ensure(row.ranks == oracle, || format!("{mode} level {}: {:?}", row.level, row.ranks))?;
        }
    }
    let h = c2();
    let a = HAlgebra::scalars(&h);
    let s = hp_equivariant(&h, &a, &a, HpMode::Semisimple, 1, None).map_err(|e| e.to_string())?;
    let f = hp_equivariant(&h, &a, &a, HpMode::Full, 1, None).map_err(|e| e.to_string())?;
    ensure(s.ranks == f.ranks, || format!("semisimple {:?} vs full {:?}", s.ranks, f.ranks))?;
    Ok(format!("(1, 0) at levels 1..3; C2 level 1 ranks {:?}", s.ranks))
}

fn classes(r: &HpResult) -> Vec<HpClass> {
    (0..2).flat_map(|p| (0..r.homology.ranks[p]).map(move |i| (p, i))).map(|(p, i)| r.class(p, i)).collect()
}

fn criterion_11() -> Outcome {
    let t = trivial();
    let h2 = c2();
    let runs = [
        (t.clone(), HAlgebra::from_hopf_trivial(&c2(), &t), HpMode::Theta, 2),
        (h2.clone(), HAlgebra::scalars(&h2), HpMode::Semisimple, 2),
        (h2.clone(), HAlgebra::dual_regular(&h2), HpMode::Theta, 1),
        (h2.clone(), HAlgebra::scalars(&h2), HpMode::Full, 1),
    ];
    let mut triples = 0;
    for (h, a, mode, level) in &runs {
        let r = hp_equivariant(h, a, a, *mode, *level, None).map_err(|e| e.to_string())?;
        all_pass("d^2 = 0", &r.report)?;
        let id = r.identity().ok_or("identity is not an AYD map")?;
        ensure(r.complex.is_cycle(&id.map), || "[id] is not a cycle".into())?;
        let cs = classes(&r);
        for x in &cs {
            let l = compose_classes(x, &id).map_err(|e| e.to_string())?;
            let rr = compose_classes(&id, x).map_err(|e| e.to_string())?;
            ensure(l == *x && rr == *x, || "[id] is not a unit".into())?;
        }
        for x in &cs {
            for y in &cs {
                let xy = compose_classes(x, y).map_err(|e| e.to_string())?;
                for z in &cs {
                    let l = compose_classes(&xy, z).map_err(|e| e.to_string())?;
                    let yz = compose_classes(y, z).map_err(|e| e.to_string())?;
                    let rr = compose_classes(x, &yz).map_err(|e| e.to_string())?;
                    let diff = l.map.sub(&rr.map);
                    ensure(diff.is_zero() || r.complex.is_boundary(&diff), || "not associative".into())?;
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("{} complexes, {triples} triples", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Option<Duration>, fn() -> Outcome); 11] = [
        (1, "Hopf validator and corruption sweep", Some(Duration::from_secs(30)), criterion_1),
        (2, "Haar uniqueness and faithfulness", None, criterion_2),
        (3, "Radford S^4 formula", Some(Duration::from_secs(10)), criterion_3),
        (4, "Pontrjagin duality and Fourier identities", None, criterion_4),
        (5, "Takesaki-Takai duality", Some(Duration::from_secs(300)), criterion_5),
        (6, "AYD machinery", None, criterion_6),
        (7, "forms identities", Some(Duration::from_secs(120)), criterion_7),
        (8, "Hodge tower and X-complex comparison", None, criterion_8),
        (9, "stability trace", None, criterion_9),
        (10, "homology degeneration oracle", Some(Duration::from_secs(60)), criterion_10),
        (11, "Hom-complex soundness", None, criterion_11),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let out = run();
        let el = start.elapsed();
        let over = limit.filter(|l| el > *l);
        let (verdict, detail) = match (&out, over) {
            (Ok(d), None) => ("PASS", d.clone()),
            (Ok(d), Some(l)) => ("FAIL", format!("{d}; over the {:.0?} limit", l)),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        let lim = limit.map(|l| format!(" (limit {l:.0?})")).unwrap_or_default();
        println!("{verdict} criterion {n:>2}: {name} [{el:.2?}{lim}] {detail}");
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
