//! The four verbs, on parsed inputs.

use std::str::FromStr;
use std::time::Instant;

use hopfcyc::action::{
    takesaki_takai, validate_halgebra, validate_module, validate_pairing, GammaForm, HAlgebra, PairedSpace,
};
use hopfcyc::ayd::{
    ah_module_to_ayd, ayd_to_ah_module, build_ah, lambda_picture, lambda_report, t_report, validate_ah,
    validate_ah_module, validate_ayd, AydModule,
};
use hopfcyc::exactla::FieldSpec;
use hopfcyc::forms::{build_forms, lemma6_suite, stability_trace, validate_forms};
use hopfcyc::homology::{hp_equivariant, HpMode};
use hopfcyc::hopf::corpus::{corpus, group_algebra, taft_in, CorpusName, Group};
use hopfcyc::hopf::fourier::{fourier, fourier_identities};
use hopfcyc::hopf::haar::{gram, left_invariant_space};
use hopfcyc::hopf::radford::{fourier_chain, radford_check};
use hopfcyc::hopf::{normalized_duality, validate_hopf, HaarData, HopfAlgebra, Pontrjagin};
use hopfcyc::{Check, HopfError, Witness};

use crate::report::{Report, Stage};
use crate::spec::{AlgebraSpec, HopfSpec, ModuleSpec, PairingSpec, SpecFile};
use crate::CliError;

/// Takesaki-Takai domains above this dimension need `--slow`.
pub const SLOW_TAKTAK_DIM: usize = 300;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Haar,
    Radford,
    Pontrjagin,
    Taktak,
    Ayd,
    Forms,
    Stability,
    All,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "haar" => Suite::Haar,
            "radford" => Suite::Radford,
            "pontrjagin" => Suite::Pontrjagin,
            "taktak" => Suite::Taktak,
            "ayd" => Suite::Ayd,
            "forms" => Suite::Forms,
            "stability" => Suite::Stability,
            "all" => Suite::All,
            _ => return Err(CliError::Input(format!("unknown suite {s:?}"))),
        })
    }
}

/// Coefficient algebras available without a spec file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Trivial,
    DualRegular,
}

impl FromStr for Coefficients {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "trivial" => Ok(Coefficients::Trivial),
            "dual-regular" => Ok(Coefficients::DualRegular),
            _ => Err(CliError::Input(format!("unknown coefficients {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub degree: Option<usize>,
    pub level: usize,
    pub mode: HpMode,
    pub cap: Option<usize>,
    pub slow: bool,
    pub timings: bool,
    pub field: Option<FieldSpec>,
    pub coefficients: Coefficients,
    pub gamma: GammaForm,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            degree: None,
            level: 1,
            mode: HpMode::Theta,
            cap: None,
            slow: false,
            timings: false,
            field: None,
            coefficients: Coefficients::Trivial,
            gamma: GammaForm::Printed,
        }
    }
}

fn error_check(name: &str, e: &HopfError) -> Check {
    Check::fail(name, Witness::new(vec![], e, "success"))
}

/// Builds the Hopf algebra, recording the validator as the first stage.
fn validated(spec: &HopfSpec, report: &mut Report) -> Result<Option<HopfAlgebra>, CliError> {
    let data = spec.to_data()?;
    let r = validate_hopf(&data).map_err(|e| CliError::Input(e.to_string()))?;
    let ok = r.all_passed();
    let mut s = Stage::new("validate").with_report(r);
    s.value("dim", data.dim);
    s.value("field", data.field.to_string());
    report.push(s);
    if !ok {
        return Ok(None);
    }
    HopfAlgebra::new(data).map(Some).map_err(|e| CliError::Input(e.to_string()))
}

fn same_field(what: &str, f: FieldSpec, h: &HopfAlgebra) -> Result<(), CliError> {
    if h.field().join(f).ok() == Some(h.field()) {
        Ok(())
    } else {
        Err(CliError::Input(format!("{what} is over {f}, not contained in {}", h.field())))
    }
}

fn hopf_dim_matches(what: &str, n: usize, h: &HopfAlgebra) -> Result<(), CliError> {
    if n == h.dim() {
        Ok(())
    } else {
        Err(CliError::Input(format!("{what} has {n} action matrices but {} has dimension {}", h.name(), h.dim())))
    }
}

// ---- validate ----

/// Validates a spec file; algebras, modules and pairings need their Hopf algebra.
pub fn cmd_validate(spec: &SpecFile, hopf: Option<&HopfSpec>) -> Result<Report, CliError> {
    let name = match spec {
        SpecFile::Hopf(h) => h.name.clone(),
        SpecFile::Algebra(a) => a.name.clone(),
        SpecFile::Module(m) => m.name.clone(),
        SpecFile::Pairing(p) => p.name.clone(),
    };
    let mut report = Report::new("validate", name);
    if let SpecFile::Hopf(h) = spec {
        validated(h, &mut report)?;
        return Ok(report);
    }
    let hs = hopf.ok_or_else(|| CliError::Input(format!("validating a {} needs --hopf <file>", spec.kind())))?;
    let Some(h) = validated(hs, &mut report)? else { return Ok(report) };
    let stage = match spec {
        SpecFile::Hopf(_) => unreachable!(),
        SpecFile::Algebra(a) => {
            let (alg, f) = a.to_algebra()?;
            same_field("algebra", f, &h)?;
            hopf_dim_matches("algebra", alg.action.len(), &h)?;
            Stage::new("algebra").with_report(validate_halgebra(&h, &alg))
        }
        SpecFile::Module(m) => {
            let (module, f) = m.to_module()?;
            same_field("module", f, &h)?;
            hopf_dim_matches("module", module.action.len(), &h)?;
            Stage::new("module").with_report(validate_module(&h, &module))
        }
        SpecFile::Pairing(p) => {
            let (paired, f) = p.to_paired()?;
            same_field("pairing", f, &h)?;
            hopf_dim_matches("pairing", paired.module.action.len(), &h)?;
            let mut s = Stage::new("module").with_report(validate_module(&h, &paired.module));
            s.add_report(validate_pairing(&h, &paired));
            s
        }
    };
    report.push(stage);
    Ok(report)
}

// ---- corpus ----

fn hopf_by_name(name: &str, opts: &Options) -> Result<HopfAlgebra, CliError> {
    let lower = name.trim().to_ascii_lowercase();
    let taft_order = if lower == "taft" {
        Some(opts.degree.unwrap_or(3) as u32)
    } else {
        lower.strip_prefix("taft").and_then(|n| n.parse::<u32>().ok())
    };
    if let Some(n) = taft_order {
        let field = match opts.field {
            Some(f) => f,
            None => FieldSpec::cyclotomic(n).map_err(|e| CliError::Input(e.to_string()))?,
        };
        return taft_in(n, field).map_err(|e| CliError::Input(e.to_string()));
    }
    if let Some(f) = opts.field {
        if f != FieldSpec::Rationals {
            return Err(CliError::Input(format!("--field only applies to Taft algebras, got {name:?}")));
        }
    }
    let c = CorpusName::from_str(name).map_err(|e| CliError::Input(e.to_string()))?;
    corpus(&c).map_err(|e| CliError::Input(e.to_string()))
}

/// Built-in objects: Hopf algebras (`trivial`, `group:C2`, `fun:S3`,
/// `sweedler`, `taft` with `--degree n`), and over a Hopf algebra `over`:
/// `scalars`, `dual-regular`, `group-trivial:G` and the pairing `beta`.
pub fn cmd_corpus(name: &str, over: Option<&str>, opts: &Options) -> Result<SpecFile, CliError> {
    let lower = name.trim().to_ascii_lowercase();
    let base = || hopf_by_name(over.unwrap_or("trivial"), opts);
    let algebra = |a: HAlgebra, h: &HopfAlgebra| Ok(SpecFile::Algebra(AlgebraSpec::from_algebra(&a, h.field())));
    if lower == "scalars" {
        let h = base()?;
        return algebra(HAlgebra::scalars(&h), &h);
    }
    if lower == "dual-regular" {
        let h = base()?;
        return algebra(HAlgebra::dual_regular(&h), &h);
    }
    if let Some(g) = lower.strip_prefix("group-trivial:") {
        let h = base()?;
        let k = group_algebra(&Group::by_name(g).map_err(|e| CliError::Input(e.to_string()))?);
        return algebra(HAlgebra::from_hopf_trivial(&k, &h), &h);
    }
    if lower == "regular-module" {
        let h = base()?;
        let m = hopfcyc::action::HModule::regular(&h);
        return Ok(SpecFile::Module(ModuleSpec::from_module(&format!("regular({})", h.name()), &m, h.field())));
    }
    if lower == "beta" {
        let h = base()?;
        let (_, pd) = normalized_duality(&h).map_err(|e| CliError::Input(e.to_string()))?;
        let p = PairedSpace::beta(&h, &pd);
        return Ok(SpecFile::Pairing(PairingSpec::from_paired(&format!("beta({})", h.name()), &p, h.field())));
    }
    if over.is_some() {
        return Err(CliError::Input(format!("--over does not apply to the Hopf algebra {name:?}")));
    }
    Ok(SpecFile::Hopf(HopfSpec::from_data(hopf_by_name(name, opts)?.data())))
}

// ---- verify ----

struct Ctx<'a> {
    h: &'a HopfAlgebra,
    opts: &'a Options,
    algebra: Option<&'a HAlgebra>,
    haar: Option<HaarData>,
    pd: Option<Pontrjagin>,
}

impl Ctx<'_> {
    fn coefficients(&self) -> HAlgebra {
        match (self.algebra, self.opts.coefficients) {
            (Some(a), _) => a.clone(),
            (None, Coefficients::Trivial) => HAlgebra::scalars(self.h),
            (None, Coefficients::DualRegular) => HAlgebra::dual_regular(self.h),
        }
    }
}

fn stage_haar(c: &mut Ctx) -> Stage {
    let mut s = Stage::new("haar");
    let h = c.h;
    let inv = left_invariant_space(h);
    s.push(Check::from_witness(
        "left invariant functionals form a line",
        (inv.dim() != 1).then(|| Witness::new(vec![], format!("dim {}", inv.dim()), "dim 1")),
    ));
    match normalized_duality(h) {
        Err(e) => s.push(error_check("haar data", &e)),
        Ok((haar, pd)) => {
            let g = gram(h, &haar.phi);
            s.push(Check::from_witness(
                "phi-form nondegenerate",
                (!g.is_invertible()).then(|| Witness::new(vec![], format!("rank {}", g.rank()), h.dim())),
            ));
            let sum = haar.summary(h);
            s.value("phi", &sum.phi);
            s.value("psi", &sum.psi);
            s.value("delta", &sum.delta);
            s.value("delta_hat", &sum.delta_hat);
            s.value("unimodular", sum.unimodular);
            s.value("dual_unimodular", sum.dual_unimodular);
            c.haar = Some(haar);
            c.pd = Some(pd);
        }
    }
    s
}

fn stage_radford(c: &Ctx) -> Stage {
    let haar = c.haar.as_ref().expect("haar stage ran");
    let r = radford_check(c.h, haar);
    let mut s = Stage::new("radford");
    s.push(Check::from_witness("S^4 formula on every basis element", r.witness));
    s.value("s4_is_identity", r.s4_is_identity);
    s
}

fn stage_pontrjagin(c: &Ctx) -> Stage {
    let (haar, pd) = (c.haar.as_ref().expect("haar stage ran"), c.pd.as_ref().expect("haar stage ran"));
    let mut s = Stage::new("pontrjagin").with_report(pd.report.clone());
    s.value("raw_scalar", pd.raw_scalar.to_exact_strings());
    s.value("second_scalar", pd.second_scalar.to_exact_strings());
    match fourier(c.h, haar) {
        Err(e) => s.push(error_check("fourier transforms", &e)),
        Ok(maps) => {
            s.add_report(fourier_identities(c.h, haar, &maps));
            s.add_report(fourier_chain(c.h, haar, &maps, pd));
        }
    }
    s
}

fn stage_taktak(c: &Ctx) -> Result<Stage, CliError> {
    let (haar, pd) = (c.haar.as_ref().expect("haar stage ran"), c.pd.as_ref().expect("haar stage ran"));
    let a = c.coefficients();
    let dim = a.dim * c.h.dim() * c.h.dim();
    if dim > SLOW_TAKTAK_DIM && !c.opts.slow {
        return Err(CliError::Input(format!(
            "the double crossed product has dimension {dim} > {SLOW_TAKTAK_DIM}; pass --slow to run it"
        )));
    }
    let mut s = Stage::new("taktak");
    s.value("coefficients", &a.name);
    s.value("domain_dim", dim);
    match takesaki_takai(c.h, haar, pd, &a, c.opts.gamma) {
        Err(e) => s.push(error_check("gamma", &e)),
        Ok(t) => s.add_report(t.report),
    }
    Ok(s)
}

fn stage_ayd(c: &Ctx) -> Stage {
    let (haar, pd) = (c.haar.as_ref().expect("haar stage ran"), c.pd.as_ref().expect("haar stage ran"));
    let h = c.h;
    let a = build_ah(h);
    let mut s = Stage::new("ayd").with_report(validate_ah(h, &a));
    s.value("ah_dim", a.dim());
    s.add_report(lambda_report(h, &a, &lambda_picture(h, haar, pd)));
    let reg = AydModule::regular(&a);
    s.add_report(validate_ayd(h, &reg));
    s.add_report(t_report(h, &reg));
    match ayd_to_ah_module(h, &reg) {
        Err(e) => s.push(error_check("AYD to A(H)-module", &e)),
        Ok(am) => {
            s.add_report(validate_ah_module(&a, &am));
            let back = ah_module_to_ayd(&a, &am, &reg.name);
            s.push(Check::from_witness(
                "module round trip",
                (back != reg).then(|| Witness::new(vec![], "round trip", "regular module")),
            ));
        }
    }
    s
}

fn stage_forms(c: &Ctx) -> Result<Stage, CliError> {
    let a = c.coefficients();
    let degree = c.opts.degree.unwrap_or(2);
    if let Some(cap) = c.opts.cap {
        let worst = hopfcyc::homology::forecast(c.h, a.dim, degree).into_iter().max().unwrap_or(0);
        if worst > cap {
            return Err(CliError::Cap { forecast: worst, cap });
        }
    }
    let f = build_forms(c.h, &a, degree);
    let mut s = Stage::new("forms").with_report(validate_forms(&f));
    s.add_report(lemma6_suite(&f));
    s.value("coefficients", &a.name);
    s.value("degree", degree);
    s.value("dims", (0..=f.top).map(|k| f.dim(k)).collect::<Vec<_>>());
    Ok(s)
}

fn stage_stability(c: &Ctx) -> Stage {
    let pd = c.pd.as_ref().expect("haar stage ran");
    let p = PairedSpace::beta(c.h, pd);
    let b = c.coefficients();
    let mut s = Stage::new("stability");
    s.value("coefficients", &b.name);
    match stability_trace(c.h, &p, &b) {
        Err(e) => s.push(error_check("stability trace", &e)),
        Ok(t) => {
            s.value("pairing_algebra_dim", t.pairing_algebra.dim);
            s.value("admissible", t.admissible.is_some());
            s.add_report(t.report);
        }
    }
    s
}

pub fn cmd_verify(
    spec: &HopfSpec,
    suite: Suite,
    algebra: Option<(&HAlgebra, FieldSpec)>,
    opts: &Options,
) -> Result<Report, CliError> {
    let mut report = Report::new("verify", spec.name.clone());
    let Some(h) = validated(spec, &mut report)? else { return Ok(report) };
    if let Some((a, f)) = algebra {
        same_field("algebra", f, &h)?;
        hopf_dim_matches("algebra", a.action.len(), &h)?;
        let s = Stage::new("algebra").with_report(validate_halgebra(&h, a));
        let ok = s.passed();
        report.push(s);
        if !ok {
            return Ok(report);
        }
    }
    let mut c = Ctx { h: &h, opts, algebra: algebra.map(|(a, _)| a), haar: None, pd: None };
    let needs_haar = suite != Suite::Forms;
    let mut timed = |report: &mut Report, f: &mut dyn FnMut(&mut Ctx) -> Result<Stage, CliError>| {
        let t = Instant::now();
        let mut s = f(&mut c)?;
        if opts.timings {
            s.millis = Some(t.elapsed().as_millis());
        }
        let ok = s.passed();
        report.push(s);
        Ok::<bool, CliError>(ok)
    };
    if needs_haar && !timed(&mut report, &mut |c| Ok(stage_haar(c)))? {
        return Ok(report);
    }
    let all = suite == Suite::All;
    if all || suite == Suite::Radford {
        timed(&mut report, &mut |c| Ok(stage_radford(c)))?;
    }
    if all || suite == Suite::Pontrjagin {
        timed(&mut report, &mut |c| Ok(stage_pontrjagin(c)))?;
    }
    if all || suite == Suite::Taktak {
        timed(&mut report, &mut |c| stage_taktak(c))?;
    }
    if all || suite == Suite::Ayd {
        timed(&mut report, &mut |c| Ok(stage_ayd(c)))?;
    }
    if all || suite == Suite::Forms {
        timed(&mut report, &mut |c| stage_forms(c))?;
    }
    if all || suite == Suite::Stability {
        timed(&mut report, &mut |c| Ok(stage_stability(c)))?;
    }
    Ok(report)
}

// ---- hp ----

pub fn cmd_hp(
    a: (&HAlgebra, FieldSpec),
    b: (&HAlgebra, FieldSpec),
    spec: &HopfSpec,
    opts: &Options,
) -> Result<Report, CliError> {
    let mut report = Report::new("hp", format!("{} -> {} over {}", a.0.name, b.0.name, spec.name));
    let Some(h) = validated(spec, &mut report)? else { return Ok(report) };
    for (tag, (alg, f)) in [("source", a), ("target", b)] {
        same_field(tag, f, &h)?;
        hopf_dim_matches(tag, alg.action.len(), &h)?;
        let s = Stage::new(format!("{tag} algebra")).with_report(validate_halgebra(&h, alg));
        let ok = s.passed();
        report.push(s);
        if !ok {
            return Ok(report);
        }
    }
    let t = Instant::now();
    let r = hp_equivariant(&h, a.0, b.0, opts.mode, opts.level, opts.cap).map_err(|e| match e {
        HopfError::CapExceeded { forecast, cap } => CliError::Cap { forecast, cap },
        e => CliError::Input(e.to_string()),
    })?;
    let mut s = Stage::new("hp").with_report(r.report);
    s.value("mode", r.mode);
    s.value("level", r.level);
    s.value("ranks", r.ranks);
    s.value("table", &r.table);
    if opts.timings {
        s.millis = Some(t.elapsed().as_millis());
    }
    report.push(s);
    Ok(report)
}
