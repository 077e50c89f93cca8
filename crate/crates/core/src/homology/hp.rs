//! Equivariant periodic cyclic homology at finite level.

use std::fmt;

use serde::Serialize;

use crate::action::{crossed_product, HAlgebra};
use crate::ayd::validate_paracomplex;
use crate::exactla::{Scalar, SparseVec};
use crate::forms::{hodge_level, EquivariantForms};
use crate::hopf::{dual_hopf, left_integral, HopfAlgebra};
use crate::report::{Check, ValidationReport, Witness};
use crate::HopfError;

use super::complex::{homology_ranks, ChainMap, HomComplex, HomologyRanks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HpMode {
    /// Through the double crossed products `A ⋊ H ⋊ Ĥ`.
    Full,
    /// Directly on `A`, `B`; needs `H` of semisimple type.
    Semisimple,
    /// Directly on the given algebras, with no precondition.
    Theta,
}

impl fmt::Display for HpMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HpMode::Full => "full",
            HpMode::Semisimple => "semisimple",
            HpMode::Theta => "theta",
        })
    }
}

impl std::str::FromStr for HpMode {
    type Err = HopfError;

    fn from_str(s: &str) -> Result<Self, HopfError> {
        match s {
            "full" => Ok(HpMode::Full),
            "semisimple" => Ok(HpMode::Semisimple),
            "theta" => Ok(HpMode::Theta),
            _ => Err(HopfError::Unsupported(format!("mode {s:?}"))),
        }
    }
}

/// `φ̂(1)` for the left integral `φ̂` of `Ĥ`.
pub fn semisimple_value(h: &HopfAlgebra) -> Result<Scalar, HopfError> {
    let phi_hat = left_integral(&dual_hopf(h))?;
    Ok(phi_hat.eval(&SparseVec::from_dense(h.counit_vec())))
}

pub fn semisimple_type(h: &HopfAlgebra) -> Result<bool, HopfError> {
    Ok(!semisimple_value(h)?.is_zero())
}

/// Dimensions of `Ω^k_H` for `k = 0..=level + 1` over an algebra of
/// dimension `m`, saturating.
pub fn forecast(h: &HopfAlgebra, m: usize, level: usize) -> Vec<usize> {
    let d = h.dim();
    (0..=level + 1)
        .map(|k| {
            let base = if k == 0 { m } else { (m + 1).saturating_mul(m.saturating_pow(k as u32)) };
            d.saturating_mul(base)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelRow {
    pub level: usize,
    /// `(dim C₀, dim C₁)` of the source and target paracomplexes.
    pub source_dims: (usize, usize),
    pub target_dims: (usize, usize),
    pub hom_dims: (usize, usize),
    pub ranks: [usize; 2],
}

/// Ranks of the Hom-complex `Hom(θ^n Ω_H(A'), θ^n Ω_H(B'))` at level `n`,
/// with `A' = A ⋊ H ⋊ Ĥ` in full mode and `A' = A` otherwise. This is a
/// finite-level approximation; no limit over levels is taken.
#[derive(Clone, Debug)]
pub struct HpResult {
    pub mode: HpMode,
    pub level: usize,
    pub ranks: [usize; 2],
    /// One row per level `1..=level`.
    pub table: Vec<LevelRow>,
    pub complex: HomComplex,
    pub homology: HomologyRanks,
    pub report: ValidationReport,
}

impl HpResult {
    /// The `i`-th basis class of parity `p`.
    pub fn class(&self, parity: usize, i: usize) -> HpClass {
        HpClass {
            mode: self.mode,
            level: self.level,
            map: self.complex.chain_map(parity, &self.homology.representatives[parity][i]),
        }
    }

    /// The class of the identity, when source and target agree.
    pub fn identity(&self) -> Option<HpClass> {
        let id = ChainMap::identity(&self.complex.source);
        self.complex.coordinates(&id).map(|_| HpClass { mode: self.mode, level: self.level, map: id })
    }
}

/// A cycle of a Hom-complex at a fixed level and mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HpClass {
    pub mode: HpMode,
    pub level: usize,
    pub map: ChainMap,
}

/// `y · x`, the composite of `x ∈ Hom(A, B)` followed by `y ∈ Hom(B, C)`.
pub fn compose_classes(x: &HpClass, y: &HpClass) -> Result<HpClass, HopfError> {
    if (x.mode, x.level) != (y.mode, y.level) {
        return Err(HopfError::Structure(format!(
            "cannot compose classes at ({}, {}) and ({}, {})",
            x.mode, x.level, y.mode, y.level
        )));
    }
    Ok(HpClass { mode: x.mode, level: x.level, map: x.map.then(&y.map)? })
}

fn prepare(h: &HopfAlgebra, a: &HAlgebra, mode: HpMode) -> HAlgebra {
    match mode {
        HpMode::Full => crossed_product(&dual_hopf(h), &crossed_product(h, a)),
        HpMode::Semisimple | HpMode::Theta => a.clone(),
    }
}

/// Runs levels `1..=level`; `cap` bounds the largest form space that has
/// to be built.
pub fn hp_equivariant(
    h: &HopfAlgebra,
    a: &HAlgebra,
    b: &HAlgebra,
    mode: HpMode,
    level: usize,
    cap: Option<usize>,
) -> Result<HpResult, HopfError> {
    hp_theta_levels(h, a, b, mode, level, level, cap)
}

/// Like [`hp_equivariant`] with separate levels for source and target; the
/// table runs over `1..=max` with each side clamped to its own level.
pub fn hp_theta_levels(
    h: &HopfAlgebra,
    a: &HAlgebra,
    b: &HAlgebra,
    mode: HpMode,
    level_a: usize,
    level_b: usize,
    cap: Option<usize>,
) -> Result<HpResult, HopfError> {
    if level_a == 0 || level_b == 0 {
        return Err(HopfError::Unsupported("level must be at least 1".into()));
    }
    if mode == HpMode::Semisimple && !semisimple_type(h)? {
        return Err(HopfError::Unsupported(format!("{} is not of semisimple type", h.name())));
    }
    let (ap, bp) = (prepare(h, a, mode), prepare(h, b, mode));
    if let Some(cap) = cap {
        let worst = forecast(h, ap.dim, level_a).into_iter().chain(forecast(h, bp.dim, level_b)).max().unwrap_or(0);
        if worst > cap {
            return Err(HopfError::CapExceeded { forecast: worst, cap });
        }
    }
    let fa = EquivariantForms::new(h, &ap, level_a + 1);
    let fb = EquivariantForms::new(h, &bp, level_b + 1);
    let mut report = ValidationReport::new(format!("hp {mode} ({}, {})", ap.name, bp.name));
    let mut table = Vec::new();
    let mut last = None;
    for n in 1..=level_a.max(level_b) {
        let (p, q) = (hodge_level(&fa, n.min(level_a)), hodge_level(&fb, n.min(level_b)));
        for (side, lvl) in [("source", &p), ("target", &q)] {
            let r = validate_paracomplex(h, &lvl.paracomplex);
            let w = r.failures().next().map(|c| Witness::new(vec![n], &c.name, "pass"));
            report.push(Check::from_witness(format!("{side} paracomplex [n={n}]"), w));
        }
        let c = HomComplex::new(&p.paracomplex, &q.paracomplex)?;
        for chk in c.check().checks {
            report.push(Check { name: format!("{} [n={n}]", chk.name), ..chk });
        }
        let hr = homology_ranks(&c);
        table.push(LevelRow {
            level: n,
            source_dims: p.dims(),
            target_dims: q.dims(),
            hom_dims: c.dims(),
            ranks: hr.ranks,
        });
        last = Some((c, hr));
    }
    let (complex, homology) = last.expect("at least one level");
    Ok(HpResult {
        mode,
        level: level_a.max(level_b),
        ranks: homology.ranks,
        table,
        complex,
        homology,
        report,
    })
}
