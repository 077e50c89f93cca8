//! The JSON wire format: one self-describing object per file, discriminated
//! by `"kind"`, with every scalar written as an exact string.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use hopfcyc::action::{HAlgebra, HModule, PairedSpace};
use hopfcyc::exactla::{FieldSpec, Matrix, Scalar, SparseMatrix, SparseVec, Tensor3};
use hopfcyc::hopf::{HopfAlgebra, HopfData};

use crate::CliError;

/// A scalar: `"p/q"`, or power-basis coefficients over `ℚ(ζ_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Rational(String),
    Coeffs(Vec<String>),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| std::fmt::Error)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Field {
    Rationals,
    Cyclotomic { order: u32 },
}

impl Field {
    pub fn spec(self) -> Result<FieldSpec, CliError> {
        match self {
            Field::Rationals => Ok(FieldSpec::Rationals),
            Field::Cyclotomic { order } => FieldSpec::cyclotomic(order).map_err(|e| CliError::Input(e.to_string())),
        }
    }

    pub fn of(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => Field::Rationals,
            FieldSpec::Cyclotomic { order } => Field::Cyclotomic { order },
        }
    }
}

/// `Q`, `rationals`, `cyclotomic:n` or `Q(zeta_n)`.
pub fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    let t = s.trim().to_ascii_lowercase();
    let bad = || CliError::Input(format!("cannot parse field {s:?}"));
    if t == "q" || t == "rationals" {
        return Ok(FieldSpec::Rationals);
    }
    let n = t
        .strip_prefix("cyclotomic:")
        .or_else(|| t.strip_prefix("q(zeta_").and_then(|r| r.strip_suffix(')')))
        .ok_or_else(bad)?;
    let n: u32 = n.parse().map_err(|_| bad())?;
    FieldSpec::cyclotomic(n).map_err(|e| CliError::Input(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    /// `(i, j, k, c)`: `e_i e_j` has coefficient `c` at `e_k`.
    pub mult: Vec<(usize, usize, usize, Value)>,
    pub unit: Vec<(usize, Value)>,
    /// `(k, i, j, c)`: `Δ(e_k)` has coefficient `c` at `e_i ⊗ e_j`.
    pub comult: Vec<(usize, usize, usize, Value)>,
    pub counit: Vec<(usize, Value)>,
    /// `(i, j, c)`: `S(e_j)` has coefficient `c` at `e_i`.
    pub antipode: Vec<(usize, usize, Value)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub hopf_dim: usize,
    /// `(i, j, k, c)`: `a_i a_j` has coefficient `c` at `a_k`.
    pub prod: Vec<(usize, usize, usize, Value)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<(usize, Value)>>,
    /// `(t, i, j, c)`: entry `(i, j)` of the operator of `e_t`.
    pub action: Vec<(usize, usize, usize, Value)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub hopf_dim: usize,
    pub action: Vec<(usize, usize, usize, Value)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairingSpec {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub hopf_dim: usize,
    pub action: Vec<(usize, usize, usize, Value)>,
    /// `(i, j, c)`: `b(v_i, v_j) = c`.
    pub pairing: Vec<(usize, usize, Value)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpecFile {
    Hopf(HopfSpec),
    Algebra(AlgebraSpec),
    Module(ModuleSpec),
    Pairing(PairingSpec),
}

impl SpecFile {
    pub fn kind(&self) -> &'static str {
        match self {
            SpecFile::Hopf(_) => "hopf",
            SpecFile::Algebra(_) => "algebra",
            SpecFile::Module(_) => "module",
            SpecFile::Pairing(_) => "pairing",
        }
    }

    /// Syntax errors carry a line and column, shape errors the path of the entry.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut v: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
        let kind = match v.as_object_mut().and_then(|o| o.remove("kind")) {
            Some(serde_json::Value::String(k)) => k,
            _ => return Err(CliError::Input("missing string field \"kind\"".into())),
        };
        fn shaped<T: serde::de::DeserializeOwned>(v: serde_json::Value) -> Result<T, CliError> {
            serde_path_to_error::deserialize(v).map_err(|e| {
                let path = e.path().to_string();
                CliError::Input(if path == "." { e.inner().to_string() } else { format!("{path}: {}", e.inner()) })
            })
        }
        match kind.as_str() {
            "hopf" => shaped(v).map(SpecFile::Hopf),
            "algebra" => shaped(v).map(SpecFile::Algebra),
            "module" => shaped(v).map(SpecFile::Module),
            "pairing" => shaped(v).map(SpecFile::Pairing),
            k => Err(CliError::Input(format!("unknown kind {k:?}"))),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec files serialize");
        s.push('\n');
        s
    }
}

// ---- scalars ----

fn rational(s: &str) -> Option<Result<BigRational, ()>> {
    let t = s.trim();
    let (n, d) = t.split_once('/').unwrap_or((t, "1"));
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d == BigInt::from(0) {
        return Some(Err(()));
    }
    Some(Ok(BigRational::new(n, d)))
}

/// Reads one scalar; `at` names the entry for error messages.
pub fn parse_value(v: &Value, field: FieldSpec, at: &dyn Fn() -> String) -> Result<Scalar, CliError> {
    let one = |s: &str| match rational(s) {
        Some(Ok(q)) => Ok(q),
        Some(Err(())) => Err(CliError::Input(format!("{}: zero denominator in {s:?}", at()))),
        None => Err(CliError::Input(format!("{}: cannot parse scalar {s:?}", at()))),
    };
    match v {
        Value::Rational(s) => Ok(Scalar::rational(one(s)?)),
        Value::Coeffs(cs) => {
            if cs.is_empty() || cs.len() > field.degree() {
                return Err(CliError::Input(format!(
                    "{}: {} coefficients for a field of degree {}",
                    at(),
                    cs.len(),
                    field.degree()
                )));
            }
            let qs = cs.iter().map(|c| one(c)).collect::<Result<Vec<_>, _>>()?;
            Ok(Scalar::from_coeffs(field, qs))
        }
    }
}

/// Canonical form: a single string when the value is rational.
pub fn value_of(x: &Scalar) -> Value {
    match x.as_rational() {
        Some(q) => Value::Rational(q.to_string()),
        None => Value::Coeffs(x.to_exact_strings()),
    }
}

fn index(i: usize, n: usize, what: &str, at: &dyn Fn() -> String) -> Result<usize, CliError> {
    if i < n {
        Ok(i)
    } else {
        Err(CliError::Input(format!("{}: {what} index {i} out of range 0..{n}", at())))
    }
}

// ---- Hopf algebras ----

impl HopfSpec {
    pub fn to_data(&self) -> Result<HopfData, CliError> {
        let field = self.field.spec()?;
        let d = self.dim;
        if d == 0 {
            return Err(CliError::Input("dim must be positive".into()));
        }
        let mut mult = Tensor3::zeros(d, d, d);
        for (e, (i, j, k, v)) in self.mult.iter().enumerate() {
            let at = || format!("mult[{e}] = ({i}, {j}, {k}, {v})");
            let x = parse_value(v, field, &at)?;
            let (i, j, k) = (index(*i, d, "basis", &at)?, index(*j, d, "basis", &at)?, index(*k, d, "basis", &at)?);
            mult.set(i, j, k, x);
        }
        let mut comult = Tensor3::zeros(d, d, d);
        for (e, (k, i, j, v)) in self.comult.iter().enumerate() {
            let at = || format!("comult[{e}] = ({k}, {i}, {j}, {v})");
            let x = parse_value(v, field, &at)?;
            let (k, i, j) = (index(*k, d, "basis", &at)?, index(*i, d, "basis", &at)?, index(*j, d, "basis", &at)?);
            comult.set(k, i, j, x);
        }
        let vector = |entries: &[(usize, Value)], what: &str| -> Result<Vec<Scalar>, CliError> {
            let mut out = vec![Scalar::zero(); d];
            for (e, (i, v)) in entries.iter().enumerate() {
                let at = || format!("{what}[{e}] = ({i}, {v})");
                out[index(*i, d, "basis", &at)?] = parse_value(v, field, &at)?;
            }
            Ok(out)
        };
        let unit = vector(&self.unit, "unit")?;
        let counit = vector(&self.counit, "counit")?;
        let mut antipode = Matrix::zeros(d, d);
        for (e, (i, j, v)) in self.antipode.iter().enumerate() {
            let at = || format!("antipode[{e}] = ({i}, {j}, {v})");
            let x = parse_value(v, field, &at)?;
            antipode.set(index(*i, d, "row", &at)?, index(*j, d, "column", &at)?, x);
        }
        Ok(HopfData { name: self.name.clone(), field, dim: d, mult, unit, comult, counit, antipode })
    }

    pub fn from_data(h: &HopfData) -> Self {
        let d = h.dim;
        let mut mult = Vec::new();
        let mut comult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let x = h.mult.get(i, j, k);
                    if !x.is_zero() {
                        mult.push((i, j, k, value_of(x)));
                    }
                    let y = h.comult.get(i, j, k);
                    if !y.is_zero() {
                        comult.push((i, j, k, value_of(y)));
                    }
                }
            }
        }
        let vector = |v: &[Scalar]| {
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, value_of(x))).collect()
        };
        let mut antipode = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let x = h.antipode.get(i, j);
                if !x.is_zero() {
                    antipode.push((i, j, value_of(x)));
                }
            }
        }
        HopfSpec {
            name: h.name.clone(),
            field: Field::of(h.field),
            dim: d,
            mult,
            unit: vector(&h.unit),
            comult,
            counit: vector(&h.counit),
            antipode,
        }
    }
}

// ---- algebras, modules, pairings ----

fn operators(
    entries: &[(usize, usize, usize, Value)],
    field: FieldSpec,
    hopf_dim: usize,
    dim: usize,
    what: &str,
) -> Result<Vec<SparseMatrix>, CliError> {
    let mut cells: Vec<BTreeMap<(usize, usize), Scalar>> = vec![BTreeMap::new(); hopf_dim];
    for (e, (t, i, j, v)) in entries.iter().enumerate() {
        let at = || format!("{what}[{e}] = ({t}, {i}, {j}, {v})");
        let x = parse_value(v, field, &at)?;
        let t = index(*t, hopf_dim, "Hopf basis", &at)?;
        cells[t].insert((index(*j, dim, "column", &at)?, index(*i, dim, "row", &at)?), x);
    }
    Ok(cells.into_iter().map(|c| matrix_from_cells(dim, dim, c)).collect())
}

/// Cells keyed by `(column, row)`.
fn matrix_from_cells(rows: usize, cols: usize, cells: BTreeMap<(usize, usize), Scalar>) -> SparseMatrix {
    let mut by_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
    for ((j, i), x) in cells {
        by_col[j].push((i, x));
    }
    SparseMatrix::from_columns(rows, by_col.into_iter().map(|p| SparseVec::from_pairs(rows, p)).collect())
}

fn operator_entries(ops: &[SparseMatrix]) -> Vec<(usize, usize, usize, Value)> {
    let mut out = Vec::new();
    for (t, m) in ops.iter().enumerate() {
        let mut cells: Vec<(usize, usize, Value)> = Vec::new();
        for (j, col) in m.columns().iter().enumerate() {
            for (i, x) in col.iter() {
                cells.push((i, j, value_of(x)));
            }
        }
        cells.sort_by_key(|c| (c.0, c.1));
        out.extend(cells.into_iter().map(|(i, j, v)| (t, i, j, v)));
    }
    out
}

fn vector_entries(v: &SparseVec) -> Vec<(usize, Value)> {
    v.iter().map(|(i, x)| (i, value_of(x))).collect()
}

impl AlgebraSpec {
    pub fn to_algebra(&self) -> Result<(HAlgebra, FieldSpec), CliError> {
        let field = self.field.spec()?;
        let n = self.dim;
        let mut prod: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n * n];
        for (e, (i, j, k, v)) in self.prod.iter().enumerate() {
            let at = || format!("prod[{e}] = ({i}, {j}, {k}, {v})");
            let x = parse_value(v, field, &at)?;
            let (i, j, k) = (index(*i, n, "basis", &at)?, index(*j, n, "basis", &at)?, index(*k, n, "basis", &at)?);
            prod[i * n + j].insert(k, x);
        }
        let unit = match &self.unit {
            None => None,
            Some(entries) => {
                let mut pairs = Vec::new();
                for (e, (i, v)) in entries.iter().enumerate() {
                    let at = || format!("unit[{e}] = ({i}, {v})");
                    pairs.push((index(*i, n, "basis", &at)?, parse_value(v, field, &at)?));
                }
                Some(SparseVec::from_pairs(n, pairs))
            }
        };
        let action = operators(&self.action, field, self.hopf_dim, n, "action")?;
        let prod = prod.into_iter().map(|m| SparseVec::from_pairs(n, m)).collect();
        Ok((HAlgebra { name: self.name.clone(), dim: n, prod, unit, action }, field))
    }

    pub fn from_algebra(a: &HAlgebra, field: FieldSpec) -> Self {
        let n = a.dim;
        let mut prod = Vec::new();
        for p in 0..n * n {
            for (k, x) in a.prod[p].iter() {
                prod.push((p / n, p % n, k, value_of(x)));
            }
        }
        AlgebraSpec {
            name: a.name.clone(),
            field: Field::of(field),
            dim: n,
            hopf_dim: a.action.len(),
            prod,
            unit: a.unit.as_ref().map(vector_entries),
            action: operator_entries(&a.action),
        }
    }
}

impl ModuleSpec {
    pub fn to_module(&self) -> Result<(HModule, FieldSpec), CliError> {
        let field = self.field.spec()?;
        let action = operators(&self.action, field, self.hopf_dim, self.dim, "action")?;
        Ok((HModule::new(self.dim, action), field))
    }

    pub fn from_module(name: &str, m: &HModule, field: FieldSpec) -> Self {
        ModuleSpec {
            name: name.to_string(),
            field: Field::of(field),
            dim: m.dim,
            hopf_dim: m.action.len(),
            action: operator_entries(&m.action),
        }
    }
}

impl PairingSpec {
    pub fn to_paired(&self) -> Result<(PairedSpace, FieldSpec), CliError> {
        let field = self.field.spec()?;
        let m = self.dim;
        let action = operators(&self.action, field, self.hopf_dim, m, "action")?;
        let mut b = Matrix::zeros(m, m);
        for (e, (i, j, v)) in self.pairing.iter().enumerate() {
            let at = || format!("pairing[{e}] = ({i}, {j}, {v})");
            let x = parse_value(v, field, &at)?;
            b.set(index(*i, m, "row", &at)?, index(*j, m, "column", &at)?, x);
        }
        Ok((PairedSpace::new(HModule::new(m, action), b), field))
    }

    pub fn from_paired(name: &str, p: &PairedSpace, field: FieldSpec) -> Self {
        let m = p.dim();
        let mut pairing = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let x = p.pairing.get(i, j);
                if !x.is_zero() {
                    pairing.push((i, j, value_of(x)));
                }
            }
        }
        PairingSpec {
            name: name.to_string(),
            field: Field::of(field),
            dim: m,
            hopf_dim: p.module.action.len(),
            action: operator_entries(&p.module.action),
            pairing,
        }
    }
}

/// Builds the Hopf algebra of a spec; axiom failures surface as
/// [`CliError::Input`] naming the failed axiom.
pub fn hopf_of(spec: &HopfSpec) -> Result<HopfAlgebra, CliError> {
    let data = spec.to_data()?;
    HopfAlgebra::new(data).map_err(|e| CliError::Input(e.to_string()))
}
