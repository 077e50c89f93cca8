//! Standard examples: group algebras, function algebras, Sweedler and Taft.

use std::fmt;
use std::str::FromStr;

use crate::exactla::{FieldSpec, Matrix, Scalar, Tensor3};
use crate::HopfError;

use super::{HopfAlgebra, HopfData};

/// A finite group given by its multiplication table, identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    pub name: String,
    pub table: Vec<Vec<usize>>,
}

impl Group {
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, HopfError> {
        let g = Group { name: name.into(), table };
        g.check()?;
        Ok(g)
    }

    fn check(&self) -> Result<(), HopfError> {
        let n = self.table.len();
        let err = |m: String| Err(HopfError::InvalidGroup(m));
        if n == 0 {
            return err("empty table".into());
        }
        for (a, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return err(format!("row {a} has length {}", row.len()));
            }
            if let Some(&b) = row.iter().find(|&&b| b >= n) {
                return err(format!("entry {b} in row {a} out of range"));
            }
        }
        for a in 0..n {
            if self.table[0][a] != a || self.table[a][0] != a {
                return err(format!("index 0 is not an identity (fails at {a})"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return err(format!("not associative at ({a},{b},{c})"));
                    }
                }
            }
            if !(0..n).any(|b| self.table[a][b] == 0) {
                return err(format!("{a} has no inverse"));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group { name: format!("C{n}"), table }
    }

    /// Permutations of three letters in lexicographic order.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        Group { name: "S3".into(), table }
    }

    pub fn by_name(name: &str) -> Result<Self, HopfError> {
        let lower = name.to_ascii_lowercase();
        if lower == "s3" {
            return Ok(Group::symmetric3());
        }
        if let Some(n) = lower.strip_prefix('c') {
            if let Ok(n) = n.parse::<usize>() {
                if n >= 1 {
                    return Ok(Group::cyclic(n));
                }
            }
        }
        Err(HopfError::InvalidGroup(format!("unknown group {name:?}")))
    }
}

/// Names of the built-in examples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusName {
    Trivial,
    GroupAlgebra(Group),
    FunctionAlgebra(Group),
    Sweedler,
    Taft(u32),
}

impl fmt::Display for CorpusName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusName::Trivial => write!(f, "trivial"),
            CorpusName::GroupAlgebra(g) => write!(f, "group:{}", g.name),
            CorpusName::FunctionAlgebra(g) => write!(f, "fun:{}", g.name),
            CorpusName::Sweedler => write!(f, "sweedler"),
            CorpusName::Taft(n) => write!(f, "taft{n}"),
        }
    }
}

impl FromStr for CorpusName {
    type Err = HopfError;

    /// Accepts `trivial`, `group:C2`, `fun:S3`, `sweedler`, `taft3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "trivial" {
            return Ok(CorpusName::Trivial);
        }
        if lower == "sweedler" || lower == "h4" {
            return Ok(CorpusName::Sweedler);
        }
        if let Some(n) = lower.strip_prefix("taft") {
            let n: u32 = n.trim_start_matches(['(', ':']).trim_end_matches(')').parse().map_err(|_| {
                HopfError::Structure(format!("bad Taft order in {s:?}"))
            })?;
            return Ok(CorpusName::Taft(n));
        }
        if let Some(g) = lower.strip_prefix("group:") {
            return Ok(CorpusName::GroupAlgebra(Group::by_name(g)?));
        }
        if let Some(g) = lower.strip_prefix("fun:") {
            return Ok(CorpusName::FunctionAlgebra(Group::by_name(g)?));
        }
        Err(HopfError::Structure(format!("unknown corpus name {s:?}")))
    }
}

/// Builds and validates a corpus algebra.
pub fn corpus(name: &CorpusName) -> Result<HopfAlgebra, HopfError> {
    let data = match name {
        CorpusName::Trivial => group_algebra_data(&Group::cyclic(1), "trivial"),
        CorpusName::GroupAlgebra(g) => group_algebra_data(g, &format!("C[{}]", g.name)),
        CorpusName::FunctionAlgebra(g) => function_algebra_data(g),
        CorpusName::Sweedler => taft_data(2, FieldSpec::Rationals)?,
        CorpusName::Taft(n) => taft_data(*n, FieldSpec::cyclotomic(*n)?)?,
    };
    HopfAlgebra::new(data)
}

/// Taft algebra of order `n` over a given field, which must be ℚ(ζ_n).
pub fn taft_in(n: u32, field: FieldSpec) -> Result<HopfAlgebra, HopfError> {
    HopfAlgebra::new(taft_data(n, field)?)
}

pub fn trivial() -> HopfAlgebra {
    corpus(&CorpusName::Trivial).expect("trivial Hopf algebra")
}

pub fn group_algebra(g: &Group) -> HopfAlgebra {
    corpus(&CorpusName::GroupAlgebra(g.clone())).expect("group algebra")
}

pub fn function_algebra(g: &Group) -> HopfAlgebra {
    corpus(&CorpusName::FunctionAlgebra(g.clone())).expect("function algebra")
}

pub fn sweedler() -> HopfAlgebra {
    corpus(&CorpusName::Sweedler).expect("Sweedler algebra")
}

pub fn taft(n: u32) -> HopfAlgebra {
    corpus(&CorpusName::Taft(n)).expect("Taft algebra")
}

/// The acceptance corpus, in a fixed order.
pub fn standard_corpus() -> Vec<HopfAlgebra> {
    vec![
        trivial(),
        group_algebra(&Group::cyclic(2)),
        group_algebra(&Group::cyclic(4)),
        group_algebra(&Group::symmetric3()),
        function_algebra(&Group::symmetric3()),
        sweedler(),
        taft(3),
    ]
}

fn one_hot(d: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    v[i] = Scalar::one();
    v
}

pub(crate) fn group_algebra_data(g: &Group, name: &str) -> HopfData {
    let n = g.order();
    let mult = Tensor3::from_fn(n, n, n, |a, b, c| if g.mul(a, b) == c { Scalar::one() } else { Scalar::zero() });
    let comult = Tensor3::from_fn(n, n, n, |k, i, j| if i == k && j == k { Scalar::one() } else { Scalar::zero() });
    let mut s = Matrix::zeros(n, n);
    for a in 0..n {
        s.set(g.inv(a), a, Scalar::one());
    }
    HopfData {
        name: name.to_string(),
        field: FieldSpec::Rationals,
        dim: n,
        mult,
        unit: one_hot(n, 0),
        comult,
        counit: vec![Scalar::one(); n],
        antipode: s,
    }
}

fn function_algebra_data(g: &Group) -> HopfData {
    let n = g.order();
    let mult = Tensor3::from_fn(n, n, n, |a, b, c| if a == b && b == c { Scalar::one() } else { Scalar::zero() });
    let comult =
        Tensor3::from_fn(n, n, n, |k, i, j| if g.mul(i, j) == k { Scalar::one() } else { Scalar::zero() });
    let mut s = Matrix::zeros(n, n);
    for a in 0..n {
        s.set(g.inv(a), a, Scalar::one());
    }
    HopfData {
        name: format!("C^{}", g.name),
        field: FieldSpec::Rationals,
        dim: n,
        mult,
        unit: vec![Scalar::one(); n],
        comult,
        counit: one_hot(n, 0),
        antipode: s,
    }
}

/// Taft algebra: `gⁿ = 1`, `xⁿ = 0`, `xg = ζ gx`, basis `gⁱxʲ` at index `j·n + i`.
fn taft_data(n: u32, field: FieldSpec) -> Result<HopfData, HopfError> {
    if n < 2 {
        return Err(HopfError::Field(format!("Taft order must be at least 2, got {n}")));
    }
    if field != FieldSpec::cyclotomic(n)? {
        return Err(HopfError::Field(format!("Taft algebra of order {n} needs Q(zeta_{n}), got {field}")));
    }
    let nn = n as usize;
    let d = nn * nn;
    let zeta = if n == 2 { Scalar::from_int(-1) } else { field.zeta() };
    let zpow: Vec<Scalar> = (0..nn).map(|k| zeta.pow(k as u32)).collect();
    let idx = |i: usize, j: usize| j * nn + i;

    // Products of normal-form monomials.
    let mut mult = Tensor3::zeros(d, d, d);
    for j in 0..nn {
        for i in 0..nn {
            for l in 0..nn {
                for k in 0..nn {
                    if j + l < nn {
                        let c = zpow[(j * k) % nn].clone();
                        mult.set(idx(i, j), idx(k, l), idx((i + k) % nn, j + l), c);
                    }
                }
            }
        }
    }
    let mul = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); d];
        for (p, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                for (r, o) in out.iter_mut().enumerate() {
                    let m = mult.get(p, q, r);
                    if !m.is_zero() {
                        *o += &(&(x * y) * m);
                    }
                }
            }
        }
        out
    };
    // In H⊗H, index p·d + q.
    let mul2 = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); d * d];
        for (p, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let l = mul(&one_hot(d, p / d), &one_hot(d, q / d));
                let r = mul(&one_hot(d, p % d), &one_hot(d, q % d));
                let c = x * y;
                for (u, lu) in l.iter().enumerate() {
                    if lu.is_zero() {
                        continue;
                    }
                    for (v, rv) in r.iter().enumerate() {
                        if !rv.is_zero() {
                            out[u * d + v] += &(&c * &(lu * rv));
                        }
                    }
                }
            }
        }
        out
    };

    let g = idx(1 % nn, 0);
    let x = idx(0, 1);
    let one = idx(0, 0);
    let ginv = idx(nn - 1, 0);
    let mut dg = vec![Scalar::zero(); d * d];
    dg[g * d + g] = Scalar::one();
    let mut dx = vec![Scalar::zero(); d * d];
    dx[x * d + one] = Scalar::one();
    dx[g * d + x] = Scalar::one();
    let sg = one_hot(d, ginv);
    let sx: Vec<Scalar> = mul(&one_hot(d, ginv), &one_hot(d, x)).iter().map(|c| -c).collect();

    let mut comult = Tensor3::zeros(d, d, d);
    let mut antipode = Matrix::zeros(d, d);
    for j in 0..nn {
        for i in 0..nn {
            // Δ(gⁱxʲ) = Δ(g)ⁱ Δ(x)ʲ and S(gⁱxʲ) = S(x)ʲ S(g)ⁱ.
            let mut dd = vec![Scalar::zero(); d * d];
            dd[one * d + one] = Scalar::one();
            let mut s = one_hot(d, one);
            for _ in 0..i {
                dd = mul2(&dd, &dg);
            }
            for _ in 0..j {
                dd = mul2(&dd, &dx);
                s = mul(&s, &sx);
            }
            for _ in 0..i {
                s = mul(&s, &sg);
            }
            let k = idx(i, j);
            for (p, c) in dd.into_iter().enumerate() {
                comult.set(k, p / d, p % d, c);
            }
            for (r, c) in s.into_iter().enumerate() {
                antipode.set(r, k, c);
            }
        }
    }
    let counit = (0..d).map(|k| if k < nn { Scalar::one() } else { Scalar::zero() }).collect();
    let name = if n == 2 { "H4".to_string() } else { format!("T{n}") };
    Ok(HopfData { name, field, dim: d, mult, unit: one_hot(d, one), comult, counit, antipode })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::validate_hopf;

    #[test]
    fn trivial_is_one_dimensional() {
        let h = trivial();
        assert_eq!(h.dim(), 1);
        assert!(h.mul_basis(0, 0).get(0).is_one());
    }

    #[test]
    fn sweedler_basis_and_relations() {
        let h = sweedler();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.field(), FieldSpec::Rationals);
        // basis 1, g, x, gx
        let (g, x, gx) = (h.basis(1), h.basis(2), h.basis(3));
        assert_eq!(h.mul(&g, &g), h.one());
        assert!(h.mul(&x, &x).is_zero());
        assert_eq!(h.mul(&x, &g), gx.neg());
        assert_eq!(h.mul(&g, &x), gx);
        assert_eq!(h.s(&x), gx.neg());
        assert!(!h.is_involutive());
    }

    #[test]
    fn taft3_is_not_involutive() {
        let h = taft(3);
        assert_eq!(h.dim(), 9);
        assert_eq!(h.field(), FieldSpec::cyclotomic(3).unwrap());
        assert!(!h.is_involutive());
    }

    #[test]
    fn taft_needs_matching_field() {
        assert!(taft_in(3, FieldSpec::cyclotomic(5).unwrap()).is_err());
        assert!(taft_in(3, FieldSpec::Rationals).is_err());
    }

    #[test]
    fn bad_group_table_rejected() {
        assert!(Group::new("bad", vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(Group::new("bad", vec![vec![0, 1], vec![1]]).is_err());
    }

    #[test]
    fn corpus_validates() {
        for h in standard_corpus() {
            let rep = validate_hopf(h.data()).unwrap();
            assert!(rep.all_passed(), "{}: {:?}", h.name(), rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn names_round_trip() {
        for s in ["trivial", "group:C2", "fun:S3", "sweedler", "taft3"] {
            let n: CorpusName = s.parse().unwrap();
            assert_eq!(n.to_string(), s);
        }
    }
}
