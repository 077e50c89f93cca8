//! Exact scalars in ℚ or a cyclotomic field ℚ(ζ_n).
//!
//! Cyclotomic elements are stored in the power basis `1, ζ, …, ζ^{φ(n)-1}`
//! and kept reduced modulo the cyclotomic polynomial `Φ_n`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// The ground field: ℚ or ℚ(ζ_n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    Cyclotomic { order: u32 },
}

impl FieldSpec {
    /// ℚ(ζ_n). Orders 1 and 2 give ℚ.
    pub fn cyclotomic(order: u32) -> Result<Self, LinalgError> {
        match order {
            0 => Err(LinalgError::InvalidField(order)),
            1 | 2 => Ok(FieldSpec::Rationals),
            n => Ok(FieldSpec::Cyclotomic { order: n }),
        }
    }

    /// Conductor `n`; 1 for ℚ.
    pub fn order(self) -> u32 {
        match self {
            FieldSpec::Rationals => 1,
            FieldSpec::Cyclotomic { order } => order,
        }
    }

    /// Degree over ℚ, i.e. φ(n).
    pub fn degree(self) -> usize {
        modulus(self.order()).len() - 1
    }

    pub fn is_rational(self) -> bool {
        matches!(self, FieldSpec::Rationals)
    }

    /// Smallest field containing both, if one contains the other.
    pub fn join(self, other: FieldSpec) -> Result<FieldSpec, LinalgError> {
        match (self, other) {
            (a, b) if a == b => Ok(a),
            (FieldSpec::Rationals, b) => Ok(b),
            (a, FieldSpec::Rationals) => Ok(a),
            (a, b) => Err(LinalgError::FieldMismatch(a, b)),
        }
    }

    /// The primitive root ζ_n; 1 for ℚ.
    pub fn zeta(self) -> Scalar {
        Scalar::root_of_unity(self, 1)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic { order } => write!(f, "Q(zeta_{order})"),
        }
    }
}

/// Coefficients of Φ_n, lowest degree first; monic.
fn modulus(n: u32) -> &'static [i64] {
    static CACHE: OnceLock<Mutex<HashMap<u32, &'static [i64]>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    if let Some(p) = guard.get(&n) {
        return p;
    }
    let poly: &'static [i64] = Box::leak(cyclotomic_polynomial(n).into_boxed_slice());
    guard.insert(n, poly);
    poly
}

/// Φ_n by exact division of x^n − 1 by Φ_d for proper divisors d.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let n = n as usize;
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_polynomial(d as u32);
            num = poly_div_exact(&num, &div);
        }
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &di) in den.iter().enumerate() {
            rem[k + i] -= c * di;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// An exact element of a [`FieldSpec`].
///
/// Rational scalars embed into every cyclotomic field, so mixing them with
/// cyclotomic scalars promotes silently. Mixing two different cyclotomic
/// fields panics in the operators; use the `try_*` methods for a `Result`.
#[derive(Clone, Debug)]
pub struct Scalar {
    field: FieldSpec,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { field: FieldSpec::Rationals, coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(q: BigRational) -> Self {
        Scalar { field: FieldSpec::Rationals, coeffs: vec![q] }
    }

    /// Element with the given power-basis coordinates; reduced if longer than φ(n).
    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<BigRational>) -> Self {
        let mut s = Scalar { field, coeffs };
        s.reduce();
        s
    }

    /// ζ_n^k in the given field.
    pub fn root_of_unity(field: FieldSpec, k: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::one(),
            FieldSpec::Cyclotomic { order } => {
                let e = k.rem_euclid(order as i64) as usize;
                let mut c = vec![BigRational::zero(); e + 1];
                c[e] = BigRational::one();
                Scalar::from_coeffs(field, c)
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this scalar lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-express in a larger field.
    pub fn promote(&self, field: FieldSpec) -> Result<Scalar, LinalgError> {
        let target = self.field.join(field)?;
        if target == self.field {
            return Ok(self.clone());
        }
        let mut coeffs = vec![BigRational::zero(); target.degree()];
        coeffs[0] = self.coeffs[0].clone();
        Ok(Scalar { field: target, coeffs })
    }

    fn reduce(&mut self) {
        let m = modulus(self.field.order());
        let deg = m.len() - 1;
        if self.coeffs.len() > deg {
            for k in (deg..self.coeffs.len()).rev() {
                let c = std::mem::take(&mut self.coeffs[k]);
                if c.is_zero() {
                    continue;
                }
                for (i, &mi) in m.iter().enumerate().take(deg) {
                    if mi != 0 {
                        let t = &c * BigRational::from_integer(BigInt::from(mi));
                        self.coeffs[k - deg + i] -= t;
                    }
                }
            }
            self.coeffs.truncate(deg);
        }
        while self.coeffs.len() < deg {
            self.coeffs.push(BigRational::zero());
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        let field = self.field.join(other.field)?;
        let deg = field.degree();
        let mut coeffs = Vec::with_capacity(deg);
        for i in 0..deg {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => BigRational::zero(),
            });
        }
        Ok(Scalar { field, coeffs })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        let field = self.field.join(other.field)?;
        if self.coeffs.len() == 1 {
            let k = &self.coeffs[0];
            let coeffs = other.coeffs.iter().map(|c| k * c).collect();
            return Ok(Scalar { field, coeffs });
        }
        if other.coeffs.len() == 1 {
            let k = &other.coeffs[0];
            let coeffs = self.coeffs.iter().map(|c| c * k).collect();
            return Ok(Scalar { field, coeffs });
        }
        let mut prod = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(Scalar::from_coeffs(field, prod))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        self.try_add(&-other)
    }

    /// Multiplicative inverse.
    pub fn try_inv(&self) -> Result<Scalar, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            let mut out = Scalar::zero().promote(self.field)?;
            out.coeffs[0] = q.recip();
            return Ok(out);
        }
        // Solve (multiplication by self) · y = 1 over ℚ.
        let deg = self.field.degree();
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(deg);
        for j in 0..deg {
            let mut basis = vec![BigRational::zero(); deg];
            basis[j] = BigRational::one();
            let prod = self.try_mul(&Scalar { field: self.field, coeffs: basis })?;
            cols.push(prod.coeffs);
        }
        let mut aug: Vec<Vec<BigRational>> = (0..deg)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..deg).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for c in 0..deg {
            let p = (c..deg).find(|&r| !aug[r][c].is_zero()).ok_or(LinalgError::DivisionByZero)?;
            aug.swap(c, p);
            let piv = aug[c][c].clone();
            for v in aug[c].iter_mut() {
                *v = &*v / &piv;
            }
            for r in 0..deg {
                if r != c && !aug[r][c].is_zero() {
                    let f = aug[r][c].clone();
                    for k in c..=deg {
                        let t = &f * &aug[c][k];
                        aug[r][k] -= t;
                    }
                }
            }
        }
        let coeffs = aug.into_iter().map(|mut row| row.pop().unwrap()).collect();
        Ok(Scalar { field: self.field, coeffs })
    }

    pub fn inv(&self) -> Scalar {
        self.try_inv().expect("inverse of zero scalar")
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact square root when it exists in ℚ.
    pub fn rational_sqrt(&self) -> Option<Scalar> {
        let q = self.as_rational()?;
        if q.is_negative() {
            return None;
        }
        let n = q.numer().sqrt();
        let d = q.denom().sqrt();
        if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
            Some(Scalar::rational(BigRational::new(n, d)).promote(self.field).ok()?)
        } else {
            None
        }
    }

    /// Square root of a rational number inside a cyclotomic field, built
    /// from Gauss sums. The result lives in this scalar's field when that is
    /// cyclotomic and large enough, otherwise in the smallest ℚ(ζ_M)
    /// containing it; `None` when neither applies.
    pub fn cyclotomic_sqrt(&self) -> Option<Scalar> {
        if let Some(r) = self.rational_sqrt() {
            return Some(r);
        }
        let q = self.as_rational()?;
        // √(a/b) = √(ab) / b
        let n = q.numer() * q.denom();
        let (negative, mut rest) = (n.is_negative(), n.abs());
        let mut square = BigInt::one();
        let mut primes = Vec::new();
        let mut p = BigInt::from(2);
        while &p * &p <= rest {
            let mut k = 0;
            while (&rest % &p).is_zero() {
                rest /= &p;
                k += 1;
            }
            if k % 2 == 1 {
                primes.push(p.clone());
            }
            for _ in 0..k / 2 {
                square *= &p;
            }
            p += 1;
        }
        if !rest.is_one() {
            primes.push(rest);
        }
        let primes: Vec<u32> = primes.iter().map(|p| p.to_u32()).collect::<Option<_>>()?;
        let three_mod_four = primes.iter().filter(|&&p| p % 4 == 3).count();
        let need_i = negative ^ (three_mod_four % 2 == 1);
        let gcd = |mut a: u32, mut b: u32| {
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        let lcm = |a: u32, b: u32| a / gcd(a, b) * b;
        let mut m = if need_i { 4 } else { 1 };
        for &p in &primes {
            m = lcm(m, if p == 2 { 8 } else { p });
        }
        let field = match self.field {
            FieldSpec::Rationals => FieldSpec::cyclotomic(m).ok()?,
            FieldSpec::Cyclotomic { order } if order % m == 0 => self.field,
            _ => return None,
        };
        let o = field.order() as i64;
        let zeta = |k: i64, of: i64| Scalar::root_of_unity(field, k * (o / of));
        let mut root = Scalar::one();
        for &p in &primes {
            let g = if p == 2 {
                &zeta(1, 8) - &zeta(3, 8)
            } else {
                // Σ (a/p) ζ_p^a squares to (−1)^{(p−1)/2} p
                let mut g = Scalar::zero();
                for a in 1..p {
                    let leg = BigInt::from(a).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
                    let term = zeta(a as i64, p as i64);
                    g = if leg.is_one() { &g + &term } else { &g - &term };
                }
                g
            };
            root = &root * &g;
        }
        if need_i {
            root = &root * &zeta(1, 4);
        }
        let root = &root * &Scalar::rational(BigRational::new(square, q.denom().clone()));
        // fix the sign of i so that the square is q, not −q
        let root = if &root * &root == *self { root } else { &root * &zeta(1, 4) };
        (&root * &root == *self).then_some(root)
    }

    /// Canonical exact string: `"p/q"` for rationals, else a power-basis list.
    pub fn to_exact_strings(&self) -> Vec<String> {
        if self.field.is_rational() {
            vec![self.coeffs[0].to_string()]
        } else {
            self.coeffs.iter().map(ToString::to_string).collect()
        }
    }
}

impl FromStr for Scalar {
    type Err = LinalgError;

    /// Parses `"p"` or `"p/q"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || LinalgError::Parse(s.to_string());
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(LinalgError::ZeroDenominator(s.to_string()));
            }
            Ok(Scalar::rational(BigRational::new(n, d)))
        } else {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Scalar::rational(BigRational::from_integer(n)))
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.field == other.field {
            return self.coeffs == other.coeffs;
        }
        match self.try_sub(other) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar field mismatch")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$try(&rhs).expect("scalar field mismatch")
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$try(rhs).expect("scalar field mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if self.field == rhs.field {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if self.field == rhs.field {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a -= b;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> FieldSpec {
        FieldSpec::cyclotomic(3).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta3_relations() {
        let z = q3().zeta();
        let z2 = &z * &z;
        assert!((&z * &z2).is_one());
        assert_eq!(&z2 + &z, Scalar::from_int(-1));
    }

    #[test]
    fn zeta_n_to_the_n_is_one() {
        for n in [3u32, 4, 5, 6, 7, 8, 9, 12] {
            let f = FieldSpec::cyclotomic(n).unwrap();
            let z = f.zeta();
            assert!(z.pow(n).is_one(), "n = {n}");
            // Φ_n(ζ) = 0
            let phi = cyclotomic_polynomial(n);
            let mut acc = Scalar::zero();
            for (k, &c) in phi.iter().enumerate() {
                acc += &(&Scalar::from_int(c) * &z.pow(k as u32));
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(Scalar::from_frac(2, 3).inv(), Scalar::from_frac(3, 2));
    }

    #[test]
    fn cyclotomic_inverse() {
        let f = FieldSpec::cyclotomic(5).unwrap();
        let z = f.zeta();
        let a = &(&z * &z) + &Scalar::from_frac(1, 3);
        assert!((&a * &a.inv()).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Scalar::zero().try_inv(), Err(LinalgError::DivisionByZero)));
    }

    #[test]
    fn mismatched_fields_error() {
        let a = FieldSpec::cyclotomic(3).unwrap().zeta();
        let b = FieldSpec::cyclotomic(5).unwrap().zeta();
        assert!(matches!(a.try_mul(&b), Err(LinalgError::FieldMismatch(..))));
    }

    #[test]
    fn parse_fractions() {
        assert_eq!("-4/6".parse::<Scalar>().unwrap(), Scalar::from_frac(-2, 3));
        assert!(matches!("1/0".parse::<Scalar>(), Err(LinalgError::ZeroDenominator(_))));
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn small_orders_normalize_to_rationals() {
        assert_eq!(FieldSpec::cyclotomic(1).unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::cyclotomic(2).unwrap(), FieldSpec::Rationals);
    }

    #[test]
    fn square_roots_of_rationals() {
        for (n, d) in [(2, 1), (1, 2), (-1, 1), (3, 1), (-3, 4), (5, 1), (6, 1), (-7, 3), (12, 5)] {
            let q = Scalar::from_frac(n, d);
            let r = q.cyclotomic_sqrt().unwrap();
            assert_eq!(&r * &r, q, "{n}/{d}");
        }
        assert_eq!(Scalar::from_frac(9, 4).cyclotomic_sqrt(), Some(Scalar::from_frac(3, 2)));
        // √−3 lies in ℚ(ζ₃), √2 does not
        let m3 = Scalar::from_int(-3).promote(q3()).unwrap();
        assert_eq!(m3.cyclotomic_sqrt().unwrap().field(), q3());
        assert!(Scalar::from_int(2).promote(q3()).unwrap().cyclotomic_sqrt().is_none());
    }
}
