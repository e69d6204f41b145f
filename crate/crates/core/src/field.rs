//! Exact scalars: arbitrary-precision rationals and prime fields of
//! machine-word size, plus the extended parameter line `k ∪ {∞}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime modulus. Only constructible through [`Modulus::new`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Modulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(Modulus),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        Modulus::new(p).map(FieldSpec::Prime)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(m) => m.get(),
        }
    }

    /// Number of elements, `None` for an infinite field.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(m) => Some(m.get()),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(m) => {
                let p = m.get() as i128;
                let v = (n as i128).rem_euclid(p) as u64;
                Scalar::Residue(Fp {
                    value: v,
                    modulus: m,
                })
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(m) => {
                let p = BigInt::from(m.get());
                let mut r = n % &p;
                if r.is_negative() {
                    r += &p;
                }
                Scalar::Residue(Fp {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: m,
                })
            }
        }
    }

    /// `num / den`, failing when `den` vanishes in this field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// All elements of a finite field in canonical order; `None` over Q.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(m) => Some(
                (0..m.get())
                    .map(|v| {
                        Scalar::Residue(Fp {
                            value: v,
                            modulus: m,
                        })
                    })
                    .collect(),
            ),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Scalar> {
        parse_scalar(text, *self)
    }

    /// Short name used on the command line: `Q` or `F7`.
    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::Prime(m) => format!("F{}", m.get()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Element of `F_p` in canonical residue form `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: Modulus,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }
}

/// An exact scalar in either supported field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(Fp),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue(x) => FieldSpec::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue(x) => x.value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue(x) => {
                let p = x.modulus.get();
                Scalar::Residue(Fp {
                    value: pow_mod(x.value, p - 2, p),
                    modulus: x.modulus,
                })
            }
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Scalar> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.field().one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Checked arithmetic used at API boundaries.
    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field(),
                other.field()
            )));
        }
        match op {
            ArithOp::Add => Ok(self + other),
            ArithOp::Sub => Ok(self - other),
            ArithOp::Mul => Ok(self * other),
            ArithOp::Div => self.checked_div(other),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue(_) => None,
        }
    }

    /// Canonical residue, for prime-field scalars only.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Residue(x) => Some(x.value),
            Scalar::Rational(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn assert_same_field(a: &Scalar, b: &Scalar) -> Modulus {
    match (a, b) {
        (Scalar::Residue(x), Scalar::Residue(y)) if x.modulus == y.modulus => x.modulus,
        _ => panic!("mixed-field arithmetic: {} and {}", a.field(), b.field()),
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let m = assert_same_field(self, rhs);
                let p = m.get();
                let (a, b) = (self.residue().unwrap(), rhs.residue().unwrap());
                Scalar::Residue(Fp {
                    value: ((a as u128 + b as u128) % p as u128) as u64,
                    modulus: m,
                })
            }
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => {
                let m = assert_same_field(self, rhs);
                let p = m.get();
                let (a, b) = (self.residue().unwrap(), rhs.residue().unwrap());
                Scalar::Residue(Fp {
                    value: ((a as u128 + p as u128 - b as u128) % p as u128) as u64,
                    modulus: m,
                })
            }
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                let m = assert_same_field(self, rhs);
                let (a, b) = (self.residue().unwrap(), rhs.residue().unwrap());
                Scalar::Residue(Fp {
                    value: mul_mod(a, b, m.get()),
                    modulus: m,
                })
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue(x) => {
                let p = x.modulus.get();
                Scalar::Residue(Fp {
                    value: (p - x.value) % p,
                    modulus: x.modulus,
                })
            }
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { $tr::$m(&self, &rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { $tr::$m(&self, rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue(x) => write!(f, "{}", x.value),
        }
    }
}

/// Parse `±int` or `±int/int`. Both ASCII `-` and U+2212 are accepted as
/// the minus sign. Over `F_p` a fraction is read as `a · b⁻¹`.
pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar> {
    let err = |reason: &str| Error::ParseScalar {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let normalized = text.trim().replace('\u{2212}', "-");
    if normalized.is_empty() {
        return Err(err("empty"));
    }
    let (num_txt, den_txt) = match normalized.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (normalized.as_str(), None),
    };
    let parse_int = |s: &str, allow_sign: bool| -> Result<BigInt> {
        let body = s.strip_prefix('+').unwrap_or(s);
        let digits = body.strip_prefix('-').unwrap_or(body);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("expected an integer"));
        }
        if !allow_sign && (s.starts_with('-') || s.starts_with('+')) {
            return Err(err("sign not allowed in denominator"));
        }
        BigInt::from_str(body).map_err(|_| err("expected an integer"))
    };
    let num = parse_int(num_txt, true)?;
    let den = match den_txt {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    match field {
        FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
        FieldSpec::Prime(_) => {
            let d = field.from_bigint(&den);
            if d.is_zero() {
                return Err(err("denominator vanishes modulo p"));
            }
            field.from_bigint(&num).checked_div(&d)
        }
    }
}

/// A point of `k ∪ {∞}`: the parameter of the family `C_n(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtScalar {
    Finite(Scalar),
    Infinity,
}

impl ExtScalar {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtScalar::Infinity)
    }

    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            ExtScalar::Finite(s) => Some(s),
            ExtScalar::Infinity => None,
        }
    }

    /// `inf`, `∞` or a scalar literal.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Self> {
        match text.trim() {
            "inf" | "∞" | "infinity" => Ok(ExtScalar::Infinity),
            t => parse_scalar(t, field).map(ExtScalar::Finite),
        }
    }
}

impl From<Scalar> for ExtScalar {
    fn from(s: Scalar) -> Self {
        ExtScalar::Finite(s)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::Finite(s) => write!(f, "{s}"),
            ExtScalar::Infinity => f.write_str("inf"),
        }
    }
}

/// Total order used only to sort reports deterministically: finite values
/// first (rationals by value, residues by representative), then `∞`.
pub fn ext_cmp(a: &ExtScalar, b: &ExtScalar) -> Ordering {
    match (a, b) {
        (ExtScalar::Infinity, ExtScalar::Infinity) => Ordering::Equal,
        (ExtScalar::Infinity, _) => Ordering::Greater,
        (_, ExtScalar::Infinity) => Ordering::Less,
        (ExtScalar::Finite(x), ExtScalar::Finite(y)) => scalar_cmp(x, y),
    }
}

pub fn scalar_cmp(a: &Scalar, b: &Scalar) -> Ordering {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => x.cmp(y),
        (Scalar::Residue(x), Scalar::Residue(y)) => x.value.cmp(&y.value),
        (Scalar::Rational(_), Scalar::Residue(_)) => Ordering::Less,
        (Scalar::Residue(_), Scalar::Rational(_)) => Ordering::Greater,
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
enum FieldSpecRepr {
    Rationals,
    PrimeField { p: u64 },
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FieldSpec::Rationals => FieldSpecRepr::Rationals,
            FieldSpec::Prime(m) => FieldSpecRepr::PrimeField { p: m.get() },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match FieldSpecRepr::deserialize(d)? {
            FieldSpecRepr::Rationals => Ok(FieldSpec::Rationals),
            FieldSpecRepr::PrimeField { p } => {
                FieldSpec::prime(p).map_err(serde::de::Error::custom)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_examples() {
        let q = FieldSpec::Rationals;
        let a = q.parse("1/2").unwrap();
        let b = q.parse("1/3").unwrap();
        assert_eq!((&a + &b).to_string(), "5/6");
        assert_eq!(q.parse("\u{2212}4/6").unwrap().to_string(), "-2/3");
        assert!(q.parse("-4/-6").is_err());
        assert!(matches!(q.parse("1/0"), Err(Error::ParseScalar { .. })));
        assert!(q.parse("x").is_err());
        assert!(q.parse("").is_err());
    }

    #[test]
    fn prime_field_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        let three = f7.from_i64(3);
        let five = f7.from_i64(5);
        assert_eq!((&three * &five).to_string(), "1");
        assert_eq!(f7.from_i64(2).inv().unwrap().to_string(), "4");
        assert_eq!(f7.parse("10").unwrap().to_string(), "3");
        assert_eq!(f7.parse("-1").unwrap().to_string(), "6");
        assert!(f7.parse("1/7").is_err());
        assert!(matches!(f7.zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn nonprime_modulus_rejected() {
        assert!(matches!(FieldSpec::prime(9), Err(Error::NotPrime(9))));
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(18446744073709551557).is_ok());
        assert!(FieldSpec::prime(18446744073709551555).is_err());
    }

    #[test]
    fn checked_arith_rejects_mixed_fields() {
        let a = FieldSpec::Rationals.one();
        let b = FieldSpec::prime(5).unwrap().one();
        assert!(matches!(
            a.arith(&b, ArithOp::Add),
            Err(Error::FieldMismatch(_))
        ));
        assert!(matches!(
            a.arith(&FieldSpec::Rationals.zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn powers() {
        let f = FieldSpec::Rationals;
        let two = f.from_i64(2);
        assert_eq!(two.pow(-3).unwrap(), f.ratio(1, 8).unwrap());
        assert_eq!(two.pow(0).unwrap(), f.one());
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.from_i64(2).pow(4).unwrap(), f5.one());
    }

    #[test]
    fn ext_scalar_text() {
        let f = FieldSpec::Rationals;
        assert_eq!(ExtScalar::parse("inf", f).unwrap(), ExtScalar::Infinity);
        assert_eq!(ExtScalar::parse("∞", f).unwrap(), ExtScalar::Infinity);
        assert_eq!(ExtScalar::parse("5/3", f).unwrap().to_string(), "5/3");
        assert_ne!(ExtScalar::Infinity, ExtScalar::Finite(f.zero()));
    }

    #[test]
    fn field_json() {
        let f7 = FieldSpec::prime(7).unwrap();
        let s = serde_json::to_string(&f7).unwrap();
        assert_eq!(s, r#"{"kind":"prime_field","p":7}"#);
        assert_eq!(serde_json::from_str::<FieldSpec>(&s).unwrap(), f7);
        assert!(serde_json::from_str::<FieldSpec>(r#"{"kind":"prime_field","p":8}"#).is_err());
        assert_eq!(
            serde_json::from_str::<FieldSpec>(r#"{"kind":"rationals"}"#).unwrap(),
            FieldSpec::Rationals
        );
    }
}
