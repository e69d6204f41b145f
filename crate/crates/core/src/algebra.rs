//! The algebras `B = k⟨x,y⟩/(x², y², xyx, yxy)` and
//! `A = B/(w) = k⟨x,y⟩/(x², xy − qyx, y²)`, the twisting automorphism
//! `ν(x) = −q⁻¹x, ν(y) = −qy` and the central element `w = xy − q·yx`.
//!
//! Elements are coefficient vectors on the fixed bases `(1, x, y, xy, yx)`
//! for `B` and `(1, x, y, xy)` for `A`; in `A` the monomial `yx` is always
//! rewritten as `q⁻¹·xy`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

pub const B_DIM: usize = 5;
pub const A_DIM: usize = 4;

/// Ground field together with the nonzero parameter `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraCtx {
    field: FieldSpec,
    q: Scalar,
    q_inv: Scalar,
}

impl AlgebraCtx {
    pub fn new(field: FieldSpec, q: Scalar) -> Result<Self> {
        if q.field() != field {
            return Err(Error::FieldMismatch(format!("q = {q} is not in {field}")));
        }
        let q_inv = q
            .inv()
            .map_err(|_| Error::InvalidParameter("q must be nonzero".into()))?;
        Ok(AlgebraCtx { field, q, q_inv })
    }

    pub fn parse(field: FieldSpec, q: &str) -> Result<Self> {
        Self::new(field, field.parse(q)?)
    }

    pub fn rationals(q: i64) -> Self {
        Self::new(FieldSpec::Rationals, FieldSpec::Rationals.from_i64(q)).expect("q != 0")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn q_inv(&self) -> &Scalar {
        &self.q_inv
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        self.field.from_i64(n)
    }

    /// Scaling factors `(−q⁻¹)^power` on `x` and `(−q)^power` on `y`.
    pub fn nu_factors(&self, power: i64) -> (Scalar, Scalar) {
        let minus_q = -&self.q;
        let fy = minus_q.pow(power).expect("q != 0");
        let fx = fy.inv().expect("q != 0");
        (fx, fy)
    }

    /// `w = xy − q·yx`.
    pub fn w(&self) -> BElt {
        let z = self.field.zero();
        BElt::new([z.clone(), z.clone(), z, self.field.one(), -&self.q])
    }

    pub fn b_mul(&self, u: &BElt, v: &BElt) -> Result<BElt> {
        self.check_b(u)?;
        self.check_b(v)?;
        Ok(u * v)
    }

    fn check_b(&self, u: &BElt) -> Result<()> {
        if u.field() != self.field {
            return Err(Error::FieldMismatch(format!(
                "element over {} used with an algebra over {}",
                u.field(),
                self.field
            )));
        }
        Ok(())
    }

    /// `ν^power(u)`.
    pub fn nu(&self, u: &BElt, power: i64) -> BElt {
        if power == 0 {
            return u.clone();
        }
        let (fx, fy) = self.nu_factors(power);
        let c = &u.0;
        BElt::new([
            c[0].clone(),
            &c[1] * &fx,
            &c[2] * &fy,
            c[3].clone(),
            c[4].clone(),
        ])
    }

    /// Reduction `B → A`: `(c0, c1, c2, c3, c4) ↦ (c0, c1, c2, c3 + q⁻¹c4)`.
    pub fn reduce(&self, u: &BElt) -> AElt {
        let c = &u.0;
        AElt::new([
            c[0].clone(),
            c[1].clone(),
            c[2].clone(),
            &c[3] + &(&self.q_inv * &c[4]),
        ])
    }

    /// The section `A → B` sending basis to basis (`xy ↦ xy`); not multiplicative.
    pub fn lift(&self, u: &AElt) -> BElt {
        let c = &u.0;
        BElt::new([
            c[0].clone(),
            c[1].clone(),
            c[2].clone(),
            c[3].clone(),
            self.field.zero(),
        ])
    }

    pub fn a_mul(&self, u: &AElt, v: &AElt) -> AElt {
        let (a, b) = (&u.0, &v.0);
        let xy = &(&(&a[0] * &b[3]) + &(&a[3] * &b[0])) + &(&a[1] * &b[2]);
        let yx = &a[2] * &b[1];
        AElt::new([
            &a[0] * &b[0],
            &(&a[0] * &b[1]) + &(&a[1] * &b[0]),
            &(&a[0] * &b[2]) + &(&a[2] * &b[0]),
            &xy + &(&self.q_inv * &yx),
        ])
    }

    /// Induced automorphism of `A`.
    pub fn nu_a(&self, u: &AElt, power: i64) -> AElt {
        if power == 0 {
            return u.clone();
        }
        let (fx, fy) = self.nu_factors(power);
        let c = &u.0;
        AElt::new([c[0].clone(), &c[1] * &fx, &c[2] * &fy, c[3].clone()])
    }

    pub fn b_basis(&self) -> Vec<BElt> {
        (0..B_DIM).map(|i| BElt::basis(self.field, i)).collect()
    }

    pub fn a_basis(&self) -> Vec<AElt> {
        (0..A_DIM).map(|i| AElt::basis(self.field, i)).collect()
    }

    /// `b0 + b1 x + b2 y` from small integer coefficients, handy in tests.
    pub fn b_linear(&self, c0: &Scalar, cx: &Scalar, cy: &Scalar) -> BElt {
        let z = self.field.zero();
        BElt::new([c0.clone(), cx.clone(), cy.clone(), z.clone(), z])
    }
}

/// An element of `B` on the basis `(1, x, y, xy, yx)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BElt([Scalar; B_DIM]);

impl BElt {
    pub fn new(coeffs: [Scalar; B_DIM]) -> Self {
        let f = coeffs[0].field();
        assert!(coeffs.iter().all(|c| c.field() == f), "mixed-field element");
        BElt(coeffs)
    }

    pub fn from_vec(field: FieldSpec, v: Vec<Scalar>) -> Result<Self> {
        let arr: [Scalar; B_DIM] = v.try_into().map_err(|v: Vec<_>| {
            Error::Format(format!("B element needs 5 coefficients, got {}", v.len()))
        })?;
        if arr.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch(
                "B element coefficient outside the field".into(),
            ));
        }
        Ok(BElt(arr))
    }

    pub fn zero(field: FieldSpec) -> Self {
        BElt(std::array::from_fn(|_| field.zero()))
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::scalar(field.one())
    }

    pub fn scalar(c: Scalar) -> Self {
        let f = c.field();
        let mut e = Self::zero(f);
        e.0[0] = c;
        e
    }

    pub fn basis(field: FieldSpec, i: usize) -> Self {
        let mut e = Self::zero(field);
        e.0[i] = field.one();
        e
    }

    pub fn x(field: FieldSpec) -> Self {
        Self::basis(field, 1)
    }

    pub fn y(field: FieldSpec) -> Self {
        Self::basis(field, 2)
    }

    pub fn field(&self) -> FieldSpec {
        self.0[0].field()
    }

    pub fn coeffs(&self) -> &[Scalar; B_DIM] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Units of the local algebra `B` are exactly the elements with a
    /// nonzero constant term.
    pub fn is_unit(&self) -> bool {
        !self.0[0].is_zero()
    }

    pub fn inverse(&self) -> Result<BElt> {
        // u = c(1 + n) with n in the radical; rad³ = 0.
        let c_inv = self.0[0].inv()?;
        let f = self.field();
        let n = &self.scale(&c_inv) - &BElt::one(f);
        let inv = &(&BElt::one(f) - &n) + &(&n * &n);
        Ok(inv.scale(&c_inv))
    }

    pub fn scale(&self, s: &Scalar) -> BElt {
        BElt(std::array::from_fn(|i| &self.0[i] * s))
    }
}

impl Mul for &BElt {
    type Output = BElt;
    fn mul(self, rhs: &BElt) -> BElt {
        let (a, b) = (&self.0, &rhs.0);
        let a0b = |i: usize| &a[0] * &b[i];
        let ab0 = |i: usize| &a[i] * &b[0];
        BElt([
            &a[0] * &b[0],
            &a0b(1) + &ab0(1),
            &a0b(2) + &ab0(2),
            &(&a0b(3) + &ab0(3)) + &(&a[1] * &b[2]),
            &(&a0b(4) + &ab0(4)) + &(&a[2] * &b[1]),
        ])
    }
}

impl Add for &BElt {
    type Output = BElt;
    fn add(self, rhs: &BElt) -> BElt {
        BElt(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &BElt {
    type Output = BElt;
    fn sub(self, rhs: &BElt) -> BElt {
        BElt(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &BElt {
    type Output = BElt;
    fn neg(self) -> BElt {
        BElt(std::array::from_fn(|i| -&self.0[i]))
    }
}

const B_NAMES: [&str; B_DIM] = ["", "x", "y", "xy", "yx"];
const A_NAMES: [&str; A_DIM] = ["", "x", "y", "xy"];

fn write_combination(f: &mut fmt::Formatter<'_>, coeffs: &[Scalar], names: &[&str]) -> fmt::Result {
    let mut wrote = false;
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        if wrote {
            f.write_str(" + ")?;
        }
        match (name.is_empty(), c.is_one()) {
            (true, _) => write!(f, "{c}")?,
            (false, true) => f.write_str(name)?,
            (false, false) => write!(f, "({c}){name}")?,
        }
        wrote = true;
    }
    if !wrote {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for BElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0, &B_NAMES)
    }
}

/// An element of `A` on the basis `(1, x, y, xy)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AElt([Scalar; A_DIM]);

impl AElt {
    pub fn new(coeffs: [Scalar; A_DIM]) -> Self {
        AElt(coeffs)
    }

    pub fn from_vec(field: FieldSpec, v: Vec<Scalar>) -> Result<Self> {
        let arr: [Scalar; A_DIM] = v.try_into().map_err(|v: Vec<_>| {
            Error::Format(format!("A element needs 4 coefficients, got {}", v.len()))
        })?;
        if arr.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch(
                "A element coefficient outside the field".into(),
            ));
        }
        Ok(AElt(arr))
    }

    pub fn zero(field: FieldSpec) -> Self {
        AElt(std::array::from_fn(|_| field.zero()))
    }

    pub fn basis(field: FieldSpec, i: usize) -> Self {
        let mut e = Self::zero(field);
        e.0[i] = field.one();
        e
    }

    pub fn field(&self) -> FieldSpec {
        self.0[0].field()
    }

    pub fn coeffs(&self) -> &[Scalar; A_DIM] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> AElt {
        AElt(std::array::from_fn(|i| &self.0[i] * s))
    }
}

impl Add for &AElt {
    type Output = AElt;
    fn add(self, rhs: &AElt) -> AElt {
        AElt(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &AElt {
    type Output = AElt;
    fn sub(self, rhs: &AElt) -> AElt {
        AElt(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &AElt {
    type Output = AElt;
    fn neg(self) -> AElt {
        AElt(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl fmt::Display for AElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0, &A_NAMES)
    }
}

/// `{"field": {...}, "q": "..."}`
#[derive(Serialize, Deserialize)]
struct CtxRepr {
    field: FieldSpec,
    q: String,
}

impl Serialize for AlgebraCtx {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CtxRepr {
            field: self.field,
            q: self.q.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraCtx {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CtxRepr::deserialize(d)?;
        AlgebraCtx::parse(r.field, &r.q).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> AlgebraCtx {
        AlgebraCtx::rationals(2)
    }

    fn b(c: &AlgebraCtx, v: [i64; 5]) -> BElt {
        BElt::new(v.map(|n| c.scalar(n)))
    }

    #[test]
    fn multiplication_table() {
        let c = ctx();
        let f = c.field();
        let (x, y) = (BElt::x(f), BElt::y(f));
        assert_eq!(&x * &y, BElt::basis(f, 3));
        assert_eq!(&y * &x, BElt::basis(f, 4));
        assert!((&x * &x).is_zero());
        assert!((&(&x * &y) * &x).is_zero());
        // (x + y)(x - qy) = -q·xy + yx
        let lhs = &b(&c, [0, 1, 1, 0, 0]) * &b(&c, [0, 1, -2, 0, 0]);
        assert_eq!(lhs, b(&c, [0, 0, 0, -2, 1]));
    }

    #[test]
    fn associativity_exhaustive() {
        for c in [
            ctx(),
            AlgebraCtx::parse(FieldSpec::prime(7).unwrap(), "3").unwrap(),
        ] {
            let bb = c.b_basis();
            for u in &bb {
                for v in &bb {
                    for w in &bb {
                        assert_eq!(&(u * v) * w, u * &(v * w));
                    }
                }
            }
            let ab = c.a_basis();
            for u in &ab {
                for v in &ab {
                    for w in &ab {
                        assert_eq!(c.a_mul(&c.a_mul(u, v), w), c.a_mul(u, &c.a_mul(v, w)));
                    }
                }
            }
        }
    }

    #[test]
    fn nu_examples() {
        let c = ctx();
        let f = c.field();
        let half = f.ratio(1, 2).unwrap();
        let xy_sum = b(&c, [0, 1, 1, 0, 0]);
        let neg_half = -&half;
        assert_eq!(
            c.nu(&xy_sum, 1),
            c.b_linear(&f.zero(), &neg_half, &c.scalar(-2))
        );
        assert_eq!(c.nu(&c.w(), 1), c.w());
        assert_eq!(c.nu(&BElt::x(f), -1), b(&c, [0, -2, 0, 0, 0]));
        // (−q⁻¹x − qy)(x − qy) = w
        assert_eq!(&c.nu(&xy_sum, 1) * &b(&c, [0, 1, -2, 0, 0]), c.w());
    }

    #[test]
    fn nu_is_an_automorphism_fixing_the_ideal_of_w() {
        let c = ctx();
        let bb = c.b_basis();
        for u in &bb {
            assert_eq!(c.nu(&c.nu(u, 1), -1), *u);
            assert_eq!(c.nu(&(u * &c.w()), 1), u * &c.w());
            assert_eq!(&c.w() * u, u * &c.w());
            for v in &bb {
                assert_eq!(c.nu(&(u * v), 1), &c.nu(u, 1) * &c.nu(v, 1));
                assert_eq!(c.nu(&c.nu(u, 2), -1), c.nu(u, 1));
            }
        }
    }

    #[test]
    fn w_coefficients() {
        let c = ctx();
        assert_eq!(c.w(), b(&c, [0, 0, 0, 1, -2]));
        let f = c.field();
        assert!((&c.w() * &BElt::x(f)).is_zero());
        assert!((&BElt::x(f) * &c.w()).is_zero());
        assert_eq!(c.nu(&(&BElt::y(f) * &c.w()), 1), &BElt::y(f) * &c.w());
    }

    #[test]
    fn reduction_is_a_homomorphism_with_kernel_w() {
        let c = ctx();
        let f = c.field();
        assert!(c.reduce(&c.w()).is_zero());
        let half = f.ratio(1, 2).unwrap();
        assert_eq!(c.reduce(&BElt::basis(f, 4)), AElt::basis(f, 3).scale(&half));
        assert_eq!(c.reduce(&BElt::x(f)), AElt::basis(f, 1));
        let bb = c.b_basis();
        for u in &bb {
            for v in &bb {
                assert_eq!(c.reduce(&(u * v)), c.a_mul(&c.reduce(u), &c.reduce(v)));
                assert_eq!(c.reduce(&c.nu(u, 1)), c.nu_a(&c.reduce(u), 1));
            }
        }
        // surjective via the basis section
        for a in c.a_basis() {
            assert_eq!(c.reduce(&c.lift(&a)), a);
        }
    }

    #[test]
    fn a_products() {
        let c = ctx();
        let f = c.field();
        let half = f.ratio(1, 2).unwrap();
        let (x, y) = (AElt::basis(f, 1), AElt::basis(f, 2));
        assert_eq!(c.a_mul(&y, &x), AElt::basis(f, 3).scale(&half));
        let s = &x + &y;
        // (x+y)^2 = (1 + q⁻¹) xy
        assert_eq!(
            c.a_mul(&s, &s),
            AElt::basis(f, 3).scale(&f.ratio(3, 2).unwrap())
        );
    }

    #[test]
    fn inverse_of_units() {
        let c = ctx();
        let u = b(&c, [3, 1, -2, 5, 7]);
        let inv = u.inverse().unwrap();
        assert_eq!(&u * &inv, BElt::one(c.field()));
        assert_eq!(&inv * &u, BElt::one(c.field()));
        assert!(BElt::x(c.field()).inverse().is_err());
    }

    #[test]
    fn mismatched_fields_rejected() {
        let c = ctx();
        let other = BElt::x(FieldSpec::prime(5).unwrap());
        assert!(matches!(
            c.b_mul(&BElt::x(c.field()), &other),
            Err(Error::FieldMismatch(_))
        ));
        assert!(AlgebraCtx::parse(FieldSpec::Rationals, "0").is_err());
    }

    #[test]
    fn ctx_json() {
        let c = AlgebraCtx::parse(FieldSpec::prime(7).unwrap(), "3").unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"field":{"kind":"prime_field","p":7},"q":"3"}"#);
        assert_eq!(serde_json::from_str::<AlgebraCtx>(&s).unwrap(), c);
        assert!(serde_json::from_str::<AlgebraCtx>(r#"{"field":{"kind":"rationals"}}"#).is_err());
    }
}
