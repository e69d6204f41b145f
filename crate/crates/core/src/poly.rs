//! Univariate polynomials over the ground field: enough to take the
//! determinant of a matrix pencil and find its roots in the field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{is_prime, scalar_cmp, FieldSpec, Scalar};
use crate::linalg::Matrix;

/// Dense polynomial, coefficients from the constant term up. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(c.field(), vec![c])
    }

    /// `a + b t`.
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        Poly::new(a.field(), vec![a, b])
    }

    pub fn monomial(field: FieldSpec, c: Scalar, deg: usize) -> Self {
        let mut v = vec![field.zero(); deg];
        v.push(c);
        Poly::new(field, v)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let v = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, v)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-&self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut v = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, v)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            let shift = top - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&c * d);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading")),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_i64(i as i64))
            .collect();
        Poly::new(self.field, v)
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Poly {
        let mut acc = Poly::constant(self.field.one()).div_rem(modulus).1;
        let mut base = self.div_rem(modulus).1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).div_rem(modulus).1;
            }
            base = base.mul(&base).div_rem(modulus).1;
            exp >>= 1;
        }
        acc
    }

    /// Distinct roots in the ground field, sorted.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = match self.field {
            FieldSpec::Prime(m) => prime_field_roots(self, m.get()),
            FieldSpec::Rationals => rational_roots(self),
        };
        roots.sort_by(scalar_cmp);
        roots.dedup();
        roots
    }

    /// Multiplicity of `t = root`.
    pub fn multiplicity(&self, root: &Scalar) -> usize {
        let factor = Poly::linear(-root, self.field.one());
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, r) = p.div_rem(&factor);
            if !r.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }
}

const BRUTE_FORCE_LIMIT: u64 = 4096;

fn prime_field_roots(f: &Poly, p: u64) -> Vec<Scalar> {
    let field = f.field;
    if p <= BRUTE_FORCE_LIMIT {
        return field
            .elements()
            .unwrap()
            .into_iter()
            .filter(|t| f.eval(t).is_zero())
            .collect();
    }
    // gcd(f, t^p - t) collects the linear factors; split it by the
    // Cantor-Zassenhaus trick with deterministic shifts.
    let f = f.monic();
    let t = Poly::linear(field.zero(), field.one());
    let tp = t.pow_mod(p, &f);
    let g = f.gcd(&tp.sub(&t));
    let mut out = Vec::new();
    split_linear(&g, p, &mut out);
    out
}

fn split_linear(g: &Poly, p: u64, out: &mut Vec<Scalar>) {
    let field = g.field;
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let c = &g.coeffs[0] * &g.coeffs[1].inv().unwrap();
            out.push(-c);
        }
        Some(_) => {
            for shift in 0..p {
                let s = Poly::linear(field.from_i64(shift as i64), field.one());
                let h = s.pow_mod((p - 1) / 2, g).sub(&Poly::constant(field.one()));
                let d = g.gcd(&h);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < g.degree().unwrap() {
                    let rest = g.exact_div(&d);
                    split_linear(&d, p, out);
                    split_linear(&rest.monic(), p, out);
                    return;
                }
            }
            unreachable!("a product of distinct linear factors splits for some shift");
        }
    }
}

/// Rational roots via a monic integer transform, root finding modulo a small
/// prime of good reduction, and Hensel lifting past the root bound.
fn rational_roots(f: &Poly) -> Vec<Scalar> {
    let field = f.field;
    let mut roots = Vec::new();
    let mut f = f.clone();
    if f.coeffs[0].is_zero() {
        roots.push(field.zero());
        let k = f.coeffs.iter().take_while(|c| c.is_zero()).count();
        f = Poly::new(field, f.coeffs[k..].to_vec());
    }
    if f.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let g = f.gcd(&f.derivative());
    let sqfree = f.exact_div(&g);
    let ints = primitive_integer_coeffs(&sqfree);
    let n = ints.len() - 1;
    let lead = ints[n].clone();
    // Q(s) = lead^(n-1) P(s / lead), monic with integer roots s = lead * λ.
    let mut monic: Vec<BigInt> = Vec::with_capacity(n + 1);
    let mut pow = BigInt::one();
    let mut lead_pows = vec![BigInt::one(); n];
    for e in lead_pows.iter_mut() {
        *e = pow.clone();
        pow *= &lead;
    }
    for (i, a) in ints.iter().enumerate().take(n) {
        monic.push(a * &lead_pows[n - 1 - i]);
    }
    monic.push(BigInt::one());
    for s in integer_roots_monic(&monic) {
        let lambda = field
            .from_bigint(&s)
            .checked_div(&field.from_bigint(&lead))
            .expect("nonzero lead");
        roots.push(lambda);
    }
    roots
}

fn primitive_integer_coeffs(f: &Poly) -> Vec<BigInt> {
    let rats: Vec<_> = f
        .coeffs
        .iter()
        .map(|c| c.as_rational().unwrap().clone())
        .collect();
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&den / r.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    let mut ints: Vec<BigInt> = ints.into_iter().map(|a| a / &content).collect();
    if ints.last().unwrap().is_negative() {
        for a in ints.iter_mut() {
            *a = -&*a;
        }
    }
    ints
}

fn eval_int(coeffs: &[BigInt], s: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * s + c)
}

fn mod_pos(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a % m;
    if r.is_negative() {
        r + m
    } else {
        r
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = mod_pos(a, m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    mod_pos(&e.x, m)
}

/// Integer roots of a monic square-free integer polynomial.
fn integer_roots_monic(coeffs: &[BigInt]) -> Vec<BigInt> {
    let bound: BigInt = coeffs.iter().map(|c| c.abs()).max().unwrap() + 1;
    let deriv: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let mut p = 1009u64;
    let (prime, residues) = loop {
        while !is_prime(p) {
            p += 2;
        }
        let fp = FieldSpec::prime(p).unwrap();
        let red = Poly::new(fp, coeffs.iter().map(|c| fp.from_bigint(c)).collect());
        let red_d = red.derivative();
        if red.gcd(&red_d).degree() == Some(0) {
            let rs: Vec<BigInt> = prime_field_roots(&red, p)
                .into_iter()
                .map(|r| BigInt::from(r.residue().unwrap()))
                .collect();
            break (p, rs);
        }
        p += 2;
    };
    let pb = BigInt::from(prime);
    let target = &bound * 2;
    let mut out = Vec::new();
    for r0 in residues {
        let mut r = r0;
        let mut m = pb.clone();
        while m <= target {
            m = &m * &m;
            let fr = eval_int(coeffs, &r);
            let dr = eval_int(&deriv, &r);
            r = mod_pos(&(&r - fr * mod_inverse(&dr, &m)), &m);
        }
        let half = &m / 2;
        let s = if r > half { r - &m } else { r };
        if eval_int(coeffs, &s).is_zero() {
            out.push(s);
        }
    }
    out
}

/// `det(X - t Y)` as a polynomial in `t`, by fraction-free elimination
/// over `k[t]`.
pub fn pencil_determinant(x: &Matrix, y: &Matrix) -> Poly {
    assert!(x.is_square() && y.rows() == x.rows() && y.cols() == x.cols());
    let field = x.field();
    let n = x.rows();
    if n == 0 {
        return Poly::constant(field.one());
    }
    let mut m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Poly::linear(x[(i, j)].clone(), -&y[(i, j)]))
                .collect()
        })
        .collect();
    let mut sign = field.one();
    let mut prev = Poly::constant(field.one());
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Poly::zero(field);
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = Poly::zero(field);
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&sign)
}
