//! Finite-dimensional left modules over `A = k⟨x,y⟩/(x², xy − qyx, y²)`.
//!
//! A module is a pair of action matrices on column vectors: `x·v = Xv`,
//! `y·v = Yv`.

mod classify;
mod resolution;

pub use classify::{ClassificationReport, OutsideFamily, OutsideReason, Summand};
pub use resolution::{BettiSequence, Complexity};

use std::collections::BTreeMap;

use crate::algebra::{AElt, AlgebraCtx, A_DIM};
use crate::error::{Error, Result};
use crate::factorization::jordan_block;
use crate::field::{ExtScalar, Scalar};
use crate::linalg::{Matrix, SparseSystem, Subspace};
use crate::random;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AModule {
    ctx: AlgebraCtx,
    x: Matrix,
    y: Matrix,
}

impl AModule {
    /// Validate `X² = 0`, `Y² = 0` and `XY = qYX`.
    pub fn new(x: Matrix, y: Matrix, ctx: &AlgebraCtx) -> Result<Self> {
        if !x.is_square() || !y.is_square() || x.rows() != y.rows() {
            return Err(Error::Dimension(
                "X and Y must be square of equal size".into(),
            ));
        }
        if x.field() != ctx.field() || y.field() != ctx.field() {
            return Err(Error::FieldMismatch(
                "action matrices outside the context field".into(),
            ));
        }
        if !(&x * &x).is_zero() {
            return Err(Error::ModuleRelation {
                relation: "X^2 = 0",
            });
        }
        if !(&y * &y).is_zero() {
            return Err(Error::ModuleRelation {
                relation: "Y^2 = 0",
            });
        }
        if &x * &y != (&y * &x).scale(ctx.q()) {
            return Err(Error::ModuleRelation {
                relation: "XY = qYX",
            });
        }
        Ok(AModule {
            ctx: ctx.clone(),
            x,
            y,
        })
    }

    pub fn zero(ctx: &AlgebraCtx) -> Self {
        let z = Matrix::zeros(ctx.field(), 0, 0);
        AModule {
            ctx: ctx.clone(),
            x: z.clone(),
            y: z,
        }
    }

    /// The simple module `k`.
    pub fn simple(ctx: &AlgebraCtx) -> Self {
        let z = Matrix::zeros(ctx.field(), 1, 1);
        Self::new(z.clone(), z, ctx).expect("k is a module")
    }

    /// `A^rank` with basis `(1, x, y, xy)` in each copy.
    pub fn free(rank: usize, ctx: &AlgebraCtx) -> Self {
        let f = ctx.field();
        let regular = |a: &AElt| {
            Matrix::from_fn(f, A_DIM, A_DIM, |i, j| {
                ctx.a_mul(a, &AElt::basis(f, j)).coeff(i).clone()
            })
        };
        let x1 = regular(&AElt::basis(f, 1));
        let y1 = regular(&AElt::basis(f, 2));
        let mut x = Matrix::zeros(f, 0, 0);
        let mut y = Matrix::zeros(f, 0, 0);
        for _ in 0..rank {
            x = x.direct_sum(&x1);
            y = y.direct_sum(&y1);
        }
        Self::new(x, y, ctx).expect("free module")
    }

    /// `C_n(λ)`: `X = [[0, Jₙ(λ)], [0, 0]]`, `Y = [[0, I], [0, 0]]`, and for
    /// `λ = ∞` the blocks `Iₙ` and `Jₙ(0)`.
    pub fn family(n: usize, lambda: &ExtScalar, ctx: &AlgebraCtx) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let f = ctx.field();
        let (xb, yb) = match lambda {
            ExtScalar::Finite(l) => {
                if l.field() != f {
                    return Err(Error::FieldMismatch(
                        "lambda outside the context field".into(),
                    ));
                }
                (jordan_block(n, l), Matrix::identity(f, n))
            }
            ExtScalar::Infinity => (Matrix::identity(f, n), jordan_block(n, &f.zero())),
        };
        let z = Matrix::zeros(f, n, n);
        let x = Matrix::block(f, &[vec![&z, &xb], vec![&z, &z]]);
        let y = Matrix::block(f, &[vec![&z, &yb], vec![&z, &z]]);
        Self::new(x, y, ctx)
    }

    pub fn ctx(&self) -> &AlgebraCtx {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    /// Action of an arbitrary element of `A`.
    pub fn action(&self, a: &AElt) -> Matrix {
        let f = self.ctx.field();
        let xy = &self.x * &self.y;
        let mut m = Matrix::identity(f, self.dim()).scale(a.coeff(0));
        m = &m + &self.x.scale(a.coeff(1));
        m = &m + &self.y.scale(a.coeff(2));
        &m + &xy.scale(a.coeff(3))
    }

    /// Restriction along `ν^power`: `X·(−q⁻¹)^power`, `Y·(−q)^power`.
    pub fn twist(&self, power: i64) -> AModule {
        let (fx, fy) = self.ctx.nu_factors(power);
        AModule {
            ctx: self.ctx.clone(),
            x: self.x.scale(&fx),
            y: self.y.scale(&fy),
        }
    }

    pub fn direct_sum(&self, other: &AModule) -> Result<AModule> {
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch(
                "direct sum across different contexts".into(),
            ));
        }
        Ok(AModule {
            ctx: self.ctx.clone(),
            x: self.x.direct_sum(&other.x),
            y: self.y.direct_sum(&other.y),
        })
    }

    /// The same module on the basis given by the columns of `s`: `S⁻¹XS`, `S⁻¹YS`.
    pub fn change_basis(&self, s: &Matrix) -> Result<AModule> {
        let s_inv = s.inverse()?;
        Ok(AModule {
            ctx: self.ctx.clone(),
            x: &(&s_inv * &self.x) * s,
            y: &(&s_inv * &self.y) * s,
        })
    }

    /// `rad M = XM + YM`; it contains `XYM`.
    pub fn radical(&self) -> Subspace {
        self.x.image().sum(&self.y.image())
    }

    /// Minimal number of generators, `dim M/rad M`.
    pub fn generator_count(&self) -> usize {
        self.dim() - self.radical().dim()
    }

    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        sub.basis()
            .iter()
            .all(|v| sub.contains(&self.x.mul_vec(v)) && sub.contains(&self.y.mul_vec(v)))
    }

    /// The submodule on `sub`, with actions written in its echelon basis.
    pub fn submodule(&self, sub: &Subspace) -> Result<AModule> {
        if !self.is_submodule(sub) {
            return Err(Error::NotSubmodule("x and y"));
        }
        let f = self.ctx.field();
        let d = sub.dim();
        let restrict = |a: &Matrix| {
            let cols: Vec<Vec<Scalar>> = sub
                .basis()
                .iter()
                .map(|v| sub.coordinates(&a.mul_vec(v)).expect("stable subspace"))
                .collect();
            Matrix::from_fn(f, d, d, |i, j| cols[j][i].clone())
        };
        Self::new(restrict(&self.x), restrict(&self.y), &self.ctx)
    }

    /// `M / sub`, on the standard complement of `sub`.
    pub fn quotient(&self, sub: &Subspace) -> Result<AModule> {
        if !self.is_submodule(sub) {
            return Err(Error::NotSubmodule("x and y"));
        }
        let f = self.ctx.field();
        let n = self.dim();
        let complement = sub.standard_complement();
        let basis = Matrix::from_fn(f, n, n, |i, j| {
            if j < sub.dim() {
                sub.basis()[j][i].clone()
            } else {
                complement[j - sub.dim()][i].clone()
            }
        });
        let moved = self.change_basis(&basis)?;
        let k = sub.dim();
        Self::new(
            moved.x.submatrix(k, n, k, n),
            moved.y.submatrix(k, n, k, n),
            &self.ctx,
        )
    }

    /// Basis of `Hom_A(self, other)` as matrices `Φ` with `ΦX₁ = X₂Φ`, `ΦY₁ = Y₂Φ`.
    pub fn homomorphisms(&self, other: &AModule) -> Vec<Matrix> {
        let f = self.ctx.field();
        let (m, n) = (self.dim(), other.dim());
        // Φ is n×m, unknown (i, j) at index i*m + j.
        let mut sys = SparseSystem::new(f, n * m);
        for (a, b) in [(&self.x, &other.x), (&self.y, &other.y)] {
            for i in 0..n {
                for j in 0..m {
                    let mut row = BTreeMap::new();
                    for l in 0..m {
                        if !a[(l, j)].is_zero() {
                            add_coeff(&mut row, i * m + l, a[(l, j)].clone());
                        }
                    }
                    for l in 0..n {
                        if !b[(i, l)].is_zero() {
                            add_coeff(&mut row, l * m + j, -&b[(i, l)]);
                        }
                    }
                    sys.push(row, f.zero());
                }
            }
        }
        sys.nullspace()
            .into_iter()
            .map(|v| Matrix::from_fn(f, n, m, |i, j| v[i * m + j].clone()))
            .collect()
    }

    /// An explicit isomorphism `Φ: self → other`, searched in the
    /// homomorphism space: exhaustively when it has at most 4096 elements,
    /// otherwise by seeded random combinations. A returned matrix is always
    /// a certified isomorphism; `None` after sampling is a probabilistic verdict.
    pub fn find_isomorphism(&self, other: &AModule) -> Option<Matrix> {
        if self.ctx != other.ctx || self.dim() != other.dim() {
            return None;
        }
        let d = self.dim();
        let f = self.ctx.field();
        if d == 0 {
            return Some(Matrix::zeros(f, 0, 0));
        }
        let basis = self.homomorphisms(other);
        if basis.is_empty() {
            return None;
        }
        let combine = |coeffs: &[Scalar]| {
            basis
                .iter()
                .zip(coeffs)
                .fold(Matrix::zeros(f, d, d), |acc, (b, c)| &acc + &b.scale(c))
        };
        if let Some(order) = f.order() {
            let size = (order as u128).checked_pow(basis.len() as u32);
            if size.is_some_and(|s| s <= 4096) {
                let elems = f.elements().expect("finite field");
                let mut idx = vec![0usize; basis.len()];
                loop {
                    let coeffs: Vec<Scalar> = idx.iter().map(|&i| elems[i].clone()).collect();
                    let phi = combine(&coeffs);
                    if !phi.det().is_zero() {
                        return Some(phi);
                    }
                    // odometer increment
                    let mut pos = 0;
                    loop {
                        if pos == idx.len() {
                            return None;
                        }
                        idx[pos] += 1;
                        if idx[pos] < elems.len() {
                            break;
                        }
                        idx[pos] = 0;
                        pos += 1;
                    }
                }
            }
        }
        let mut rng = random::rng(0x15_0a_f0);
        let samples = (2 * d).max(64);
        for _ in 0..samples {
            let coeffs: Vec<Scalar> = (0..basis.len())
                .map(|_| random::scalar(f, &mut rng, 1 << 20))
                .collect();
            let phi = combine(&coeffs);
            if !phi.det().is_zero() {
                return Some(phi);
            }
        }
        None
    }

    /// Decide `self ≅ other`. Cheap rank invariants first; then the
    /// classification when both sides lie in the free ⊕ `C_n(λ)` family,
    /// and the homomorphism search otherwise.
    pub fn is_isomorphic(&self, other: &AModule) -> bool {
        if self.ctx != other.ctx || self.rank_profile() != other.rank_profile() {
            return false;
        }
        match (self.classify(), other.classify()) {
            (Ok(a), Ok(b)) => a == b,
            (Ok(_), Err(_)) | (Err(_), Ok(_)) => false,
            (Err(_), Err(_)) => self.find_isomorphism(other).is_some(),
        }
    }

    /// `(dim, rank X, rank Y, rank XY, dim rad)`, invariant under isomorphism.
    pub fn rank_profile(&self) -> (usize, usize, usize, usize, usize) {
        (
            self.dim(),
            self.x.rank(),
            self.y.rank(),
            (&self.x * &self.y).rank(),
            self.radical().dim(),
        )
    }
}

fn add_coeff(row: &mut BTreeMap<usize, Scalar>, idx: usize, c: Scalar) {
    let e = row.entry(idx).or_insert_with(|| c.field().zero());
    *e = &*e + &c;
    if e.is_zero() {
        row.remove(&idx);
    }
}
