//! Twisted matrix factorizations of `w` over `B` and their homotopy category.
//!
//! An object is a pair of square `B`-matrices `(C, D)` acting on row vectors
//! by `f: u ↦ uC` and `g: u ↦ ν(u)D`, subject to `ν(C)D = wI = DC`. The
//! twisted free module `ν(B^r)` is identified with `B^r` through
//! `u ↦ ν⁻¹(u)`, so suspensions and cones stay in this plain form.

mod bmatrix;
mod morphism;
mod rank_one;
mod triangle;
mod units;

pub use bmatrix::{BMatrix, ComponentDecomposition};
pub use morphism::{FactMorphism, Homotopy};
pub use rank_one::{rank_one_scan, RankOneWitness};
pub use triangle::{mapping_cone, standard_triangle, StandardTriangle};
pub use units::{strip_units, StrippedFactorization};

use crate::algebra::{AlgebraCtx, BElt};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    ctx: AlgebraCtx,
    c: BMatrix,
    d: BMatrix,
}

/// Ranks of the `x`/`y` components of `C` and `D`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ComponentRanks {
    pub rank: usize,
    pub c1: usize,
    pub c2: usize,
    pub d1: usize,
    pub d2: usize,
}

impl ComponentRanks {
    pub fn all_full(&self) -> bool {
        [self.c1, self.c2, self.d1, self.d2]
            .iter()
            .all(|&r| r == self.rank)
    }
}

fn check_scalar_identity(identity: &'static str, lhs: &BMatrix, w: &BElt) -> Result<()> {
    let zero = BElt::zero(w.field());
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            let expected = if i == j { w } else { &zero };
            if &lhs[(i, j)] != expected {
                return Err(Error::Axiom {
                    identity,
                    row: i,
                    col: j,
                    found: lhs[(i, j)].to_string(),
                    expected: expected.to_string(),
                });
            }
        }
    }
    Ok(())
}

impl Factorization {
    /// Validate `ν(C)D = wI` and `DC = wI` exactly.
    pub fn new(c: BMatrix, d: BMatrix, ctx: &AlgebraCtx) -> Result<Self> {
        if !c.is_square() || !d.is_square() || c.rows() != d.rows() {
            return Err(Error::Dimension(format!(
                "C is {}x{} and D is {}x{}; both must be square of equal rank",
                c.rows(),
                c.cols(),
                d.rows(),
                d.cols()
            )));
        }
        if c.field() != ctx.field() || d.field() != ctx.field() {
            return Err(Error::FieldMismatch(
                "matrix entries outside the context field".into(),
            ));
        }
        let w = ctx.w();
        check_scalar_identity("nu(C)D = wI", &(&c.nu(ctx, 1) * &d), &w)?;
        check_scalar_identity("DC = wI", &(&d * &c), &w)?;
        Ok(Factorization {
            ctx: ctx.clone(),
            c,
            d,
        })
    }

    /// The rank-one object `(x + y, x − qy)`.
    pub fn basic(ctx: &AlgebraCtx) -> Self {
        let f = ctx.field();
        let c = ctx.b_linear(&f.zero(), &f.one(), &f.one());
        let d = ctx.b_linear(&f.zero(), &f.one(), &-ctx.q());
        Self::new(BMatrix::single(c), BMatrix::single(d), ctx).expect("basic factorization")
    }

    /// The contractible object `(1, w)`.
    pub fn trivial(ctx: &AlgebraCtx) -> Self {
        Self::new(
            BMatrix::single(BElt::one(ctx.field())),
            BMatrix::single(ctx.w()),
            ctx,
        )
        .expect("(1, w) is a factorization")
    }

    /// `(xC₁ + yC₂, xC₂⁻¹ − q·yC₁⁻¹)` for invertible `C₁, C₂` over `k`.
    pub fn from_invertible_pair(c1: &Matrix, c2: &Matrix, ctx: &AlgebraCtx) -> Result<Self> {
        if !c1.is_square() || c1.rows() != c2.rows() || !c2.is_square() {
            return Err(Error::Dimension(
                "C1 and C2 must be square of equal size".into(),
            ));
        }
        let n = c1.rows();
        let f = ctx.field();
        let c1_inv = c1
            .inverse()
            .map_err(|_| Error::Singular("C1 is not invertible".into()))?;
        let c2_inv = c2
            .inverse()
            .map_err(|_| Error::Singular("C2 is not invertible".into()))?;
        let z = Matrix::zeros(f, n, n);
        let c = BMatrix::from_components([&z, c1, c2, &z, &z]);
        let d = BMatrix::from_components([&z, &c2_inv, &c1_inv.scale(&-ctx.q()), &z, &z]);
        Self::new(c, d, ctx)
    }

    /// The object realizing `C_n(λ)`: `f` has matrix `x·I + y·q⁻¹Jₙ(λ)`.
    pub fn canonical(n: usize, lambda: &Scalar, ctx: &AlgebraCtx) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if lambda.is_zero() {
            return Err(Error::InvalidParameter(
                "lambda = 0 gives a singular Jordan block".into(),
            ));
        }
        let f = ctx.field();
        let j = jordan_block(n, lambda);
        Self::from_invertible_pair(&Matrix::identity(f, n), &j.scale(ctx.q_inv()), ctx)
    }

    pub fn ctx(&self) -> &AlgebraCtx {
        &self.ctx
    }

    pub fn rank(&self) -> usize {
        self.c.rows()
    }

    pub fn c(&self) -> &BMatrix {
        &self.c
    }

    pub fn d(&self) -> &BMatrix {
        &self.d
    }

    pub fn is_unit_free(&self) -> bool {
        self.c.is_unit_free() && self.d.is_unit_free()
    }

    /// Ranks of `C₁, C₂, D₁, D₂`; requires a unit-free object.
    pub fn component_ranks(&self) -> Result<ComponentRanks> {
        if !self.is_unit_free() {
            return Err(Error::UnitEntries);
        }
        let c = self.c.decompose();
        let d = self.d.decompose();
        Ok(ComponentRanks {
            rank: self.rank(),
            c1: c.c1.rank(),
            c2: c.c2.rank(),
            d1: d.c1.rank(),
            d2: d.c2.rank(),
        })
    }

    /// `Σ(C, D) = (−ν⁻¹(D), −C)`.
    pub fn suspension(&self) -> Factorization {
        let c = -&self.d.nu(&self.ctx, -1);
        let d = -&self.c;
        Self::new(c, d, &self.ctx).expect("suspension of a factorization is a factorization")
    }

    /// Entrywise `ν^power` on both matrices.
    pub fn twist(&self, power: i64) -> Factorization {
        Self::new(
            self.c.nu(&self.ctx, power),
            self.d.nu(&self.ctx, power),
            &self.ctx,
        )
        .expect("twist of a factorization is a factorization")
    }

    pub fn direct_sum(&self, other: &Factorization) -> Result<Factorization> {
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch(
                "direct sum across different contexts".into(),
            ));
        }
        Self::new(
            self.c.direct_sum(&other.c),
            self.d.direct_sum(&other.d),
            &self.ctx,
        )
    }

    /// Transport along an isomorphism `(P, Q)`: `(P⁻¹CQ, ν(Q⁻¹)DP)`.
    /// Returns the new object and the isomorphism from `self` to it.
    pub fn conjugate(&self, p: &BMatrix, q: &BMatrix) -> Result<(Factorization, FactMorphism)> {
        let p_inv = p.inverse()?;
        let q_inv = q.inverse()?;
        let c = &(&p_inv * &self.c) * q;
        let d = &(&q_inv.nu(&self.ctx, 1) * &self.d) * p;
        let target = Self::new(c, d, &self.ctx)?;
        let iso = FactMorphism::new(self, &target, p.clone(), q.clone())?;
        Ok((target, iso))
    }
}

/// Upper-triangular Jordan block with eigenvalue `lambda`.
pub fn jordan_block(n: usize, lambda: &Scalar) -> Matrix {
    let f = lambda.field();
    Matrix::from_fn(f, n, n, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            f.one()
        } else {
            f.zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn validation_examples() {
        for q in [2, -1, 5] {
            let ctx = AlgebraCtx::rationals(q);
            let f = Factorization::basic(&ctx);
            assert_eq!(f.rank(), 1);
            Factorization::trivial(&ctx);
        }
        let ctx = AlgebraCtx::rationals(2);
        let fl = ctx.field();
        let bad = Factorization::new(
            BMatrix::single(BElt::x(fl)),
            BMatrix::single(BElt::y(fl)),
            &ctx,
        );
        match bad {
            Err(Error::Axiom {
                identity,
                row,
                col,
                found,
                ..
            }) => {
                assert_eq!(identity, "nu(C)D = wI");
                assert_eq!((row, col), (0, 0));
                // ν(x)·y = −q⁻¹xy
                assert_eq!(found, "(-1/2)xy");
            }
            other => panic!("unexpected {other:?}"),
        }
        let non_square =
            Factorization::new(BMatrix::zeros(fl, 1, 2), BMatrix::zeros(fl, 2, 1), &ctx);
        assert!(matches!(non_square, Err(Error::Dimension(_))));
    }

    #[test]
    fn invertible_pair_examples() {
        let ctx = AlgebraCtx::rationals(2);
        let f = ctx.field();
        let half = f.ratio(1, 2).unwrap();
        let fac = Factorization::from_invertible_pair(
            &Matrix::identity(f, 1),
            &Matrix::identity(f, 1).scale(&half),
            &ctx,
        )
        .unwrap();
        assert_eq!(fac.c()[(0, 0)], ctx.b_linear(&f.zero(), &f.one(), &half));
        assert_eq!(
            fac.d()[(0, 0)],
            ctx.b_linear(&f.zero(), &f.from_i64(2), &f.from_i64(-2))
        );
        assert_eq!(Factorization::canonical(1, &f.one(), &ctx).unwrap(), fac);

        let ctx3 = AlgebraCtx::rationals(3);
        let swap = Matrix::from_i64(f, &[&[0, 1], &[1, 0]]);
        assert!(Factorization::from_invertible_pair(&Matrix::identity(f, 2), &swap, &ctx3).is_ok());

        let id = Matrix::identity(f, 3);
        let blown = Factorization::from_invertible_pair(&id, &id, &ctx).unwrap();
        let basic = Factorization::basic(&ctx);
        assert_eq!(blown.c()[(1, 1)], basic.c()[(0, 0)]);
        assert_eq!(blown.d()[(2, 2)], basic.d()[(0, 0)]);
        assert!(blown.c()[(0, 1)].is_zero());

        let sing = Matrix::from_i64(f, &[&[1, 1], &[1, 1]]);
        assert!(matches!(
            Factorization::from_invertible_pair(&sing, &swap, &ctx),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn canonical_rejects_zero_lambda() {
        let ctx = AlgebraCtx::rationals(2);
        assert!(Factorization::canonical(1, &ctx.field().zero(), &ctx).is_err());
        assert!(Factorization::canonical(2, &ctx.scalar(3), &ctx).is_ok());
    }

    #[test]
    fn component_ranks() {
        let ctx = AlgebraCtx::rationals(2);
        let can = Factorization::canonical(2, &ctx.scalar(1), &ctx).unwrap();
        assert!(can.component_ranks().unwrap().all_full());
        let basic = Factorization::basic(&ctx);
        let r = basic.component_ranks().unwrap();
        assert_eq!((r.c1, r.c2, r.d1, r.d2), (1, 1, 1, 1));
        let sum = can.direct_sum(&basic).unwrap();
        let r = sum.component_ranks().unwrap();
        assert_eq!(r.rank, 3);
        assert!(r.all_full());
        assert!(matches!(
            Factorization::trivial(&ctx).component_ranks(),
            Err(Error::UnitEntries)
        ));
    }

    #[test]
    fn suspension_formula() {
        let ctx = AlgebraCtx::rationals(2);
        let f = ctx.field();
        let s = Factorization::basic(&ctx).suspension();
        // ν⁻¹(x) = −2x and ν⁻¹(y) = −y/2, so −ν⁻¹(x − 2y) = 2x − y
        assert_eq!(
            s.c()[(0, 0)],
            ctx.b_linear(&f.zero(), &f.from_i64(2), &f.from_i64(-1))
        );
        assert_eq!(
            s.d()[(0, 0)],
            ctx.b_linear(&f.zero(), &f.from_i64(-1), &f.from_i64(-1))
        );
        let can = Factorization::canonical(3, &ctx.scalar(5), &ctx).unwrap();
        assert_eq!(can.suspension().suspension(), can.twist(-1));
    }

    #[test]
    fn direct_sum_requires_same_ctx() {
        let a = Factorization::basic(&AlgebraCtx::rationals(2));
        let b = Factorization::basic(&AlgebraCtx::rationals(3));
        assert!(a.direct_sum(&b).is_err());
        let f7 = AlgebraCtx::parse(FieldSpec::prime(7).unwrap(), "2").unwrap();
        let t = Factorization::basic(&f7)
            .direct_sum(&Factorization::trivial(&f7))
            .unwrap();
        assert_eq!(t.rank(), 2);
    }
}
