//! Reduction modulo `w`: a factorization over `B` becomes a doubly infinite
//! complex of free `A`-modules
//! `⋯ → A^r --C̄--> A^r --D̄--> A^r --C̄--> ⋯`, maps acting on row vectors.

use std::fmt;

use crate::algebra::{AElt, AlgebraCtx, A_DIM};
use crate::amodule::{AModule, ClassificationReport, OutsideFamily};
use crate::error::{Error, Result};
use crate::factorization::{BMatrix, FactMorphism, Factorization};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

/// Matrix over `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<AElt>,
}

impl AMatrix {
    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> AElt,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        AMatrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn reduce(m: &BMatrix, ctx: &AlgebraCtx) -> Self {
        Self::from_fn(ctx.field(), m.rows(), m.cols(), |i, j| {
            ctx.reduce(&m[(i, j)])
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &AElt {
        &self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AElt::is_zero)
    }

    pub fn mul(&self, other: &AMatrix, ctx: &AlgebraCtx) -> AMatrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in A-matrix product"
        );
        Self::from_fn(self.field, self.rows, other.cols, |i, j| {
            (0..self.cols).fold(AElt::zero(self.field), |acc, l| {
                &acc + &ctx.a_mul(self.entry(i, l), other.entry(l, j))
            })
        })
    }

    pub fn nu(&self, ctx: &AlgebraCtx, power: i64) -> AMatrix {
        Self::from_fn(self.field, self.rows, self.cols, |i, j| {
            ctx.nu_a(self.entry(i, j), power)
        })
    }

    /// The `k`-linear map `u ↦ ν^twist(u)·M` from `A^rows` to `A^cols`, as a
    /// matrix on column coordinate vectors indexed `4·entry + basis`.
    pub fn right_action(&self, ctx: &AlgebraCtx, twist: i64) -> Matrix {
        let f = self.field;
        let (fx, fy) = ctx.nu_factors(twist);
        let factors = [f.one(), fx, fy, f.one()];
        let mut out = Matrix::zeros(f, A_DIM * self.cols, A_DIM * self.rows);
        for i in 0..self.rows {
            for (m, factor) in factors.iter().enumerate() {
                let e = AElt::basis(f, m).scale(factor);
                for j in 0..self.cols {
                    let prod = ctx.a_mul(&e, self.entry(i, j));
                    for (n, c) in prod.coeffs().iter().enumerate() {
                        out[(A_DIM * j + n, A_DIM * i + m)] = c.clone();
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for AMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.entry(i, j).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `(C̄, D̄)` with `ν(C̄)D̄ = 0 = D̄C̄` over `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFactorization {
    pub c: AMatrix,
    pub d: AMatrix,
}

pub fn reduce_factorization(f: &Factorization) -> ReducedFactorization {
    let ctx = f.ctx();
    ReducedFactorization {
        c: AMatrix::reduce(f.c(), ctx),
        d: AMatrix::reduce(f.d(), ctx),
    }
}

/// The chain map `(P̄, Q̄)` induced on reduced complexes.
pub fn reduce_morphism(theta: &FactMorphism) -> (AMatrix, AMatrix) {
    let ctx = theta.ctx();
    (
        AMatrix::reduce(theta.p(), ctx),
        AMatrix::reduce(theta.q(), ctx),
    )
}

/// Exactness data for the reduced complex.
///
/// The complex repeats the pattern `Φ_C, Φ_D` up to twisting by `ν`, and
/// twisting changes the module structure but not the underlying linear maps,
/// so kernels and images at every position are among the four subspaces
/// compared here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicityReport {
    pub rank: usize,
    pub composites_zero: bool,
    /// `ker Φ_D = im Φ_C` (exactness after `C̄`).
    pub exact_after_c: bool,
    /// `ker Φ_C = im Φ_D` (exactness after `D̄`).
    pub exact_after_d: bool,
    pub image_c_dim: usize,
    pub image_d_dim: usize,
}

impl AcyclicityReport {
    pub fn is_acyclic(&self) -> bool {
        self.composites_zero && self.exact_after_c && self.exact_after_d
    }
}

pub fn check_acyclic(f: &Factorization) -> AcyclicityReport {
    let ctx = f.ctx();
    let red = reduce_factorization(f);
    let phi_c = red.c.right_action(ctx, 0);
    let phi_d = red.d.right_action(ctx, 1);
    let composites_zero = (&phi_d * &phi_c).is_zero() && (&phi_c * &phi_d).is_zero();
    let (im_c, im_d) = (phi_c.image(), phi_d.image());
    AcyclicityReport {
        rank: f.rank(),
        composites_zero,
        exact_after_c: phi_d.kernel_space() == im_c,
        exact_after_d: phi_c.kernel_space() == im_d,
        image_c_dim: im_c.dim(),
        image_d_dim: im_d.dim(),
    }
}

/// The image of `C̄: A^r → A^r` as a left `A`-module, on its echelon basis.
pub fn image_module(f: &Factorization) -> AModule {
    let ctx = f.ctx();
    let red = reduce_factorization(f);
    let image = red.c.right_action(ctx, 0).image();
    AModule::free(f.rank(), ctx)
        .submodule(&image)
        .expect("the image of a module map is a submodule")
}

/// `X = [[0, qC₁⁻¹C₂], [0, 0]]`, `Y = [[0, I], [0, 0]]` for a unit-free
/// object with `C = xC₁ + yC₂ + (socle terms)`.
pub fn image_module_block_form(f: &Factorization) -> Result<AModule> {
    if !f.is_unit_free() {
        return Err(Error::UnitEntries);
    }
    let ctx = f.ctx();
    let k = ctx.field();
    let parts = f.c().decompose();
    let c1_inv = parts
        .c1
        .inverse()
        .map_err(|_| Error::Singular("x-component of C is singular".into()))?;
    let r = f.rank();
    let z = Matrix::zeros(k, r, r);
    let xb = (&c1_inv * &parts.c2).scale(ctx.q());
    let x = Matrix::block(k, &[vec![&z, &xb], vec![&z, &z]]);
    let y = Matrix::block(k, &[vec![&z, &Matrix::identity(k, r)], vec![&z, &z]]);
    AModule::new(x, y, ctx)
}

/// One position of the complex `⋯ → A --·aₙ--> A --·aₙ₋₁--> A → ⋯` with
/// `aₙ = x + (−q)^{n+1}y`.
#[derive(Clone, Debug)]
pub struct SchulzPosition {
    pub n: i64,
    pub coefficient: Scalar,
    /// `aₙ·aₙ₋₁ = 0`; `None` at the lower edge of the window.
    pub composite_zero: Option<bool>,
    /// `ker(·aₙ₋₁) = im(·aₙ)`; `None` at the lower edge of the window.
    pub exact: Option<bool>,
    /// `A / A·aₙ`.
    pub cokernel: AModule,
    pub class: std::result::Result<ClassificationReport, OutsideFamily>,
}

#[derive(Clone, Debug)]
pub struct SchulzReport {
    pub positions: Vec<SchulzPosition>,
}

impl SchulzReport {
    pub fn all_exact(&self) -> bool {
        self.positions
            .iter()
            .all(|p| p.exact != Some(false) && p.composite_zero != Some(false))
    }

    /// Whether the cokernels across the window are pairwise non-isomorphic.
    pub fn cokernels_pairwise_distinct(&self) -> bool {
        let ps = &self.positions;
        (0..ps.len())
            .all(|i| (i + 1..ps.len()).all(|j| !ps[i].cokernel.is_isomorphic(&ps[j].cokernel)))
    }

    /// Least `p ≥ 1` with cokernels at `n` and `n + p` isomorphic across the window.
    pub fn cokernel_period(&self) -> Option<usize> {
        let ps = &self.positions;
        (1..ps.len())
            .find(|&p| (0..ps.len() - p).all(|i| ps[i].cokernel.is_isomorphic(&ps[i + p].cokernel)))
    }
}

/// Positions `n` from `−⌊w/2⌋` to `w − 1 − ⌊w/2⌋`.
pub fn schulz_complex_check(ctx: &AlgebraCtx, window: usize) -> Result<SchulzReport> {
    if window == 0 {
        return Err(Error::InvalidParameter("window must be positive".into()));
    }
    let f = ctx.field();
    let minus_q = -ctx.q();
    let lo = -((window / 2) as i64);
    let element = |n: i64| -> Result<AElt> {
        let c = minus_q.pow(n + 1)?;
        Ok(AElt::new([f.zero(), f.one(), c, f.zero()]))
    };
    let right = |a: &AElt| AMatrix::from_fn(f, 1, 1, |_, _| a.clone()).right_action(ctx, 0);
    let free = AModule::free(1, ctx);
    let mut positions = Vec::with_capacity(window);
    for step in 0..window {
        let n = lo + step as i64;
        let a = element(n)?;
        let map = right(&a);
        let (composite_zero, exact) = if step == 0 {
            (None, None)
        } else {
            let below = right(&element(n - 1)?);
            (
                Some((&below * &map).is_zero()),
                Some(below.kernel_space() == map.image()),
            )
        };
        let cokernel = free.quotient(&map.image())?;
        let class = cokernel.classify();
        positions.push(SchulzPosition {
            n,
            coefficient: a.coeff(2).clone(),
            composite_zero,
            exact,
            cokernel,
            class,
        });
    }
    Ok(SchulzReport { positions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ExtScalar;
    use crate::random;

    #[test]
    fn reduction_examples() {
        let ctx = AlgebraCtx::rationals(2);
        let red = reduce_factorization(&Factorization::trivial(&ctx));
        assert!(red.d.is_zero());
        let basic = reduce_factorization(&Factorization::basic(&ctx));
        assert!(basic.d.mul(&basic.c, &ctx).is_zero());
        assert!(basic.c.nu(&ctx, 1).mul(&basic.d, &ctx).is_zero());
    }

    #[test]
    fn acyclic_examples() {
        let ctx = AlgebraCtx::rationals(2);
        for f in [
            Factorization::trivial(&ctx),
            Factorization::basic(&ctx),
            Factorization::canonical(3, &ctx.scalar(2), &ctx).unwrap(),
        ] {
            let rep = check_acyclic(&f);
            assert!(rep.is_acyclic(), "{rep:?}");
            assert_eq!(rep.image_c_dim + rep.image_d_dim, 4 * f.rank());
        }
    }

    #[test]
    fn image_of_canonical_objects() {
        let ctx = AlgebraCtx::rationals(2);
        let f = ctx.field();
        let one = ExtScalar::Finite(f.one());
        let c1 = image_module(&Factorization::canonical(1, &f.one(), &ctx).unwrap());
        assert_eq!(c1.dim(), 2);
        assert!(c1.classify().unwrap().is_single(1, &one));
        let three = ctx.scalar(3);
        let c = Factorization::canonical(2, &three, &ctx).unwrap();
        assert!(image_module(&c)
            .classify()
            .unwrap()
            .is_single(2, &ExtScalar::Finite(three)));
        let block = image_module_block_form(&c).unwrap();
        assert!(block.is_isomorphic(&image_module(&c)));
        let free = image_module(&Factorization::trivial(&ctx));
        assert!(free.is_isomorphic(&AModule::free(1, &ctx)));
    }

    #[test]
    fn block_form_matches_image_on_random_objects() {
        let ctx = AlgebraCtx::rationals(3);
        let mut rng = random::rng(21);
        for rank in 1..=3 {
            let f = random::unit_free_factorization(&ctx, &mut rng, rank).unwrap();
            let img = image_module(&f);
            assert_eq!(img.x().rank(), rank);
            assert_eq!(img.y().rank(), rank);
            assert!(img.is_isomorphic(&image_module_block_form(&f).unwrap()));
        }
    }

    #[test]
    fn schulz_window() {
        let ctx = AlgebraCtx::rationals(2);
        let rep = schulz_complex_check(&ctx, 7).unwrap();
        assert!(rep.all_exact());
        assert!(rep.cokernels_pairwise_distinct());
        let one = AlgebraCtx::rationals(1);
        let rep = schulz_complex_check(&one, 7).unwrap();
        assert!(rep.all_exact());
        assert_eq!(rep.cokernel_period(), Some(2));
    }
}
