//! Seeded generators for randomized checks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraCtx, BElt, B_DIM};
use crate::error::Result;
use crate::factorization::{BMatrix, FactMorphism, Factorization};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

pub use rand::SeedableRng;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over `F_p`; over `Q` a small fraction with numerator in
/// `[-bound, bound]` and denominator in `[1, 3]`.
pub fn scalar(field: FieldSpec, rng: &mut SeededRng, bound: i64) -> Scalar {
    match field.order() {
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
        None => {
            let num = rng.gen_range(-bound..=bound);
            let den = rng.gen_range(1..=3);
            field.ratio(num, den).expect("positive denominator")
        }
    }
}

pub fn nonzero_scalar(field: FieldSpec, rng: &mut SeededRng, bound: i64) -> Scalar {
    loop {
        let s = scalar(field, rng, bound);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn matrix(field: FieldSpec, rng: &mut SeededRng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| scalar(field, rng, 3))
}

/// Rejection sampling; the acceptance rate is bounded below for every field.
pub fn invertible_matrix(field: FieldSpec, rng: &mut SeededRng, n: usize) -> Matrix {
    loop {
        let m = matrix(field, rng, n, n);
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn b_element(field: FieldSpec, rng: &mut SeededRng) -> BElt {
    BElt::from_vec(field, (0..B_DIM).map(|_| scalar(field, rng, 3)).collect())
        .expect("five coordinates")
}

pub fn b_matrix(field: FieldSpec, rng: &mut SeededRng, rows: usize, cols: usize) -> BMatrix {
    BMatrix::from_fn(field, rows, cols, |_, _| b_element(field, rng))
}

/// A `B`-matrix with invertible constant part, hence invertible over `B`.
pub fn invertible_b_matrix(field: FieldSpec, rng: &mut SeededRng, n: usize) -> BMatrix {
    let constant = BMatrix::from_scalar_matrix(&invertible_matrix(field, rng, n));
    let mut radical = b_matrix(field, rng, n, n);
    for i in 0..n {
        for j in 0..n {
            let e = &radical[(i, j)];
            let mut c = e.coeffs().clone();
            c[0] = field.zero();
            radical[(i, j)] = BElt::new(c);
        }
    }
    &constant + &radical
}

/// `(xC₁ + yC₂, ...)` for random invertible `C₁, C₂`.
pub fn invertible_pair_factorization(
    ctx: &AlgebraCtx,
    rng: &mut SeededRng,
    rank: usize,
) -> Factorization {
    let f = ctx.field();
    let c1 = invertible_matrix(f, rng, rank);
    let c2 = invertible_matrix(f, rng, rank);
    Factorization::from_invertible_pair(&c1, &c2, ctx).expect("invertible inputs")
}

/// A unit-free object not in the special `xC₁ + yC₂` shape: an invertible-pair
/// object transported along a random isomorphism. The radical is a two-sided
/// ideal, so the result stays unit-free.
pub fn unit_free_factorization(
    ctx: &AlgebraCtx,
    rng: &mut SeededRng,
    rank: usize,
) -> Result<Factorization> {
    let base = invertible_pair_factorization(ctx, rng, rank);
    let f = ctx.field();
    let p = invertible_b_matrix(f, rng, rank);
    let q = invertible_b_matrix(f, rng, rank);
    Ok(base.conjugate(&p, &q)?.0)
}

/// A random element of the morphism space, as a random combination of its basis.
pub fn morphism(
    source: &Factorization,
    target: &Factorization,
    rng: &mut SeededRng,
) -> FactMorphism {
    let f = source.ctx().field();
    FactMorphism::space(source, target)
        .into_iter()
        .fold(FactMorphism::zero(source, target), |acc, m| {
            acc.add(&m.scale(&scalar(f, rng, 2))).expect("same ends")
        })
}
